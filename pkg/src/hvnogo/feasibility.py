"""Which subsets of {objectivity, determinism, independence} admit a model?

A *settings family* is a collection of experimental settings sharing the
conditional statistics (e_p, e_w) but differing in the apparatus marginal
x.  The three classical assumptions are formalized as:

* determinism: probability mass sits on atoms with pinned outcomes.  For
  label-carrying models the eight ontic-table cells are exactly those
  atoms, so the table itself is the decision variable.
* independence: one atom-weight vector serves every setting (the setting
  is a free input that does not act back on the hidden state).
* objectivity: each atom carries a fixed binary label in {p, w}, revealed
  as the matching conditional statistics in the matching apparatus outcome.

:func:`check_triple` stacks all three over every setting and decides
feasibility with an exact certificate: with two different x values the
system is infeasible, and that is the no-go theorem.  The three
``model_drop_*`` constructors then witness that dropping any single
assumption restores consistency, and :func:`validate_witness` audits each
witness against the two retained assumptions in exact arithmetic.

In the triple check the deterministic responses are taken
setting-independent; setting-indexed responses are only granted to the
drop-objectivity witness, where they are the whole point.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Union

from .dist import GeneralParams, JointDist, format_rational, joint_from_params, parse_rational
from .errors import MalformedInput, MalformedModel, TooManySettings
from .exactlp import FeasibilityReport, LinearSystem, lp_feasible
from .family import LambdaLabel, OnticTable, cell_index, lambda_marginal, special_solution

#: Largest explicit atom set model_drop_objectivity will write out (4^8).
DEFAULT_ATOM_BUDGET = 4**8

_OUTCOME_PAIRS = ((0, 0), (0, 1), (1, 0), (1, 1))


def _as_probability_fraction(value, what: str) -> Fraction:
    if isinstance(value, float):
        raise TypeError(f"{what}: floats are inexact; pass a Fraction, int, or rational string")
    try:
        v = Fraction(value)
    except (TypeError, ValueError) as exc:
        raise TypeError(f"{what} must be an exact rational") from exc
    if v < 0 or v > 1:
        raise ValueError(f"{what} = {v} outside [0, 1]")
    return v


@dataclass(frozen=True)
class Setting:
    """One experimental setting: a label and its apparatus marginal x."""

    label: str
    x: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _as_probability_fraction(self.x, f"setting {self.label!r}: x"))


@dataclass(frozen=True)
class SettingsFamily:
    """Settings sharing (e_p, e_w); only the apparatus marginal x varies."""

    e_p: Fraction
    e_w: Fraction
    settings: tuple[Setting, ...]

    def __post_init__(self):
        object.__setattr__(self, "e_p", _as_probability_fraction(self.e_p, "e_p"))
        object.__setattr__(self, "e_w", _as_probability_fraction(self.e_w, "e_w"))
        settings = tuple(self.settings)
        if not settings:
            raise ValueError("a settings family needs at least one setting")
        labels = [s.label for s in settings]
        if len(set(labels)) != len(labels):
            raise ValueError(f"setting labels must be unique, got {labels}")
        object.__setattr__(self, "settings", settings)

    def params_for(self, setting: Setting) -> GeneralParams:
        return GeneralParams(setting.x, self.e_p, self.e_w)

    def joint_for(self, setting: Setting) -> JointDist:
        return joint_from_params(self.params_for(setting))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.settings)

    def to_json_dict(self) -> dict:
        return {
            "e_p": format_rational(self.e_p),
            "e_w": format_rational(self.e_w),
            "settings": [{"label": s.label, "x": format_rational(s.x)} for s in self.settings],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "SettingsFamily":
        for key in ("e_p", "e_w", "settings"):
            if key not in data:
                raise MalformedInput(f"settings family is missing field {key!r}")
        try:
            e_p = parse_rational(str(data["e_p"]))
        except ValueError as exc:
            raise MalformedInput(f"field 'e_p': {exc}") from exc
        try:
            e_w = parse_rational(str(data["e_w"]))
        except ValueError as exc:
            raise MalformedInput(f"field 'e_w': {exc}") from exc
        raw = data["settings"]
        if not isinstance(raw, (list, tuple)) or not raw:
            raise MalformedInput("field 'settings' must be a nonempty list")
        settings = []
        for i, item in enumerate(raw):
            if not isinstance(item, Mapping) or "label" not in item or "x" not in item:
                raise MalformedInput(f"settings[{i}] needs fields 'label' and 'x'")
            try:
                x = parse_rational(str(item["x"]))
            except ValueError as exc:
                raise MalformedInput(f"settings[{i}].x: {exc}") from exc
            settings.append(Setting(str(item["label"]), x))
        try:
            return cls(e_p, e_w, tuple(settings))
        except ValueError as exc:
            raise MalformedInput(str(exc)) from exc


def triple_system(family: SettingsFamily) -> LinearSystem:
    """All three assumptions stacked across the family's settings.

    Variables: one shared eight-cell table (independence + determinism).
    Rows: four adequacy equations per setting, then the two objectivity
    product equations (shared, since e_p and e_w are setting-independent).
    """
    rows: list[tuple[Fraction, ...]] = []
    rhs: list[Fraction] = []
    labels: list[str] = []
    for setting in family.settings:
        joint = family.joint_for(setting)
        for a in (0, 1):
            for b in (0, 1):
                row = [Fraction(0)] * 8
                row[cell_index(a, b, "p")] = Fraction(1)
                row[cell_index(a, b, "w")] = Fraction(1)
                rows.append(tuple(row))
                rhs.append(joint.entry(a, b))
                labels.append(f"adequacy[{setting.label}](a={a},b={b})")
    row = [Fraction(0)] * 8
    row[cell_index(0, 0, "p")] = 1 - family.e_p
    row[cell_index(1, 0, "p")] = -family.e_p
    rows.append(tuple(row))
    rhs.append(Fraction(0))
    labels.append("objectivity(p-statistics at b=0)")
    row = [Fraction(0)] * 8
    row[cell_index(0, 1, "w")] = 1 - family.e_w
    row[cell_index(1, 1, "w")] = -family.e_w
    rows.append(tuple(row))
    rhs.append(Fraction(0))
    labels.append("objectivity(w-statistics at b=1)")
    return LinearSystem(tuple(rows), tuple(rhs), tuple(labels))


def check_triple(family: SettingsFamily) -> FeasibilityReport:
    """Can determinism, independence, and objectivity coexist over the family?

    Feasible exactly when every setting shares one apparatus marginal x.
    Infeasible runs return a Farkas certificate over the stacked system
    (:func:`triple_system` rebuilds it for auditing).
    """
    system = triple_system(family)
    report = lp_feasible(system)
    xs = sorted({s.x for s in family.settings})
    if report.feasible:
        table = OnticTable(report.witness)
        narrative = (
            f"feasible: all settings share the apparatus marginal x = {format_rational(xs[0])}; "
            "the witness table reproduces every setting's statistics while keeping "
            "determinism, independence, and objectivity"
        )
        return FeasibilityReport(True, table, None, narrative)
    clash = ", ".join(format_rational(x) for x in xs)
    active = [
        system.label(i)
        for i in range(system.num_rows)
        if report.certificate is not None and report.certificate[i] != 0
    ]
    narrative = (
        "infeasible: one setting-independent table fixes the b=0 marginal once, "
        f"but the settings demand it equal each of: {clash}. "
        "Certificate rows: " + ", ".join(active)
    )
    return FeasibilityReport(False, None, report.certificate, narrative)


# ---------------------------------------------------------------------------
# Pairwise witness models
# ---------------------------------------------------------------------------


class WitnessMode(enum.Enum):
    DROP_INDEPENDENCE = "DropIndependence"
    DROP_OBJECTIVITY = "DropObjectivity"
    DROP_DETERMINISM = "DropDeterminism"


@dataclass(frozen=True)
class PerSettingTables:
    """Drop-independence payload: one labelled table per setting."""

    tables: dict[str, OnticTable]

    def __post_init__(self):
        for label, table in self.tables.items():
            if not isinstance(table, OnticTable):
                raise TypeError(f"table for setting {label!r} must be an OnticTable")


@dataclass(frozen=True)
class OutcomeAtom:
    """One deterministic (setting -> outcome pair) response, with its weight."""

    assignments: tuple[tuple[int, int], ...]
    weight: Fraction

    def __post_init__(self):
        assignments = tuple(tuple(pair) for pair in self.assignments)
        if any(pair not in _OUTCOME_PAIRS for pair in assignments):
            raise ValueError(f"assignments must be outcome-pair bits, got {assignments}")
        object.__setattr__(self, "assignments", assignments)
        object.__setattr__(self, "weight", _as_probability_fraction(self.weight, "OutcomeAtom.weight"))


@dataclass(frozen=True)
class OutcomeAtomModel:
    """Drop-objectivity payload: explicit setting-indexed deterministic atoms."""

    setting_labels: tuple[str, ...]
    atoms: tuple[OutcomeAtom, ...]


@dataclass(frozen=True)
class SettingResponse:
    """Stochastic responses of one atom under one setting."""

    b0: Fraction
    a0_given_b0: Fraction
    a0_given_b1: Fraction

    def __post_init__(self):
        for name in ("b0", "a0_given_b0", "a0_given_b1"):
            value = _as_probability_fraction(getattr(self, name), f"SettingResponse.{name}")
            object.__setattr__(self, name, value)


@dataclass(frozen=True)
class ResponseAtom:
    """A labelled hidden state with per-setting stochastic responses."""

    name: str
    weight: Fraction
    label: LambdaLabel
    responses: dict[str, SettingResponse]

    def __post_init__(self):
        object.__setattr__(self, "weight", _as_probability_fraction(self.weight, f"atom {self.name!r} weight"))
        if self.label not in ("p", "w"):
            raise ValueError(f"atom {self.name!r} has label {self.label!r}, expected 'p' or 'w'")
        for label, response in self.responses.items():
            if not isinstance(response, SettingResponse):
                raise TypeError(f"atom {self.name!r}: response for {label!r} must be a SettingResponse")


@dataclass(frozen=True)
class StochasticResponseModel:
    """Drop-determinism payload: labelled atoms with stochastic responses."""

    atoms: tuple[ResponseAtom, ...]


Payload = Union[PerSettingTables, OutcomeAtomModel, StochasticResponseModel]

_EXPECTED_PAYLOAD = {
    WitnessMode.DROP_INDEPENDENCE: PerSettingTables,
    WitnessMode.DROP_OBJECTIVITY: OutcomeAtomModel,
    WitnessMode.DROP_DETERMINISM: StochasticResponseModel,
}

_DROPPED_CHECK = {
    WitnessMode.DROP_INDEPENDENCE: "independence",
    WitnessMode.DROP_OBJECTIVITY: "objectivity",
    WitnessMode.DROP_DETERMINISM: "determinism",
}


@dataclass(frozen=True)
class WitnessModel:
    """A concrete model keeping two assumptions and abandoning the third."""

    mode: WitnessMode
    payload: Payload


def model_drop_independence(family: SettingsFamily) -> WitnessModel:
    """Keep determinism and objectivity; let the hidden state depend on the
    setting.  Each setting gets its own perfectly-correlated special table,
    so the label marginal tracks (x, 1-x) and varies with the setting."""
    tables = {s.label: special_solution(family.params_for(s)) for s in family.settings}
    return WitnessModel(WitnessMode.DROP_INDEPENDENCE, PerSettingTables(tables))


def model_drop_objectivity(family: SettingsFamily, atom_budget: int = DEFAULT_ATOM_BUDGET) -> WitnessModel:
    """Keep determinism (setting-indexed) and independence; carry no
    wave/particle label at all.

    The atom set is every assignment of an outcome pair to each setting;
    an atom's weight is the product of the per-setting joint entries it
    selects, so each setting's marginal reproduces its joint exactly.

    Raises :class:`TooManySettings` when 4^k would exceed ``atom_budget``.
    """
    k = len(family.settings)
    if 4**k > atom_budget:
        raise TooManySettings(f"{k} settings need 4^{k} = {4 ** k} atoms, over the budget of {atom_budget}")
    joints = [family.joint_for(s) for s in family.settings]
    atoms = []
    for combo in itertools.product(_OUTCOME_PAIRS, repeat=k):
        weight = Fraction(1)
        for joint, (a, b) in zip(joints, combo):
            weight *= joint.entry(a, b)
        atoms.append(OutcomeAtom(tuple(combo), weight))
    return WitnessModel(WitnessMode.DROP_OBJECTIVITY, OutcomeAtomModel(family.labels, tuple(atoms)))


def model_drop_determinism(family: SettingsFamily) -> WitnessModel:
    """Keep objectivity and independence; let atoms respond stochastically.

    Two atoms with fixed weights (1/2, 1/2) carry the labels p and w.  Both
    respond identically: b=0 with probability x under setting x, then the
    observed conditionals (e_p at b=0, e_w at b=1).  Conditioning on any
    (b, label) therefore reveals exactly the matching statistics."""
    responses = {
        s.label: SettingResponse(s.x, family.e_p, family.e_w) for s in family.settings
    }
    atoms = (
        ResponseAtom("Lambda_p", Fraction(1, 2), "p", dict(responses)),
        ResponseAtom("Lambda_w", Fraction(1, 2), "w", dict(responses)),
    )
    return WitnessModel(WitnessMode.DROP_DETERMINISM, StochasticResponseModel(atoms))


# ---------------------------------------------------------------------------
# Witness validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AssumptionCheck:
    """Pass/fail verdict for one assumption (or for adequacy)."""

    name: str
    retained: bool
    passed: bool
    detail: str


@dataclass(frozen=True)
class WitnessReport:
    """Exact audit of a witness model against its family."""

    mode: WitnessMode
    checks: tuple[AssumptionCheck, ...]

    @property
    def overall_pass(self) -> bool:
        return all(c.passed for c in self.checks if c.retained)

    def check(self, name: str) -> AssumptionCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _model_joints(model: WitnessModel, family: SettingsFamily) -> dict[str, tuple[Fraction, ...]]:
    """Predicted (a, b) statistics per setting, as raw 4-tuples in 00,01,10,11 order."""
    payload = model.payload
    out: dict[str, tuple[Fraction, ...]] = {}
    if isinstance(payload, PerSettingTables):
        for s in family.settings:
            out[s.label] = payload.tables[s.label].observed_joint().entries
    elif isinstance(payload, OutcomeAtomModel):
        for i, s in enumerate(family.settings):
            cells = {pair: Fraction(0) for pair in _OUTCOME_PAIRS}
            for atom in payload.atoms:
                cells[atom.assignments[i]] += atom.weight
            out[s.label] = tuple(cells[(a, b)] for a in (0, 1) for b in (0, 1))
    else:
        for s in family.settings:
            e00 = e01 = e10 = e11 = Fraction(0)
            for atom in payload.atoms:
                r = atom.responses[s.label]
                e00 += atom.weight * r.b0 * r.a0_given_b0
                e01 += atom.weight * (1 - r.b0) * r.a0_given_b1
                e10 += atom.weight * r.b0 * (1 - r.a0_given_b0)
                e11 += atom.weight * (1 - r.b0) * (1 - r.a0_given_b1)
            out[s.label] = (e00, e01, e10, e11)
    return out


def _check_structure(model: WitnessModel, family: SettingsFamily) -> None:
    payload = model.payload
    expected = _EXPECTED_PAYLOAD[model.mode]
    if not isinstance(payload, expected):
        raise MalformedModel(
            f"mode {model.mode.value} expects a {expected.__name__} payload, got {type(payload).__name__}"
        )
    if isinstance(payload, PerSettingTables):
        have = set(payload.tables)
        want = set(family.labels)
        if have != want:
            raise MalformedModel(f"per-setting tables keyed by {sorted(have)}, family has {sorted(want)}")
    elif isinstance(payload, OutcomeAtomModel):
        if payload.setting_labels != family.labels:
            raise MalformedModel(
                f"atom model ordered by {list(payload.setting_labels)}, family has {list(family.labels)}"
            )
        k = len(family.settings)
        for atom in payload.atoms:
            if len(atom.assignments) != k:
                raise MalformedModel(f"atom assigns {len(atom.assignments)} outcomes for {k} settings")
    else:
        if not payload.atoms:
            raise MalformedModel("stochastic response model has no atoms")
        for atom in payload.atoms:
            missing = [lbl for lbl in family.labels if lbl not in atom.responses]
            if missing:
                raise MalformedModel(f"atom {atom.name!r} lacks responses for setting {missing[0]!r}")


def _adequacy_check(model: WitnessModel, family: SettingsFamily) -> AssumptionCheck:
    joints = _model_joints(model, family)
    for s in family.settings:
        want = family.joint_for(s).entries
        got = joints[s.label]
        for (a, b), w, g in zip(_OUTCOME_PAIRS, want, got):
            if g != w:
                return AssumptionCheck(
                    "adequacy",
                    True,
                    False,
                    f"setting {s.label!r}: model gives p(a={a},b={b}) = {g}, observed {w}",
                )
    return AssumptionCheck("adequacy", True, True, "every setting's joint reproduced exactly")


def _branch_masses(model: WitnessModel, family: SettingsFamily, setting: Setting):
    """p(a, b, lam) masses for label-carrying payloads, as a dict."""
    payload = model.payload
    masses = {}
    if isinstance(payload, PerSettingTables):
        table = payload.tables[setting.label]
        for a in (0, 1):
            for b in (0, 1):
                for lam in ("p", "w"):
                    masses[(a, b, lam)] = table.mass(a, b, lam)
    else:  # StochasticResponseModel
        for a in (0, 1):
            for b in (0, 1):
                for lam in ("p", "w"):
                    masses[(a, b, lam)] = Fraction(0)
        for atom in payload.atoms:
            r = atom.responses[setting.label]
            masses[(0, 0, atom.label)] += atom.weight * r.b0 * r.a0_given_b0
            masses[(1, 0, atom.label)] += atom.weight * r.b0 * (1 - r.a0_given_b0)
            masses[(0, 1, atom.label)] += atom.weight * (1 - r.b0) * r.a0_given_b1
            masses[(1, 1, atom.label)] += atom.weight * (1 - r.b0) * (1 - r.a0_given_b1)
    return masses


def _objectivity_check(model: WitnessModel, family: SettingsFamily) -> AssumptionCheck:
    """Support-sensitive revelation check.

    For each setting and each apparatus outcome that occurs at all, the
    matching label must occur with it, and conditioning on (outcome,
    matching label) must reveal exactly the matching statistics.  A label
    that never accompanies its own apparatus outcome makes the revelation
    equation unsatisfiable, not vacuous.
    """
    retained = model.mode is not WitnessMode.DROP_OBJECTIVITY
    if isinstance(model.payload, OutcomeAtomModel):
        return AssumptionCheck(
            "objectivity", retained, False, "model carries no wave/particle labels"
        )
    expectations = (
        (0, "p", family.e_p, "p-statistics revelation at b=0"),
        (1, "w", family.e_w, "w-statistics revelation at b=1"),
    )
    for s in family.settings:
        masses = _branch_masses(model, family, s)
        for b, lam, e_target, constraint in expectations:
            outcome_mass = sum(masses[(a, b, l)] for a in (0, 1) for l in ("p", "w"))
            if outcome_mass == 0:
                continue  # the apparatus never shows this outcome; nothing to reveal
            match_mass = masses[(0, b, lam)] + masses[(1, b, lam)]
            if match_mass == 0:
                return AssumptionCheck(
                    "objectivity",
                    retained,
                    False,
                    f"setting {s.label!r}: outcome b={b} occurs but never with label {lam!r}; "
                    f"{constraint} cannot hold",
                )
            if masses[(0, b, lam)] * (1 - e_target) != masses[(1, b, lam)] * e_target:
                got = masses[(0, b, lam)] / match_mass
                return AssumptionCheck(
                    "objectivity",
                    retained,
                    False,
                    f"setting {s.label!r}: {constraint} fails; p(a=0|b={b},lam={lam}) = {got}, expected {e_target}",
                )
    return AssumptionCheck(
        "objectivity", retained, True, "each label reveals its matching statistics in its matching outcome"
    )


def _determinism_check(model: WitnessModel, family: SettingsFamily) -> AssumptionCheck:
    retained = model.mode is not WitnessMode.DROP_DETERMINISM
    payload = model.payload
    if isinstance(payload, (PerSettingTables, OutcomeAtomModel)):
        return AssumptionCheck(
            "determinism", retained, True, "all probability mass sits on atoms with pinned outcomes"
        )
    for atom in payload.atoms:
        for label in family.labels:
            r = atom.responses[label]
            for field_name, v in (("b0", r.b0), ("a0_given_b0", r.a0_given_b0), ("a0_given_b1", r.a0_given_b1)):
                if v != 0 and v != 1:
                    return AssumptionCheck(
                        "determinism",
                        retained,
                        False,
                        f"atom {atom.name!r}, setting {label!r}: response {field_name} = {v} "
                        "is strictly between 0 and 1",
                    )
    return AssumptionCheck("determinism", retained, True, "all responses are 0 or 1")


def _independence_check(model: WitnessModel, family: SettingsFamily) -> AssumptionCheck:
    retained = model.mode is not WitnessMode.DROP_INDEPENDENCE
    payload = model.payload
    if isinstance(payload, PerSettingTables):
        marginals = {s.label: lambda_marginal(payload.tables[s.label]).p0 for s in family.settings}
        values = set(marginals.values())
        if len(values) > 1:
            listing = ", ".join(f"{lbl}: {format_rational(v)}" for lbl, v in marginals.items())
            return AssumptionCheck(
                "independence", retained, False, f"label marginal p(lam=p) depends on the setting ({listing})"
            )
        return AssumptionCheck("independence", retained, True, "hidden-state distribution identical across settings")
    total = sum(atom.weight for atom in payload.atoms)
    if total != 1:
        return AssumptionCheck(
            "independence", retained, False, f"atom weights sum to {total}, not a probability distribution"
        )
    return AssumptionCheck(
        "independence", retained, True, "one fixed atom-weight vector serves every setting"
    )


def validate_witness(model: WitnessModel, family: SettingsFamily) -> WitnessReport:
    """Audit a witness: adequacy plus the two retained assumptions must pass.

    The dropped assumption is checked too and reported informationally
    (``retained = False``); it is expected to fail for honest witnesses.

    Raises :class:`MalformedModel` when the payload does not structurally
    match the mode or the family.
    """
    _check_structure(model, family)
    checks = (
        _adequacy_check(model, family),
        _determinism_check(model, family),
        _independence_check(model, family),
        _objectivity_check(model, family),
    )
    return WitnessReport(model.mode, checks)


# ---------------------------------------------------------------------------
# JSON forms
# ---------------------------------------------------------------------------


def witness_model_to_json(model: WitnessModel) -> dict:
    payload = model.payload
    if isinstance(payload, PerSettingTables):
        body = {"tables": {label: table.to_json_dict() for label, table in sorted(payload.tables.items())}}
    elif isinstance(payload, OutcomeAtomModel):
        body = {
            "setting_labels": list(payload.setting_labels),
            "atoms": [
                {"assignments": [list(pair) for pair in atom.assignments], "weight": format_rational(atom.weight)}
                for atom in payload.atoms
            ],
        }
    else:
        body = {
            "atoms": [
                {
                    "name": atom.name,
                    "weight": format_rational(atom.weight),
                    "label": atom.label,
                    "responses": {
                        label: {
                            "b0": format_rational(r.b0),
                            "a0_given_b0": format_rational(r.a0_given_b0),
                            "a0_given_b1": format_rational(r.a0_given_b1),
                        }
                        for label, r in sorted(atom.responses.items())
                    },
                }
                for atom in payload.atoms
            ]
        }
    return {"mode": model.mode.value, "payload": body}


def witness_report_to_json(report: WitnessReport) -> dict:
    return {
        "mode": report.mode.value,
        "overall_pass": report.overall_pass,
        "checks": [
            {"name": c.name, "retained": c.retained, "passed": c.passed, "detail": c.detail}
            for c in report.checks
        ],
    }


def feasibility_report_to_json(report: FeasibilityReport) -> dict:
    witness: Optional[object]
    if report.witness is None:
        witness = None
    elif isinstance(report.witness, OnticTable):
        witness = report.witness.to_json_dict()
    else:
        witness = [format_rational(v) for v in report.witness]
    return {
        "feasible": report.feasible,
        "witness": witness,
        "certificate": None if report.certificate is None else [format_rational(v) for v in report.certificate],
        "narrative": report.narrative,
    }
