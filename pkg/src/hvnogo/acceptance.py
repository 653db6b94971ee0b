"""Self-contained acceptance checks, shared by the test suite and the CLI.

Each criterion function is deterministic (fixed seeds, no timing inside
the detail text) and returns a :class:`CriterionResult`; ``run_all`` is
what ``hvnogo selftest`` prints.  The stated runtime limits live in
``RUNTIME_LIMITS`` and are enforced by the test suite.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from numpy.random import Generator, Philox

from .dist import REAL_TOL, GeneralParams, JointDist, joint_from_params, tv_distance
from .exactlp import enumerate_basic_solutions, matrix_rank, residual, verify_certificate
from .family import (
    conditional_given,
    constraint_system,
    instantiate,
    lambda_marginal,
    solve_family,
    special_solution,
)
from .feasibility import (
    Setting,
    SettingsFamily,
    check_triple,
    model_drop_determinism,
    model_drop_independence,
    model_drop_objectivity,
    triple_system,
    validate_witness,
)
from .montecarlo import compare, fringe_sweep, sample_events
from .quantum import joint_state, quantum_joint, quantum_params, wave_statistics


@dataclass(frozen=True)
class CriterionResult:
    index: int
    name: str
    passed: bool
    detail: str
    elapsed: float


#: Wall-clock budgets (seconds) for the criteria that state one.
RUNTIME_LIMITS = {1: 1.0, 3: 10.0, 6: 10.0, 8: 10.0}

_GRID_11 = [i * math.pi / 10.0 for i in range(11)]


def _rng(seed: int) -> Generator:
    return Generator(Philox(key=seed))


def _interior_fraction(rng: Generator, max_den: int = 12) -> Fraction:
    den = int(rng.integers(2, max_den + 1))
    num = int(rng.integers(1, den))
    return Fraction(num, den)


def _any_fraction(rng: Generator, max_den: int = 12) -> Fraction:
    """A rational in [0, 1], boundary included."""
    den = int(rng.integers(1, max_den + 1))
    num = int(rng.integers(0, den + 1))
    return Fraction(num, den)


def _interior_params(rng: Generator) -> GeneralParams:
    return GeneralParams(_interior_fraction(rng), _interior_fraction(rng), _interior_fraction(rng))


def _random_family(rng: Generator, *, distinct_x: bool, max_settings: int = 4) -> SettingsFamily:
    k = int(rng.integers(2, max_settings + 1))
    e_p = _interior_fraction(rng)
    e_w = _interior_fraction(rng)
    while e_w == e_p:
        e_w = _interior_fraction(rng)
    xs = [_interior_fraction(rng) for _ in range(k)]
    if distinct_x:
        while xs[1] == xs[0]:
            xs[1] = _interior_fraction(rng)
    else:
        xs = [xs[0]] * k
    settings = tuple(Setting(f"alpha{i + 1}", x) for i, x in enumerate(xs))
    return SettingsFamily(e_p, e_w, settings)


def criterion_1() -> CriterionResult:
    """Squared amplitudes equal the closed-form joint on an 11x11 grid."""
    start = time.perf_counter()
    worst = 0.0
    for alpha in _GRID_11:
        for phi in _GRID_11:
            born = joint_state(alpha, phi).probabilities()
            closed = quantum_joint(alpha, phi)
            worst = max(worst, max(abs(p - q) for p, q in zip(born.entries, closed.entries)))
    passed = worst <= REAL_TOL
    return CriterionResult(
        1,
        "Born-rule/closed-form agreement",
        passed,
        f"max entrywise |amplitude^2 - closed form| = {worst!r} over 121 grid points",
        time.perf_counter() - start,
    )


def criterion_2() -> CriterionResult:
    """The closed-form joint factorizes through (x, e_p, e_w) on the grid."""
    start = time.perf_counter()
    worst = 0.0
    for alpha in _GRID_11:
        for phi in _GRID_11:
            direct = quantum_joint(alpha, phi)
            via_params = joint_from_params(quantum_params(alpha, phi))
            worst = max(worst, max(abs(p - q) for p, q in zip(direct.entries, via_params.entries)))
    passed = worst <= REAL_TOL
    return CriterionResult(
        2,
        "parameter reduction through (x, e_p, e_w)",
        passed,
        f"max entrywise reduction error = {worst!r} over 121 grid points",
        time.perf_counter() - start,
    )


_ST_GRID = [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]


def criterion_3() -> CriterionResult:
    """Rank 6, exact members, and no basic feasible point outside the family."""
    start = time.perf_counter()
    rng = _rng(301)
    problems = []
    for trial in range(200):
        params = _interior_params(rng)
        system = constraint_system(params)
        if matrix_rank(system.matrix) != 6:
            problems.append(f"trial {trial}: rank != 6 for {params}")
            break
        family = solve_family(params)
        s_max = family.s_range[1]
        t_max = family.t_range[1]
        for u in _ST_GRID:
            for v in _ST_GRID:
                member = instantiate(family, u * s_max, v * t_max)
                if any(r != 0 for r in residual(system, member.entries)):
                    problems.append(f"trial {trial}: nonzero residual at (s,t) grid point")
                    break
        for point in enumerate_basic_solutions(system):
            s, t = point[4], point[1]
            if not (0 <= s <= s_max and 0 <= t <= t_max):
                problems.append(f"trial {trial}: enumerated vertex outside the (s, t) ranges")
                break
            if instantiate(family, s, t).entries != point:
                problems.append(f"trial {trial}: enumerated vertex not reproduced by the closed form")
                break
        if problems:
            break
    detail = problems[0] if problems else "200 parameter triples: rank 6, exact members, enumerator confined to the family"
    return CriterionResult(3, "two-parameter solution family", not problems, detail, time.perf_counter() - start)


def criterion_4() -> CriterionResult:
    """Any cross-branch mass detaches the a-statistics from the label."""
    start = time.perf_counter()
    rng = _rng(401)
    problems = []
    for trial in range(200):
        params = _interior_params(rng)
        family = solve_family(params)
        s_max = family.s_range[1]
        t_max = family.t_range[1]
        for u in (Fraction(1, 3), Fraction(1)):
            member = instantiate(family, u * s_max, u * t_max)
            if conditional_given(member, 0, "w").as_tuple() != (params.e_p, 1 - params.e_p):
                problems.append(f"trial {trial}: p(a|b=0,lam=w) differs from (e_p, 1-e_p)")
                break
            if conditional_given(member, 1, "p").as_tuple() != (params.e_w, 1 - params.e_w):
                problems.append(f"trial {trial}: p(a|b=1,lam=p) differs from (e_w, 1-e_w)")
                break
        if problems:
            break
    detail = problems[0] if problems else (
        "200 parameter triples: every member with cross-branch mass shows apparatus-only statistics, exactly"
    )
    return CriterionResult(4, "duality collapse identities", not problems, detail, time.perf_counter() - start)


def criterion_5() -> CriterionResult:
    """The special solution's label marginal equals the apparatus marginal."""
    start = time.perf_counter()
    rng = _rng(501)
    problems = []
    for trial in range(200):
        params = GeneralParams(_any_fraction(rng), _any_fraction(rng), _any_fraction(rng))
        marginal = lambda_marginal(special_solution(params))
        if marginal.as_tuple() != (params.x, 1 - params.x):
            problems.append(f"trial {trial}: label marginal {marginal.as_tuple()} != (x, 1-x) for {params}")
            break
    detail = problems[0] if problems else "200 parameter triples (boundary included): p(lam) = (x, 1-x) exactly"
    return CriterionResult(5, "special-solution label marginal", not problems, detail, time.perf_counter() - start)


def criterion_6() -> CriterionResult:
    """Triple infeasibility with verified certificates; constant-x control."""
    start = time.perf_counter()
    rng = _rng(601)
    problems = []
    for trial in range(100):
        family = _random_family(rng, distinct_x=True)
        report = check_triple(family)
        if report.feasible:
            problems.append(f"trial {trial}: distinct-x family reported feasible")
            break
        if not verify_certificate(triple_system(family), report.certificate):
            problems.append(f"trial {trial}: certificate rejected by the verifier")
            break
    if not problems:
        for trial in range(100):
            family = _random_family(rng, distinct_x=False)
            report = check_triple(family)
            if not report.feasible:
                problems.append(f"constant-x trial {trial}: reported infeasible")
                break
            system = triple_system(family)
            if any(r != 0 for r in residual(system, report.witness.entries)):
                problems.append(f"constant-x trial {trial}: witness has nonzero residual")
                break
    detail = problems[0] if problems else (
        "100 distinct-x families infeasible with verified certificates; 100 constant-x families feasible with exact witnesses"
    )
    return CriterionResult(6, "triple infeasibility theorem", not problems, detail, time.perf_counter() - start)


def criterion_7() -> CriterionResult:
    """Dropping any one assumption admits an exactly validated witness."""
    start = time.perf_counter()
    rng = _rng(701)
    problems = []
    for trial in range(50):
        family = _random_family(rng, distinct_x=True, max_settings=3)
        for build in (model_drop_independence, model_drop_objectivity, model_drop_determinism):
            report = validate_witness(build(family), family)
            if not report.overall_pass:
                failed = [c.name for c in report.checks if c.retained and not c.passed]
                problems.append(f"trial {trial}: {build.__name__} failed {failed}")
                break
        if problems:
            break
    detail = problems[0] if problems else "50 families: all three pairwise witnesses pass exact validation"
    return CriterionResult(7, "pairwise compatibility witnesses", not problems, detail, time.perf_counter() - start)


def criterion_8() -> CriterionResult:
    """Monte Carlo reproduction of the fringe/flat phenomenology."""
    start = time.perf_counter()
    problems = []
    alpha = math.pi / 4.0
    grid = [2.0 * math.pi * i / 16.0 for i in range(17)]
    rows = fringe_sweep(alpha, grid, 100_000, seed=801)
    worst_wave = 0.0
    worst_flat = 0.0
    for row in rows:
        if row.f_a0_given_b1 is None or row.f_a0_given_b0 is None:
            problems.append(f"phi = {row.phi!r}: a conditioning outcome never fired")
            break
        worst_wave = max(worst_wave, abs(row.f_a0_given_b1 - wave_statistics(row.phi).p0))
        worst_flat = max(worst_flat, abs(row.f_a0_given_b0 - 0.5))
    if not problems and (worst_wave >= 0.02 or worst_flat >= 0.02):
        problems.append(f"sweep deviations too large: wave {worst_wave!r}, flat {worst_flat!r}")
    if not problems:
        exact = quantum_joint(math.pi / 3.0, math.pi / 4.0)
        counts = sample_events(exact, 1_000_000, seed=802)
        empirical = JointDist(tuple(Fraction(c, counts.total) for c in counts.as_tuple()))
        tv = float(tv_distance(empirical, exact))
        stat = compare(counts, exact)
        if tv >= 0.005:
            problems.append(f"million-shot TV distance {tv!r} not below 0.005")
        elif not stat.passed:
            problems.append(f"million-shot z_max {stat.z_max!r} above 5")
        else:
            detail = (
                f"17-point sweep: max fringe deviation {worst_wave!r}, max flat deviation {worst_flat!r}; "
                f"million-shot TV {tv!r}, z_max {stat.z_max!r}"
            )
    if problems:
        detail = problems[0]
    return CriterionResult(8, "Monte Carlo phenomenology", not problems, detail, time.perf_counter() - start)


ALL_CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
)


def run_all() -> list[CriterionResult]:
    return [fn() for fn in ALL_CRITERIA]
