"""Command-line entry point exposing every pipeline.

Subcommands::

    quantum      closed-form amplitudes, joint, and (x, e_p, e_w) parameters
    family       solution-family ranges, optional member, classification
    feasibility  triple check on a settings-family JSON file, with certificate
    demo         pairwise witness model for a dropped assumption, validated
    sweep        Monte Carlo fringe sweep as CSV
    selftest     run the acceptance criteria and print one line per criterion

Exit status: 0 success (including a feasible triple check), 1 usage or
parameter errors, 2 malformed input file, 3 infeasible triple check (the
expected scientific result, not an error), 4 failed selftest or failed
witness validation.

Angles accept plain radians ("0.7854") or the tokens "pi", "pi/4",
"3*pi/4" with an optional leading minus (negative values need the
"--flag=value" form).  Rationals use the "p/q" literal format with integer
shorthand.  Output is deterministic: repeating an
invocation (same flags, same --seed) reproduces it byte for byte, and
nothing is written on failure.

The environment variable HVNOGO_ATOM_BUDGET overrides the atom cap of the
drop-objectivity witness (default 4^8).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import acceptance
from .dist import GeneralParams, format_rational, parse_rational
from .errors import HvnogoError, MalformedInput
from .family import classify, instantiate, lambda_marginal, solve_family
from .feasibility import (
    DEFAULT_ATOM_BUDGET,
    SettingsFamily,
    check_triple,
    feasibility_report_to_json,
    model_drop_determinism,
    model_drop_independence,
    model_drop_objectivity,
    validate_witness,
    witness_model_to_json,
    witness_report_to_json,
)
from .montecarlo import fringe_sweep, sweep_to_csv
from .quantum import joint_state, quantum_joint, quantum_params

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MALFORMED_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_FAILED_CHECK = 4

_PI_FORM = re.compile(r"^\s*([+-]?)(?:(\d+)\s*\*\s*)?pi(?:\s*/\s*(\d+))?\s*$", re.IGNORECASE)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; this CLI reserves 2 for
    malformed input files, so usage problems are rerouted to exit 1."""

    def error(self, message):
        raise _UsageError(message)


def parse_angle(text: str) -> float:
    """Radians from a decimal literal or a pi token ("pi", "pi/4", "3*pi/4")."""
    m = _PI_FORM.match(text)
    if m:
        sign = -1.0 if m.group(1) == "-" else 1.0
        num = float(m.group(2)) if m.group(2) else 1.0
        den = float(m.group(3)) if m.group(3) else 1.0
        if den == 0:
            raise ValueError(f"zero denominator in angle {text!r}")
        return sign * num * math.pi / den
    try:
        value = float(text)
    except ValueError:
        raise ValueError(f"expected radians or a pi token, got {text!r}") from None
    if not math.isfinite(value):
        raise ValueError(f"angle must be finite, got {text!r}")
    return value


def parse_probability(text: str) -> Fraction:
    """Exact rational restricted to [0, 1]."""
    value = parse_rational(text)
    if value < 0 or value > 1:
        raise ValueError(f"probability {text!r} outside [0, 1]")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise ValueError(f"expected a nonnegative integer, got {text!r}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise ValueError(f"expected a positive integer, got {text!r}")
    return value


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _load_family(path: str) -> SettingsFamily:
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedInput(f"cannot read input file {path!r}: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"input file {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise MalformedInput(f"input file {path!r} must hold a JSON object")
    return SettingsFamily.from_json_dict(data)


def _atom_budget() -> int:
    raw = os.environ.get("HVNOGO_ATOM_BUDGET")
    if raw is None:
        return DEFAULT_ATOM_BUDGET
    try:
        value = int(raw)
        if value <= 0:
            raise ValueError
    except ValueError:
        raise _UsageError(f"HVNOGO_ATOM_BUDGET must be a positive integer, got {raw!r}") from None
    return value


def _cmd_quantum(args) -> tuple[int, str]:
    state = joint_state(args.alpha, args.phi)
    joint = quantum_joint(args.alpha, args.phi)
    params = quantum_params(args.alpha, args.phi)
    payload = {
        "alpha": args.alpha,
        "phi": args.phi,
        "amplitudes": {
            key: [z.real, z.imag] for key, z in zip(("00", "01", "10", "11"), state.amplitudes)
        },
        "joint": {key: v for key, v in zip(("00", "01", "10", "11"), joint.entries)},
        "params": {"x": params.x, "e_p": params.e_p, "e_w": params.e_w},
    }
    return EXIT_OK, _dump_json(payload)


def _cmd_family(args) -> tuple[int, str]:
    if (args.s is None) != (args.t is None):
        raise _UsageError("--s and --t must be given together")
    params = GeneralParams(args.x, args.ep, args.ew)
    family = solve_family(params)
    payload = {
        "params": {"x": format_rational(params.x), "e_p": format_rational(params.e_p), "e_w": format_rational(params.e_w)},
        "s_range": [format_rational(v) for v in family.s_range],
        "t_range": [format_rational(v) for v in family.t_range],
    }
    if args.s is not None:
        table = instantiate(family, args.s, args.t)
        verdict = classify(table, params)
        marginal = lambda_marginal(table)
        payload["instance"] = table.to_json_dict()
        payload["classification"] = {
            "kind": verdict.kind.value,
            "indistinguishable": verdict.indistinguishable,
        }
        payload["lambda_marginal"] = {
            "p": format_rational(marginal.p0),
            "w": format_rational(marginal.p1),
        }
    return EXIT_OK, _dump_json(payload)


def _cmd_feasibility(args) -> tuple[int, str]:
    family = _load_family(args.input)
    report = check_triple(family)
    status = EXIT_OK if report.feasible else EXIT_INFEASIBLE
    return status, _dump_json(feasibility_report_to_json(report))


_DROP_BUILDERS = {
    "independence": model_drop_independence,
    "objectivity": model_drop_objectivity,
    "determinism": model_drop_determinism,
}


def _cmd_demo(args) -> tuple[int, str]:
    family = _load_family(args.input)
    if args.drop == "objectivity":
        model = model_drop_objectivity(family, atom_budget=_atom_budget())
    else:
        model = _DROP_BUILDERS[args.drop](family)
    report = validate_witness(model, family)
    payload = {"model": witness_model_to_json(model), "validation": witness_report_to_json(report)}
    status = EXIT_OK if report.overall_pass else EXIT_FAILED_CHECK
    return status, _dump_json(payload)


def _cmd_sweep(args) -> tuple[int, str]:
    if args.steps == 1:
        grid = [args.phi_start]
    else:
        span = args.phi_end - args.phi_start
        grid = [args.phi_start + i * span / (args.steps - 1) for i in range(args.steps)]
    rows = fringe_sweep(args.alpha, grid, args.shots, args.seed)
    return EXIT_OK, sweep_to_csv(rows)


def _cmd_selftest(args) -> tuple[int, str]:
    results = acceptance.run_all()
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"criterion {r.index} [{status}] {r.name}: {r.detail}")
    n_pass = sum(r.passed for r in results)
    lines.append(f"{n_pass}/{len(results)} acceptance criteria passed")
    text = "\n".join(lines) + "\n"
    return (EXIT_OK if n_pass == len(results) else EXIT_FAILED_CHECK), text


def build_parser() -> _Parser:
    parser = _Parser(prog="hvnogo", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", default=None, help="write output to this file instead of stdout")

    p = sub.add_parser("quantum", parents=[common], help="closed-form quantum prediction for one (alpha, phi)")
    p.add_argument("--alpha", type=parse_angle, required=True, help="ancilla bias angle (radians or pi token)")
    p.add_argument("--phi", type=parse_angle, required=True, help="interferometer phase (radians or pi token)")
    p.set_defaults(handler=_cmd_quantum)

    p = sub.add_parser("family", parents=[common], help="solve the constraint system for interior (x, e_p, e_w)")
    p.add_argument("--x", type=parse_probability, required=True, help="apparatus marginal P(b=0), rational")
    p.add_argument("--ep", type=parse_probability, required=True, help="P(a=0 | b=0), rational")
    p.add_argument("--ew", type=parse_probability, required=True, help="P(a=0 | b=1), rational")
    p.add_argument("--s", type=parse_probability, default=None, help="cross mass p(0,0,w) of the member to instantiate")
    p.add_argument("--t", type=parse_probability, default=None, help="cross mass p(0,1,p) of the member to instantiate")
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("feasibility", parents=[common], help="triple check for a settings-family JSON file")
    p.add_argument("--input", required=True, help="settings-family JSON file")
    p.set_defaults(handler=_cmd_feasibility)

    p = sub.add_parser("demo", parents=[common], help="construct and validate a pairwise witness model")
    p.add_argument("--drop", choices=sorted(_DROP_BUILDERS), required=True, help="assumption to abandon")
    p.add_argument("--input", required=True, help="settings-family JSON file")
    p.set_defaults(handler=_cmd_demo)

    p = sub.add_parser("sweep", parents=[common], help="Monte Carlo fringe sweep, CSV output")
    p.add_argument("--alpha", type=parse_angle, required=True)
    p.add_argument("--phi-start", type=parse_angle, required=True)
    p.add_argument("--phi-end", type=parse_angle, required=True)
    p.add_argument("--steps", type=_positive_int, required=True)
    p.add_argument("--shots", type=_positive_int, required=True)
    p.add_argument("--seed", type=_nonnegative_int, required=True)
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        status, text = args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED_INPUT
    except HvnogoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
