"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 infeasible request, 4 internal
error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as gio
from .errors import Infeasible, InputError
from .report import analyze
from .sizing import (
    SizingRequest,
    effective_finger_beam,
    guideline_audit,
    optimize_geometry,
    select_motor,
)
from .statics import required_normal_force, solve_scenario
from .structural import stiffness_check

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_INTERNAL = 4


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Failure(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None


def _load(args):
    scenario, defaults = gio.load_scenario(_read(args.scenario))
    request = SizingRequest.from_scenario(
        scenario,
        gio.parse_motor_catalog(_read(args.catalog)) if getattr(args, "catalog", None) else (),
        args.safety_factor,
    )
    return scenario, defaults, request


def _applied_force(request: SizingRequest) -> float:
    s = request.scenario
    return request.safety_factor * required_normal_force(
        s.object.mass_kg, s.contact.mu, s.environment.g_m_s2
    )


def _lines(title: str, rows: list[tuple[str, str]]) -> str:
    return "\n".join([title] + [f"  {k} = {v}" for k, v in rows]) + "\n"


def cmd_analyze(args) -> tuple[str, int]:
    scenario, defaults, request = _load(args)
    report = analyze(
        scenario,
        request.catalog,
        safety_factor=args.safety_factor,
        defaults_applied=defaults,
    )
    code = EXIT_INFEASIBLE if report.infeasible else EXIT_OK
    return gio.render_report(report, args.format), code


def cmd_size_motor(args) -> tuple[str, int]:
    _, _, request = _load(args)
    choice = select_motor(request)
    if args.format == "json":
        return gio.dumps_canonical(gio.to_data(choice)), EXIT_OK
    text = _lines(
        f"Selected motor {choice.motor.id}",
        [
            ("required motor torque", f"{choice.required_motor_torque_nm:.6g} N·m"),
            ("derated stall torque", f"{choice.effective_torque_nm:.6g} N·m"),
            ("torque margin", f"{choice.margin_nm:.6g} N·m"),
            ("stall winding temperature", f"{choice.thermal.steady_temp_c:.6g} °C"),
            ("mass", f"{choice.motor.mass_kg:.6g} kg"),
            ("cost", f"{choice.motor.cost:.6g}"),
        ],
    )
    return text, EXIT_OK


def cmd_optimize_geometry(args) -> tuple[str, int]:
    _, _, request = _load(args)
    if request.geometry_bounds is None:
        raise _Failure(EXIT_INPUT, "scenario has no sizing.geometry_bounds")
    opt = optimize_geometry(request)
    if args.format == "json":
        return gio.dumps_canonical(gio.to_data(opt)), EXIT_OK
    text = _lines(
        "Optimal moment arms",
        [
            ("a", f"{opt.a_opt_m:.6g} m"),
            ("b", f"{opt.b_opt_m:.6g} m"),
            ("T", f"{opt.T_opt_nm:.6g} N·m"),
            ("grid points", f"{opt.points_feasible} feasible of {opt.points_evaluated}"),
        ],
    )
    return text, EXIT_OK


def cmd_check_finger(args) -> tuple[str, int]:
    scenario, _, request = _load(args)
    beam = effective_finger_beam(scenario)
    if beam is None:
        raise _Failure(EXIT_INPUT, "scenario has no finger beam")
    result = stiffness_check(_applied_force(request), beam)
    if args.format == "json":
        return gio.dumps_canonical(gio.to_data(result)), EXIT_OK
    verdict = {None: "not evaluated", True: "pass", False: "fail"}[result.passed]
    limit = result.deflection_limit_m
    text = _lines(
        f"Finger stiffness check: {verdict}",
        [
            ("load", f"{result.force_n:.6g} N"),
            ("tip deflection", f"{result.deflection_m:.6g} m"),
            ("stiffness", f"{result.stiffness_n_per_m:.6g} N/m"),
            ("deflection limit", "not evaluated" if limit is None else f"{limit:.6g} m"),
        ],
    )
    return text, EXIT_OK


def cmd_audit(args) -> tuple[str, int]:
    scenario, _, request = _load(args)
    grasp = solve_scenario(scenario, applied_normal_force=_applied_force(request))
    beam = effective_finger_beam(scenario)
    structural = None if beam is None else stiffness_check(grasp.applied_normal_force_n, beam)
    audit = guideline_audit(scenario, grasp, structural)
    if args.format == "json":
        return gio.dumps_canonical(gio.to_data(audit)), EXIT_OK
    lines = ["Guideline audit"]
    for e in audit.entries:
        lines.append(f"  {e.guideline}. {e.title}: {e.status} ({e.note})")
    return "\n".join(lines) + "\n", EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("scenario", help="scenario JSON file")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--safety-factor", type=float, default=None,
                        help="torque safety factor (overrides sizing.safety_factor)")
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="gripsize", description="Gripper statics and actuator sizing."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full analysis report")
    p.add_argument("--catalog", help="motor catalog CSV")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("size-motor", parents=[common], help="select a catalog motor")
    p.add_argument("--catalog", required=True, help="motor catalog CSV")
    p.set_defaults(func=cmd_size_motor)

    p = sub.add_parser("optimize-geometry", parents=[common],
                       help="grid search over moment arms")
    p.set_defaults(func=cmd_optimize_geometry)

    p = sub.add_parser("check-finger", parents=[common], help="finger cantilever check")
    p.set_defaults(func=cmd_check_finger)

    p = sub.add_parser("audit", parents=[common], help="design guideline audit")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output, code = args.func(args)
    except _Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    if args.out:
        try:
            Path(args.out).write_text(output, encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_INPUT
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
