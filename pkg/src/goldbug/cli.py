"""Command-line interface: reports, thresholds, sweeps, claim suite, SVG.

Exit codes: 0 success, 1 claim-suite failure, 2 usage or validation error.
JSON goes to stdout, diagnostics to stderr.  Scenario flags override config
file values (``--config`` or $GOLDBUG_CONFIG, flat ``key = value`` lines),
which override the built-in story defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import analysis, jsonio
from .render import CanvasSpec, render_svg
from .scenario import Convention, Scenario
from .units import DomainError, Length, ParseError, format_feet_inches, parse_length

EXIT_OK = 0
EXIT_CLAIMS_FAILED = 1
EXIT_USAGE = 2

CONFIG_ENV_VAR = "GOLDBUG_CONFIG"
SCENARIO_KEYS = ("r", "L", "d", "E", "rA", "rB", "convention")
CONFIG_KEYS = SCENARIO_KEYS + ("format",)

SCENARIO_FIELDS = {
    "r": "trunk_radius",
    "L": "socket_offset",
    "d": "socket_separation",
    "E": "extension",
    "rA": "hole_radius_a",
    "rB": "hole_radius_b",
}


class CliError(Exception):
    def __init__(self, message: str, exit_code: int = EXIT_USAGE) -> None:
        super().__init__(message)
        self.exit_code = exit_code


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goldbug",
        description=(
            "Plan-view geometry of the two treasure holes in Poe's "
            "The Gold-Bug: exact overlap verdicts, non-overlap thresholds, "
            "parameter sweeps, and SVG diagrams."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        default=None,
        help=f"config file path (flat key = value; default ${CONFIG_ENV_VAR})",
    )
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default=None,
        help="output format (default text)",
    )
    common.add_argument(
        "--json",
        action="store_true",
        help="shorthand for --format json",
    )

    scenario_flags = argparse.ArgumentParser(add_help=False)
    scenario_flags.add_argument("--r", help="trunk radius, e.g. 2in (length)")
    scenario_flags.add_argument("--L", help="socket offset from trunk surface (length)")
    scenario_flags.add_argument("--d", help="drop-point separation (default 2.5in)")
    scenario_flags.add_argument("--E", help="extension distance (default 50ft)")
    scenario_flags.add_argument("--rA", help="first hole radius (default 2ft)")
    scenario_flags.add_argument("--rB", help="second hole radius (default 2ft)")
    scenario_flags.add_argument(
        "--convention",
        choices=tuple(c.value for c in Convention),
        default=None,
        help="where the extension is measured from (default from-drop-point)",
    )
    scenario_flags.add_argument(
        "--depth",
        metavar="LENGTH",
        default=None,
        help="not supported: hole depth is out of scope (see README)",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser(
        "report",
        parents=[common, scenario_flags],
        help="overlap verdict for one scenario",
    )
    p_report.set_defaults(handler=_cmd_report)

    p_threshold = sub.add_parser(
        "threshold",
        parents=[common, scenario_flags],
        help="non-overlap bound on r+L (and on L when --r is given)",
    )
    p_threshold.set_defaults(handler=_cmd_threshold)

    p_verify = sub.add_parser(
        "verify-paper",
        parents=[common],
        help="run the built-in claim suite C1-C7",
    )
    p_verify.add_argument(
        "--inject-failure",
        metavar="CLAIM_ID",
        default=None,
        help=argparse.SUPPRESS,
    )
    p_verify.set_defaults(handler=_cmd_verify)

    p_sweep = sub.add_parser(
        "sweep",
        parents=[common, scenario_flags],
        help="evaluate reports over a 1- or 2-axis parameter grid",
    )
    p_sweep.add_argument(
        "--axis",
        action="append",
        metavar="PARAM=START:STOP:STEP",
        help="sweep axis, e.g. L=2ft:3ft:1in (params: r, L, rA, rB, E; max 2)",
    )
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_render = sub.add_parser(
        "render",
        parents=[common, scenario_flags],
        help="write an SVG diagram of the dig site",
    )
    p_render.add_argument("--out", required=True, help="output SVG path")
    p_render.add_argument("--width", type=int, default=1200, help="canvas width px")
    p_render.add_argument("--height", type=int, default=260, help="canvas height px")
    p_render.add_argument("--margin", type=int, default=24, help="canvas margin px")
    p_render.add_argument(
        "--feet-per-px", type=float, default=0.05, help="scale (feet per pixel)"
    )
    p_render.add_argument(
        "--no-labels", action="store_true", help="omit point labels"
    )
    p_render.add_argument(
        "--exaggerate-angle",
        type=float,
        default=1.0,
        metavar="FACTOR",
        help="display-only half-angle multiplier (distances stay true)",
    )
    p_render.set_defaults(handler=_cmd_render)

    return parser


# ---------------------------------------------------------------------------
# Config and scenario assembly
# ---------------------------------------------------------------------------


def _load_config(args: argparse.Namespace) -> dict[str, str]:
    path = getattr(args, "config", None) or os.environ.get(CONFIG_ENV_VAR)
    if not path:
        return {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read config file {path}: {exc}") from exc
    config: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise CliError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in CONFIG_KEYS:
            raise CliError(
                f"{path}:{lineno}: unknown key {key!r} "
                f"(expected one of {', '.join(CONFIG_KEYS)})"
            )
        config[key] = value
    return config


def _effective(args: argparse.Namespace, config: dict[str, str], key: str) -> str | None:
    flag_value = getattr(args, key, None)
    if flag_value is not None:
        return flag_value
    return config.get(key)


def _parse_length_flag(key: str, raw: str) -> Length:
    try:
        return parse_length(raw)
    except ParseError as exc:
        raise CliError(f"--{key}: {exc}") from exc


def _build_scenario(args: argparse.Namespace, config: dict[str, str]) -> Scenario:
    if getattr(args, "depth", None) is not None:
        raise CliError(
            "--depth: hole depth is not modeled; this tool analyzes plan-view "
            "overlap only (see README, scope)"
        )
    fields: dict[str, object] = {}
    for key in ("r", "L", "d", "E", "rA", "rB"):
        raw = _effective(args, config, key)
        if raw is not None:
            fields[SCENARIO_FIELDS[key]] = _parse_length_flag(key, raw)
    for required in ("r", "L"):
        if SCENARIO_FIELDS[required] not in fields:
            raise CliError(f"--{required} is required (flag or config file)")
    convention = _effective(args, config, "convention")
    if convention is not None:
        try:
            fields["convention"] = Convention(convention)
        except ValueError as exc:
            raise CliError(
                f"--convention: unknown value {convention!r} "
                f"(expected {' or '.join(c.value for c in Convention)})"
            ) from exc
    try:
        return Scenario(**fields)  # type: ignore[arg-type]
    except DomainError as exc:
        raise CliError(f"invalid scenario: {exc}") from exc


def _output_format(args: argparse.Namespace, config: dict[str, str]) -> str:
    if getattr(args, "json", False):
        return "json"
    flag = getattr(args, "format", None)
    if flag is not None:
        return flag
    return config.get("format", "text")


def _feet(value: Fraction) -> str:
    if value.denominator == 1:
        return f"{value.numerator} ft"
    return f"{value.numerator}/{value.denominator} ft"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_report(args: argparse.Namespace) -> int:
    config = _load_config(args)
    report = analysis.overlap_report(_build_scenario(args, config))
    if _output_format(args, config) == "json":
        print(json.dumps(jsonio.report_to_json(report), indent=2))
        return EXIT_OK
    print(f"AB         = {_feet(report.ab_ft)}  ({float(report.ab_ft):.6f} ft)")
    print(
        f"radii sum  = {_feet(report.radii_sum_ft)}  "
        f"({float(report.radii_sum_ft):.6f} ft)"
    )
    print(f"overlaps   = {'yes' if report.overlaps else 'no'}")
    print(f"margin     = {_feet(report.margin_ft)}  ({float(report.margin_ft):.6f} ft)")
    print(f"lens area  = {report.lens_area_sqft:.6f} sq ft")
    return EXIT_OK


def _threshold_line(label: str, t: analysis.Threshold) -> str:
    if t.kind is analysis.ThresholdKind.ALWAYS_NONOVERLAP:
        return f"{label}: holes never overlap (radii sum <= drop separation)"
    if t.kind is analysis.ThresholdKind.NO_VALID_L:
        return f"{label}: no valid L (the trunk radius alone exceeds the bound)"
    assert t.bound_ft is not None
    display = format_feet_inches(Length.from_feet(t.bound_ft))
    return (
        f"{label} < {_feet(t.bound_ft)} "
        f"(≈ {float(t.bound_ft):.4f} ft, {display})"
    )


def _cmd_threshold(args: argparse.Namespace) -> int:
    config = _load_config(args)
    if getattr(args, "depth", None) is not None:
        raise CliError(
            "--depth: hole depth is not modeled; this tool analyzes plan-view "
            "overlap only (see README, scope)"
        )
    values: dict[str, Length] = {}
    for key in ("rA", "rB"):
        raw = _effective(args, config, key)
        if raw is None:
            raise CliError(f"--{key} is required (flag or config file)")
        values[key] = _parse_length_flag(key, raw)
    for key, default in (("d", "2.5in"), ("E", "50ft")):
        values[key] = _parse_length_flag(key, _effective(args, config, key) or default)

    convention_raw = _effective(args, config, "convention")
    convention = Convention(convention_raw) if convention_raw else Convention.FROM_DROP_POINT
    trunk_raw = _effective(args, config, "r")
    trunk = _parse_length_flag("r", trunk_raw) if trunk_raw is not None else None

    try:
        if convention is Convention.FROM_TRUNK:
            if trunk is None:
                raise CliError("--r is required with --convention from-trunk")
            bound = analysis.nonoverlap_threshold_from_trunk(
                trunk, values["rA"], values["rB"], values["d"], values["E"]
            )
        else:
            bound = analysis.nonoverlap_threshold(
                values["rA"], values["rB"], values["d"], values["E"]
            )
        l_bound = (
            analysis.max_l_for_nonoverlap(
                trunk, values["rA"], values["rB"], values["d"], values["E"], convention
            )
            if trunk is not None
            else None
        )
    except DomainError as exc:
        raise CliError(str(exc)) from exc

    if _output_format(args, config) == "json":
        payload = {
            "convention": convention.value,
            "r_plus_l": jsonio.threshold_to_json(bound),
            "l_only": None if l_bound is None else jsonio.threshold_to_json(l_bound),
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    print(_threshold_line("r+L", bound))
    if l_bound is not None:
        print(_threshold_line("L", l_bound))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    config = _load_config(args)
    try:
        results = analysis.verify_claims(inject_failure=args.inject_failure)
    except DomainError as exc:
        raise CliError(str(exc)) from exc
    all_passed = all(r.passed for r in results)
    if _output_format(args, config) == "json":
        print(json.dumps(jsonio.claims_to_json(results), indent=2))
        return EXIT_OK if all_passed else EXIT_CLAIMS_FAILED
    for r in results:
        print(f"{r.claim_id} {'PASS' if r.passed else 'FAIL'}  {r.statement}")
        print(f"         expected: {r.expected}")
        print(f"         computed: {r.computed}")
    passed = sum(1 for r in results if r.passed)
    print(f"{passed}/{len(results)} claims passed")
    return EXIT_OK if all_passed else EXIT_CLAIMS_FAILED


def _parse_axis(spec: str) -> analysis.SweepAxis:
    if "=" not in spec:
        raise CliError(f"--axis: expected PARAM=START:STOP:STEP, got {spec!r}")
    param, _, rest = spec.partition("=")
    parts = rest.split(":")
    if len(parts) != 3:
        raise CliError(f"--axis: expected PARAM=START:STOP:STEP, got {spec!r}")
    start, stop, step = (_parse_length_flag("axis", p.strip()) for p in parts)
    return analysis.SweepAxis(param.strip(), start, stop, step)


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = _load_config(args)
    if not args.axis:
        raise CliError("--axis is required (1 or 2 axes)")
    axes = [_parse_axis(spec) for spec in args.axis]
    base = _build_scenario(args, config)
    try:
        table = analysis.sweep(base, axes)
    except DomainError as exc:
        raise CliError(str(exc)) from exc

    if _output_format(args, config) == "json":
        print(json.dumps(jsonio.sweep_to_json(table), indent=2))
        return EXIT_OK
    header = "".join(f"{axis.param:<12}" for axis in table.axes)
    print(f"{header}{'AB (ft)':<16}{'margin (ft)':<16}verdict")
    for row in table.rows:
        cells = "".join(f"{str(v):<12}" for _, v in row.values)
        if row.report is None:
            print(f"{cells}{'-':<16}{'-':<16}invalid: {row.invalid_reason}")
        else:
            print(
                f"{cells}{float(row.report.ab_ft):<16.6f}"
                f"{float(row.report.margin_ft):<16.6f}"
                f"{'overlap' if row.report.overlaps else 'clear'}"
            )
    return EXIT_OK


def _cmd_render(args: argparse.Namespace) -> int:
    config = _load_config(args)
    scenario = _build_scenario(args, config)
    try:
        canvas = CanvasSpec(
            width_px=args.width,
            height_px=args.height,
            margin_px=args.margin,
            feet_per_px=args.feet_per_px,
            show_labels=not args.no_labels,
            angle_exaggeration=args.exaggerate_angle,
        )
        svg = render_svg(scenario, canvas)
    except DomainError as exc:
        raise CliError(str(exc)) from exc
    out = Path(args.out)
    try:
        out.write_bytes(svg.encode("utf-8"))
    except OSError as exc:
        raise CliError(f"cannot write {out}: {exc}") from exc
    print(f"wrote {out} ({len(svg.encode('utf-8'))} bytes)", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"goldbug: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ParseError, DomainError) as exc:
        print(f"goldbug: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
