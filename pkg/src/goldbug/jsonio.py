"""Lossless JSON encoding of reports, thresholds, and sweep tables.

Exact rationals travel as ``{"num": int, "den": int, "unit": "in"}`` plus a
convenience ``decimal`` string; the num/den pair is authoritative and every
``*_from_json`` reconstructs a value equal to the original.  Key order is
fixed by construction, so serialized output is byte-deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .analysis import (
    ClaimResult,
    OverlapReport,
    SweepAxis,
    SweepRow,
    SweepTable,
    Threshold,
    ThresholdKind,
)
from .scenario import Convention, Scenario
from .units import Length, format_feet_inches


def length_to_json(x: Length) -> dict[str, Any]:
    return {
        "num": x.numerator,
        "den": x.denominator,
        "unit": "in",
        "decimal": str(float(x.inches)),
    }


def length_from_json(obj: dict[str, Any]) -> Length:
    if obj.get("unit", "in") != "in":
        raise ValueError(f'unsupported length unit {obj.get("unit")!r}')
    return Length.from_inches(Fraction(int(obj["num"]), int(obj["den"])))


def feet_to_json(value: Fraction) -> dict[str, Any]:
    return length_to_json(Length.from_feet(value))


def feet_from_json(obj: dict[str, Any]) -> Fraction:
    return length_from_json(obj).feet


def scenario_to_json(s: Scenario) -> dict[str, Any]:
    return {
        "r": length_to_json(s.trunk_radius),
        "L": length_to_json(s.socket_offset),
        "d": length_to_json(s.socket_separation),
        "E": length_to_json(s.extension),
        "rA": length_to_json(s.hole_radius_a),
        "rB": length_to_json(s.hole_radius_b),
        "convention": s.convention.value,
    }


def scenario_from_json(obj: dict[str, Any]) -> Scenario:
    return Scenario(
        trunk_radius=length_from_json(obj["r"]),
        socket_offset=length_from_json(obj["L"]),
        socket_separation=length_from_json(obj["d"]),
        extension=length_from_json(obj["E"]),
        hole_radius_a=length_from_json(obj["rA"]),
        hole_radius_b=length_from_json(obj["rB"]),
        convention=Convention(obj["convention"]),
    )


def report_to_json(report: OverlapReport) -> dict[str, Any]:
    return {
        "ab": feet_to_json(report.ab_ft),
        "ab_feet_decimal": str(float(report.ab_ft)),
        "radii_sum": feet_to_json(report.radii_sum_ft),
        "overlaps": report.overlaps,
        "margin": feet_to_json(report.margin_ft),
        "margin_feet_decimal": str(float(report.margin_ft)),
        "lens_area_sqft": report.lens_area_sqft,
        "scenario": scenario_to_json(report.scenario),
    }


def report_from_json(obj: dict[str, Any]) -> OverlapReport:
    return OverlapReport(
        ab_ft=feet_from_json(obj["ab"]),
        radii_sum_ft=feet_from_json(obj["radii_sum"]),
        overlaps=bool(obj["overlaps"]),
        margin_ft=feet_from_json(obj["margin"]),
        lens_area_sqft=float(obj["lens_area_sqft"]),
        scenario=scenario_from_json(obj["scenario"]),
    )


def threshold_to_json(t: Threshold) -> dict[str, Any]:
    out: dict[str, Any] = {"kind": t.kind.value}
    if t.bound_ft is None:
        out["bound"] = None
        out["bound_feet_decimal"] = None
        out["bound_display"] = None
    else:
        out["bound"] = feet_to_json(t.bound_ft)
        out["bound_feet_decimal"] = str(float(t.bound_ft))
        out["bound_display"] = (
            format_feet_inches(Length.from_feet(t.bound_ft))
            if t.bound_ft >= 0
            else None
        )
    return out


def threshold_from_json(obj: dict[str, Any]) -> Threshold:
    bound = obj.get("bound")
    return Threshold(
        kind=ThresholdKind(obj["kind"]),
        bound_ft=None if bound is None else feet_from_json(bound),
    )


def sweep_to_json(table: SweepTable) -> dict[str, Any]:
    return {
        "axes": [
            {
                "param": axis.param,
                "start": length_to_json(axis.start),
                "stop": length_to_json(axis.stop),
                "step": length_to_json(axis.step),
            }
            for axis in table.axes
        ],
        "rows": [
            {
                "values": {param: length_to_json(v) for param, v in row.values},
                "report": None if row.report is None else report_to_json(row.report),
                "invalid_reason": row.invalid_reason,
            }
            for row in table.rows
        ],
    }


def sweep_from_json(obj: dict[str, Any]) -> SweepTable:
    axes = tuple(
        SweepAxis(
            param=a["param"],
            start=length_from_json(a["start"]),
            stop=length_from_json(a["stop"]),
            step=length_from_json(a["step"]),
        )
        for a in obj["axes"]
    )
    rows = tuple(
        SweepRow(
            values=tuple((p, length_from_json(v)) for p, v in row["values"].items()),
            report=None if row["report"] is None else report_from_json(row["report"]),
            invalid_reason=row["invalid_reason"],
        )
        for row in obj["rows"]
    )
    return SweepTable(axes=axes, rows=rows)


def claims_to_json(results: list[ClaimResult]) -> list[dict[str, Any]]:
    return [
        {
            "id": r.claim_id,
            "quote": r.statement,
            "expected": r.expected,
            "computed": r.computed,
            "pass": r.passed,
        }
        for r in results
    ]
