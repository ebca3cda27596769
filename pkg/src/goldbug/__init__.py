"""Exact plan-view geometry of the treasure dig in Poe's The Gold-Bug."""

from .analysis import (
    ClaimResult,
    OverlapReport,
    SweepAxis,
    SweepRow,
    SweepTable,
    Threshold,
    ThresholdKind,
    lens_area,
    max_l_for_nonoverlap,
    nonoverlap_threshold,
    nonoverlap_threshold_from_trunk,
    overlap_report,
    sweep,
    verify_claims,
)
from .oracle import McEstimate, center_distance_oracle, lens_area_mc, overlap_oracle_grid
from .render import CanvasFitError, CanvasSpec, render_svg
from .scenario import (
    Convention,
    Layout,
    Point,
    Scenario,
    center_distance,
    dig_center_radius,
    half_angle_sin,
    layout,
)
from .units import (
    DomainError,
    Length,
    ParseError,
    format_exact_inches,
    format_feet_inches,
    parse_length,
    to_real_feet,
)

__version__ = "0.1.0"

__all__ = [
    "CanvasFitError",
    "CanvasSpec",
    "ClaimResult",
    "Convention",
    "DomainError",
    "Layout",
    "Length",
    "McEstimate",
    "OverlapReport",
    "ParseError",
    "Point",
    "Scenario",
    "SweepAxis",
    "SweepRow",
    "SweepTable",
    "Threshold",
    "ThresholdKind",
    "center_distance",
    "center_distance_oracle",
    "dig_center_radius",
    "format_exact_inches",
    "format_feet_inches",
    "half_angle_sin",
    "layout",
    "lens_area",
    "lens_area_mc",
    "max_l_for_nonoverlap",
    "nonoverlap_threshold",
    "nonoverlap_threshold_from_trunk",
    "overlap_oracle_grid",
    "overlap_report",
    "parse_length",
    "render_svg",
    "sweep",
    "to_real_feet",
    "verify_claims",
]
