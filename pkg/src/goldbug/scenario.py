"""Dig-layout parameters and exact plan-view geometry.

A scenario is one configuration of the treasure dig: a tree trunk of radius
``trunk_radius``, two skull eye sockets hanging ``socket_offset`` beyond the
trunk surface and ``socket_separation`` apart, and two holes dug where the
rays from the tree centre through the drop points reach ``extension`` further
out.  The centre distance between the holes follows from similar triangles,

    AB = separation * D / (trunk_radius + socket_offset)

where D is the ray length to a hole centre: trunk_radius + socket_offset +
extension when the extension is measured from the drop points (the default),
or trunk_radius + extension when measured from the trunk surface.  This
rational form is exact; the trigonometric coordinate construction lives in
:func:`layout` and must agree with it numerically.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .units import DomainError, Length, parse_length


class Convention(enum.Enum):
    """Where the extension distance is measured from."""

    FROM_DROP_POINT = "from-drop-point"
    FROM_TRUNK = "from-trunk"


# Canonical story constants: sockets 2.5" apart, holes dug 50' out, first
# hole 4' across.
DEFAULT_SOCKET_SEPARATION = parse_length("2.5in")
DEFAULT_EXTENSION = parse_length("50ft")
DEFAULT_HOLE_RADIUS = parse_length("2ft")


@dataclass(frozen=True)
class Scenario:
    """One dig layout; immutable and validated on construction."""

    trunk_radius: Length
    socket_offset: Length
    socket_separation: Length = DEFAULT_SOCKET_SEPARATION
    extension: Length = DEFAULT_EXTENSION
    hole_radius_a: Length = DEFAULT_HOLE_RADIUS
    hole_radius_b: Length = DEFAULT_HOLE_RADIUS
    convention: Convention = Convention.FROM_DROP_POINT

    def __post_init__(self) -> None:
        if self.trunk_radius.inches < 0:
            raise DomainError("trunk radius (r) must be >= 0")
        if self.socket_offset.inches <= 0:
            raise DomainError("socket offset (L) must be > 0")
        if self.socket_separation.inches <= 0:
            raise DomainError("socket separation (d) must be > 0")
        if self.extension.inches < 0:
            raise DomainError("extension (E) must be >= 0")
        if self.hole_radius_a.inches <= 0:
            raise DomainError("first hole radius (rA) must be > 0")
        if self.hole_radius_b.inches <= 0:
            raise DomainError("second hole radius (rB) must be > 0")
        if self.socket_separation.inches > 2 * self.drop_radius.inches:
            raise DomainError(
                "socket separation (d) exceeds the drop-point diameter: "
                "d/2 must be <= r+L"
            )
        if self.convention is Convention.FROM_TRUNK and not (
            self.trunk_radius.inches + self.extension.inches > 0
        ):
            raise DomainError("from-trunk convention requires r+E > 0")

    @property
    def drop_radius(self) -> Length:
        """Distance from the tree centre to each drop point (r+L)."""
        return self.trunk_radius + self.socket_offset

    @property
    def radii_sum(self) -> Length:
        return self.hole_radius_a + self.hole_radius_b


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Layout:
    """Plan-view coordinates (feet) of the five figure points.

    The tree centre sits at the origin and the layout is mirror-symmetric
    about the x-axis: drop point a and dig centre A carry positive y, their
    counterparts b and B negative y.
    """

    tree_center: Point
    drop_a: Point
    drop_b: Point
    dig_a: Point
    dig_b: Point
    sin_half_angle: Fraction
    half_angle_rad: float


def half_angle_sin(s: Scenario) -> Fraction:
    """Exact sine of the half-angle between the two rays: (d/2)/(r+L)."""
    drop = s.drop_radius.feet
    if drop == 0:
        raise DomainError("r+L must be > 0 to define the half-angle")
    return (s.socket_separation.feet / 2) / drop


def dig_center_radius(s: Scenario) -> Length:
    """Ray length D from the tree centre to each hole centre."""
    if s.convention is Convention.FROM_TRUNK:
        return s.trunk_radius + s.extension
    return s.drop_radius + s.extension


def center_distance(s: Scenario) -> Fraction:
    """Exact hole-centre distance AB in feet, via similar triangles.

    AB = 2*D*sin(theta) collapses to d*D/(r+L) with no trigonometry, so the
    result is an exact rational and overlap verdicts need no tolerance.
    """
    ray = dig_center_radius(s).feet
    return s.socket_separation.feet * ray / s.drop_radius.feet


def layout(s: Scenario) -> Layout:
    """Coordinate construction of the dig site (the trig route).

    Drop points are placed at ((r+L)cos(theta), +-d/2) and dig centres by
    scaling them from the origin by D/(r+L).  Kept deliberately independent
    of :func:`center_distance` so the two can cross-check each other.
    """
    sin_t = half_angle_sin(s)
    cos_t = math.sqrt(float(1 - sin_t * sin_t))
    drop_x = float(s.drop_radius.feet) * cos_t
    half_sep = float(s.socket_separation.feet / 2)
    scale = float(dig_center_radius(s).feet / s.drop_radius.feet)

    drop_a = Point(drop_x, half_sep)
    drop_b = Point(drop_x, -half_sep)
    return Layout(
        tree_center=Point(0.0, 0.0),
        drop_a=drop_a,
        drop_b=drop_b,
        dig_a=Point(drop_a.x * scale, drop_a.y * scale),
        dig_b=Point(drop_b.x * scale, drop_b.y * scale),
        sin_half_angle=sin_t,
        half_angle_rad=math.asin(float(sin_t)),
    )
