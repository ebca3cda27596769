"""Independent brute-force verifiers for the closed-form geometry.

Three routes that deliberately avoid the rational shortcuts: a trigonometric
coordinate distance, a seeded Monte Carlo lens-area estimator, and a
conservative grid rasterizer for the overlap verdict.

The Monte Carlo stream is numpy's PCG64 (``numpy.random.default_rng``) drawn
in fixed chunks of 1,000,000 samples; both choices are part of the golden
contract and must never change silently.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .scenario import Convention, Scenario, layout
from .units import DomainError, Length

MC_CHUNK = 1_000_000


@dataclass(frozen=True)
class McEstimate:
    value: float
    std_error: float
    samples: int
    seed: int


def center_distance_oracle(s: Scenario) -> float:
    """Hole-centre distance via coordinates only (no rational shortcut)."""
    lay = layout(s)
    return math.hypot(lay.dig_a.x - lay.dig_b.x, lay.dig_a.y - lay.dig_b.y)


def lens_area_mc(
    distance: float,
    radius_a: float,
    radius_b: float,
    samples: int,
    seed: int,
) -> McEstimate:
    """Monte Carlo lens area: uniform points in disk A, hits land in B too.

    The estimate is hit_rate * area(A) with the matching binomial standard
    error; identical (seed, samples) reproduce the estimate bit for bit.
    """
    if samples < 1_000:
        raise DomainError(f"need at least 1000 samples, got {samples}")
    if radius_a <= 0 or radius_b <= 0:
        raise DomainError("radii must be > 0")
    if not all(math.isfinite(v) for v in (distance, radius_a, radius_b)):
        raise DomainError("inputs must be finite")

    rng = np.random.default_rng(seed)
    rb2 = radius_b * radius_b
    hits = 0
    done = 0
    while done < samples:
        n = min(MC_CHUNK, samples - done)
        # Draw order (radii then angles) is fixed: it defines the stream.
        radii = radius_a * np.sqrt(rng.random(n))
        angles = (2.0 * math.pi) * rng.random(n)
        dx = radii * np.cos(angles) - distance
        dy = radii * np.sin(angles)
        hits += int(np.count_nonzero(dx * dx + dy * dy <= rb2))
        done += n

    area_a = math.pi * radius_a * radius_a
    rate = hits / samples
    return McEstimate(
        value=rate * area_a,
        std_error=math.sqrt(rate * (1.0 - rate) / samples) * area_a,
        samples=samples,
        seed=seed,
    )


def overlap_oracle_grid(s: Scenario, cells_per_foot: int) -> bool:
    """Conservative raster check: True only if a cell centre lies strictly
    inside both dig circles.

    One-sided by design: overlaps thinner than a cell can be missed, but a
    True verdict always certifies a real intersection.  Cells cover the
    intersection of the two circles' bounding boxes (anywhere else a point
    cannot be inside both), anchored at that region's corner, in a frame
    centred between the holes so huge scenes keep full float precision.
    """
    if cells_per_foot < 16:
        raise DomainError(f"cells_per_foot must be >= 16, got {cells_per_foot}")
    lay = layout(s)
    mid_x = (lay.dig_a.x + lay.dig_b.x) / 2.0
    mid_y = (lay.dig_a.y + lay.dig_b.y) / 2.0
    ax, ay = lay.dig_a.x - mid_x, lay.dig_a.y - mid_y
    bx, by = lay.dig_b.x - mid_x, lay.dig_b.y - mid_y
    ra = float(s.hole_radius_a.feet)
    rb = float(s.hole_radius_b.feet)

    lo_x = max(ax - ra, bx - rb)
    hi_x = min(ax + ra, bx + rb)
    lo_y = max(ay - ra, by - rb)
    hi_y = min(ay + ra, by + rb)
    if lo_x >= hi_x or lo_y >= hi_y:
        return False

    step = 1.0 / cells_per_foot
    nx = max(1, math.ceil((hi_x - lo_x) / step))
    ny = max(1, math.ceil((hi_y - lo_y) / step))
    xs = lo_x + (np.arange(nx) + 0.5) * step
    ys = lo_y + (np.arange(ny) + 0.5) * step
    gx, gy = np.meshgrid(xs, ys, sparse=True)

    in_a = (gx - ax) ** 2 + (gy - ay) ** 2 < ra * ra
    in_b = (gx - bx) ** 2 + (gy - by) ** 2 < rb * rb
    return bool(np.any(in_a & in_b))


def random_scenarios(count: int, seed: int) -> list[Scenario]:
    """Deterministic stream of valid scenarios with small exact rationals.

    Uses the stdlib Mersenne Twister (`random.Random`), which is stable
    across platforms and Python versions for `randint`/`choice`.
    """
    rng = random.Random(seed)
    conventions = (Convention.FROM_DROP_POINT, Convention.FROM_TRUNK)
    out: list[Scenario] = []
    while len(out) < count:
        candidate = dict(
            trunk_radius=_random_length(rng, 0, 96),
            socket_offset=_random_length(rng, 1, 120),
            socket_separation=_random_length(rng, 1, 48),
            extension=Length.from_inches(Fraction(rng.randint(0, 1200))),
            hole_radius_a=_random_length(rng, 1, 72),
            hole_radius_b=_random_length(rng, 1, 72),
            convention=conventions[rng.randint(0, 1)],
        )
        try:
            out.append(Scenario(**candidate))
        except DomainError:
            continue
    return out


def _random_length(rng: random.Random, lo: int, hi: int) -> Length:
    return Length.from_inches(Fraction(rng.randint(lo, hi), rng.randint(1, 4)))
