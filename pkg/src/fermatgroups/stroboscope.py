"""Exact discrete-time iteration of a fixed rational rotation of the circle.

Applying L(Delta) repeatedly to a rational start point visits only rational
points, each computed bit-exactly, so the sampled dynamics carry no rounding
artifacts.  Among rational parameters only Delta in {0, 1, -1, inf} generate
periodic orbits (their rotation angles are 0, 90, -90, 180 degrees; every
other rational Delta gives an angle that is an irrational fraction of a
turn), so generic trajectories never return and their coordinate heights
grow geometrically.  The height profile stands in for a divergence
diagnostic: exact arithmetic has no Lyapunov noise floor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import log

from . import circle
from .errors import InvalidArgumentError
from .rationals import Infinity, ProjectiveRational, as_projective, height

__all__ = [
    "HeightProfile",
    "Trajectory",
    "height_profile",
    "iterate",
    "period_check",
    "power_parameter",
]

Point = tuple[Fraction, Fraction]


@dataclass
class Trajectory:
    """Exact orbit samples: points after 1..steps applications of L(delta).

    `period` is the smallest step index returning exactly to the start, or
    None if no return happens within the recorded steps.
    """

    delta: ProjectiveRational
    start: Point
    points: list[Point]
    heights: list[int]
    period: "int | None" = None


def iterate(delta, start, steps: int) -> Trajectory:
    """Record `steps` exact images of a circle point under L(delta)."""
    if not isinstance(steps, int) or steps < 0:
        raise InvalidArgumentError(f"step count must be an integer >= 0, got {steps!r}")
    delta = as_projective(delta)
    start = circle.require_on_circle(start)
    matrix = circle.rotation_matrix(delta)
    points: list[Point] = []
    heights: list[int] = []
    period = None
    current = start
    for step in range(1, steps + 1):
        current = matrix.apply(*current)
        points.append(current)
        heights.append(height(current))
        if period is None and current == start:
            period = step
    return Trajectory(delta=delta, start=start, points=points, heights=heights, period=period)


def power_parameter(delta, m: int) -> ProjectiveRational:
    """Parameter of L(delta)^m, folded through the composition law."""
    if not isinstance(m, int) or m < 0:
        raise InvalidArgumentError(f"power must be an integer >= 0, got {m!r}")
    delta = as_projective(delta)
    accumulated: ProjectiveRational = Fraction(0)
    for _ in range(m):
        accumulated = circle.compose_delta(accumulated, delta)
    return accumulated


def period_check(delta, limit: int) -> "int | None":
    """Least 1 <= m <= limit with L(delta)^m = I, or None.

    This folds the same composition law as `power_parameter`, but in
    homogeneous coordinates: writing the m-th parameter as B/A, one more
    composition with delta = b0/a0 sends (A, B) to
    (A*a0 - B*b0, A*b0 + B*a0), and the power is the identity exactly when
    B = 0.  Deferring the gcd reduction keeps the scan in fast integer
    arithmetic without changing any ratio.
    """
    if not isinstance(limit, int) or limit < 0:
        raise InvalidArgumentError(f"period scan limit must be an integer >= 0, got {limit!r}")
    delta = as_projective(delta)
    if isinstance(delta, Infinity):
        a0, b0 = 0, 1
    else:
        a0, b0 = delta.denominator, delta.numerator
    a, b = a0, b0
    for m in range(1, limit + 1):
        if b == 0:
            return m
        a, b = a * a0 - b * b0, a * b0 + b * a0
    return None


@dataclass
class HeightProfile:
    """Growth statistics of a trajectory's coordinate heights.

    `ratios` are the exact successive height quotients; `log_slope` is the
    least-squares slope of log(height) against the step index, which is 0.0
    by definition for periodic trajectories.
    """

    heights: list[int]
    ratios: list[Fraction] = field(default_factory=list)
    log_slope: float = 0.0


def height_profile(trajectory: Trajectory) -> HeightProfile:
    """Summarize height growth along a recorded trajectory."""
    heights = list(trajectory.heights)
    if not heights:
        raise InvalidArgumentError("height profile of an empty trajectory")
    ratios = [Fraction(heights[i + 1], heights[i]) for i in range(len(heights) - 1)]
    if trajectory.period is not None or len(heights) < 2:
        slope = 0.0
    else:
        xs = range(1, len(heights) + 1)
        ys = [log(h) for h in heights]
        x_mean = sum(xs) / len(heights)
        y_mean = sum(ys) / len(heights)
        denom = sum((x - x_mean) ** 2 for x in xs)
        slope = sum((x - x_mean) * (y - y_mean) for x, y in zip(xs, ys)) / denom
    return HeightProfile(heights=heights, ratios=ratios, log_slope=slope)
