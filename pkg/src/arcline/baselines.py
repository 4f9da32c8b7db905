"""Parabola baseline: the quadratic Bezier through A, O, B.

The historical choice of connecting curve for the same boundary data.
Its minimum radius of curvature is available in closed form, which
makes the improvement factor of the optimal curve a one-line report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInput
from .geometry import Point2, Vec2, dist
from .instance import ProblemInstance
from .synthesis import arc_radius


@dataclass(frozen=True)
class QuadraticBezier:
    """Control points p0, p1, p2; tangent at p0 along p1-p0, at p2 along p2-p1."""

    p0: Point2
    p1: Point2
    p2: Point2

    def __post_init__(self) -> None:
        if min(dist(self.p0, self.p1), dist(self.p1, self.p2),
               dist(self.p0, self.p2)) == 0.0:
            raise InvalidInput("control points must be pairwise distinct")

    def point(self, t: float) -> Point2:
        u = 1.0 - t
        return (self.p0 * (u * u) + self.p1 * (2.0 * u * t) + self.p2 * (t * t))

    def velocity(self, t: float) -> Vec2:
        return ((self.p1 - self.p0) * (2.0 * (1.0 - t))
                + (self.p2 - self.p1) * (2.0 * t))

    @property
    def acceleration(self) -> Vec2:
        return (self.p0 - self.p1 * 2.0 + self.p2) * 2.0

    def curvature(self, t: float) -> float:
        v = self.velocity(t)
        return self.velocity(0.0).cross(self.acceleration) / v.norm() ** 3

    @classmethod
    def from_instance(cls, inst: ProblemInstance) -> "QuadraticBezier":
        return cls(inst.A, inst.O, inst.B)


def bezier_min_radius(bez: QuadraticBezier) -> tuple[float, float]:
    """Minimum radius of curvature and the parameter where it occurs.

    cross(B', B'') is constant for a quadratic, so the radius
    |B'(t)|^3 / |cross| is minimized where the speed is, a clamped
    quadratic minimization.  Collinear control points give curvature
    zero everywhere: the radius is reported as infinite.
    """
    e1 = bez.p1 - bez.p0
    e2 = bez.p2 - bez.p1
    cr = 4.0 * e1.cross(e2)
    if abs(cr) <= 1e-12 * 4.0 * e1.norm() * e2.norm():
        return math.inf, 0.5
    d = e2 - e1
    denom = d.dot(d)
    t_star = 0.0 if denom == 0.0 else min(max(-e1.dot(d) / denom, 0.0), 1.0)
    speed = bez.velocity(t_star).norm()
    return speed ** 3 / abs(cr), t_star


@dataclass(frozen=True)
class ComparisonReport:
    """Optimal arc radius versus the parabola's minimum radius."""

    bezier_min_radius: float
    bezier_t: float
    optimal_min_radius: float
    improvement_ratio: float | None
    degenerate: bool

    def as_dict(self) -> dict:
        return {
            "bezierMinRadius": self.bezier_min_radius,
            "optimalMinRadius": self.optimal_min_radius,
            "improvementRatio": self.improvement_ratio,
        }


def compare_report(inst: ProblemInstance) -> ComparisonReport:
    """Compare the optimal curve's minimum radius with the parabola's."""
    r_min, t_star = bezier_min_radius(QuadraticBezier.from_instance(inst))
    ra = arc_radius(inst)
    degenerate = not math.isfinite(r_min)
    ratio = None if degenerate else ra / r_min
    return ComparisonReport(bezier_min_radius=r_min, bezier_t=t_star,
                            optimal_min_radius=ra, improvement_ratio=ratio,
                            degenerate=degenerate)
