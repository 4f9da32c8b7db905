"""Construction of the optimal curve: one arc plus one segment.

For boundary data (O, A, B) the unique admissible curve made of a
single circular arc and a single line segment uses the circle tangent
to both boundary lines whose tangency point on the shorter leg is the
endpoint itself.  Its radius maximizes the minimum radius of curvature
over all admissible curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curves import Arc, PiecewiseCurve, Segment
from .errors import DegenerateInput, InternalError, InvalidInput
from .geometry import (
    Point2,
    Vec2,
    dist,
    distance_to_line,
    normalized,
    oriented_angle,
    rot90,
)
from .instance import ProblemInstance


def arc_radius(inst: ProblemInstance) -> float:
    """Radius of the optimal arc: min(OA, OB) * tan((pi - Omega)/2).

    The reciprocal is the smallest achievable maximum curvature.  The
    closed form is cross-validated against :func:`tangency_oracle`.
    """
    return min(inst.oa, inst.ob) * math.tan((math.pi - inst.omega) / 2.0)


@dataclass(frozen=True)
class OptimalSolution:
    """The optimal curve and its construction data."""

    curve: PiecewiseCurve
    radius: float
    arc_center: Point2
    arc_sweep: float
    segment_length: float
    arc_first: bool

    def as_dict(self) -> dict:
        from .curves import curve_to_json, max_curvature

        return {
            "R_a": self.radius,
            "segmentLength": self.segment_length,
            "arcCenter": [self.arc_center.x, self.arc_center.y],
            "arcSweep": self.arc_sweep,
            "arcFirst": self.arc_first,
            "length": self.curve.length,
            "maxCurvature": max_curvature(self.curve),
            "curve": curve_to_json(self.curve),
        }


def synthesize(inst: ProblemInstance) -> OptimalSolution:
    """Build the optimal curve from A to B.

    The arc carries the whole turning angle and sits at the endpoint
    nearer to O; the segment (length |OA - OB|) fills the longer leg.
    The construction must land on B exactly; a closure residual above
    1e-9 * diameter means the radius and segment length are mutually
    inconsistent and is reported as an internal error.
    """
    ra = arc_radius(inst)
    seg_len = abs(inst.oa - inst.ob)
    pos_tol = 1e-9 * inst.diameter
    arc_first = inst.oa <= inst.ob

    if arc_first:
        center = inst.A + rot90(inst.alpha) * ra
        arc = Arc(center, ra, (inst.A - center).angle(), inst.omega)
        prims = [arc]
        closure = (inst.B - arc.end_point) - inst.beta * seg_len
        if closure.norm() > pos_tol:
            raise InternalError(f"closure identity violated by {closure.norm()!r}")
        if seg_len > pos_tol:
            prims.append(Segment(arc.end_point, inst.B))
    else:
        tangency = inst.A + inst.alpha * seg_len
        center = tangency + rot90(inst.alpha) * ra
        arc = Arc(center, ra, (tangency - center).angle(), inst.omega)
        prims = [Segment(inst.A, tangency), arc]
        if dist(arc.end_point, inst.B) > pos_tol:
            raise InternalError(
                f"closure identity violated by {dist(arc.end_point, inst.B)!r}")

    return OptimalSolution(
        curve=PiecewiseCurve(prims),
        radius=ra,
        arc_center=center,
        arc_sweep=inst.omega,
        segment_length=seg_len,
        arc_first=arc_first,
    )


def tangency_oracle(inst: ProblemInstance) -> tuple[float, Point2]:
    """Independent tangency solve for the optimal radius.

    Finds the circle tangent to the boundary line of the nearer endpoint
    at that endpoint and tangent to the other boundary line, by bisecting
    the center position along the interior perpendicular until the two
    line distances agree to 1e-12 relative.  Returns the radius and the
    tangency point on the other line.
    """
    if inst.ob <= inst.oa:
        p, dir_p = inst.B, inst.beta
        other_dir = inst.alpha
        witness = inst.A
    else:
        p, dir_p = inst.A, inst.alpha
        other_dir = inst.beta
        witness = inst.B
    n = rot90(dir_p)
    if (witness - inst.O).dot(n) < 0.0:
        n = -n

    def gap(t: float) -> float:
        # distance to the other line minus the (exact) distance t to this one
        return distance_to_line(p + n * t, inst.O, other_dir) - t

    lo, hi = 0.0, inst.diameter
    tries = 0
    while gap(hi) > 0.0:
        hi *= 2.0
        tries += 1
        if tries > 200:
            raise InternalError("tangency bisection failed to bracket")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if gap(mid) > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-12 * hi:
            break
    radius = 0.5 * (lo + hi)
    center = p + n * radius
    u = normalized(other_dir)
    foot = inst.O + u * (center - inst.O).dot(u)
    return radius, foot


def illposed_demo(A: Point2, alpha: Vec2, B: Point2, beta: Vec2,
                  radius: float) -> PiecewiseCurve:
    """Segment-arc-segment curve meeting endpoint and tangent data that
    violate the admissibility hypotheses.

    For anti-oriented tangents the counterclockwise sweep exceeds pi and
    the construction works for every sufficiently large radius, showing
    the minimum radius of curvature is unbounded on such data.
    """
    if radius <= 0.0:
        raise InvalidInput(f"radius must be positive, got {radius!r}")
    if abs(alpha.norm() - 1.0) > 1e-9 or abs(beta.norm() - 1.0) > 1e-9:
        raise InvalidInput("alpha and beta must be unit vectors")
    den = alpha.cross(beta)
    if abs(den) <= 1e-9:
        raise DegenerateInput("tangent directions are (anti)parallel")

    raw = oriented_angle(alpha, beta)
    sweep = raw if raw > 0.0 else raw + 2.0 * math.pi
    # arc displacement depends only on the terminal headings
    w = -rot90(beta - alpha) * radius
    rhs = (B - A) - w
    t1 = rhs.cross(beta) / den
    t2 = alpha.cross(rhs) / den
    scale = max(1.0, dist(A, B), radius)
    tol = 1e-9 * scale
    if t1 < -tol or t2 < -tol:
        raise DegenerateInput(
            f"no segment-arc-segment curve for this radius (t1={t1!r}, t2={t2!r})")
    t1, t2 = max(t1, 0.0), max(t2, 0.0)

    prims = []
    p1 = A + alpha * t1
    if t1 > tol:
        prims.append(Segment(A, p1))
    center = p1 + rot90(alpha) * radius
    arc = Arc(center, radius, (p1 - center).angle(), sweep)
    prims.append(arc)
    if t2 > tol:
        prims.append(Segment(arc.end_point, B))
    curve = PiecewiseCurve(prims)
    if dist(curve.end_point, B) > tol:
        raise InternalError("ill-posedness demo failed to close")
    return curve


