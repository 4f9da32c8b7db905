"""Piecewise arc/segment curves with exact arc-length parameterization.

A curve is an ordered chain of primitives, each either a line segment
or a circular arc with signed sweep (positive sweep = counterclockwise
turning = positive curvature).  Chains are G1-continuous: joints match
in position and tangent direction.  Evaluation, heading and curvature
are closed-form per primitive.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import InvalidInput, OutOfRange
from .geometry import (
    TWO_PI,
    Point2,
    Vec2,
    dist,
    from_polar,
    normalized,
    oriented_angle,
    principal_angle,
    rot90,
)
from .instance import ProblemInstance

#: relative normalization threshold: primitives this short are dropped
DROP_REL = 1e-12
#: G1 joint tolerances (position is scaled by curve extent)
JOINT_POS_REL = 1e-9
JOINT_ANG_TOL = 1e-9


@dataclass(frozen=True)
class Segment:
    start: Point2
    end: Point2

    def __post_init__(self) -> None:
        if dist(self.start, self.end) == 0.0:
            raise InvalidInput("segment endpoints coincide")

    @property
    def length(self) -> float:
        return dist(self.start, self.end)

    @property
    def direction(self) -> Vec2:
        return normalized(self.end - self.start)

    def point_at(self, s: float) -> Point2:
        return self.start + self.direction * s

    def tangent_at(self, s: float) -> Vec2:
        return self.direction

    def curvature_at(self, s: float) -> float:
        return 0.0

    @property
    def start_point(self) -> Point2:
        return self.start

    @property
    def end_point(self) -> Point2:
        return self.end

    @property
    def start_tangent(self) -> Vec2:
        return self.direction

    @property
    def end_tangent(self) -> Vec2:
        return self.direction

    @property
    def sweep_angle(self) -> float:
        return 0.0

    def reversed(self) -> "Segment":
        return Segment(self.end, self.start)


@dataclass(frozen=True)
class Arc:
    """Circular arc: center, radius, start angle and signed sweep.

    The point at arc length s is center + radius*e(start_angle + sweep*s/L)
    where L = radius*|sweep|; sweep > 0 turns counterclockwise.
    """

    center: Point2
    radius: float
    start_angle: float
    sweep: float

    def __post_init__(self) -> None:
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise InvalidInput(f"arc radius must be positive, got {self.radius!r}")
        if not (0.0 < abs(self.sweep) < TWO_PI):
            raise InvalidInput(f"arc |sweep| must lie in (0, 2*pi), got {self.sweep!r}")

    @property
    def length(self) -> float:
        return self.radius * abs(self.sweep)

    def angle_at(self, s: float) -> float:
        return self.start_angle + self.sweep * (s / self.length)

    def point_at(self, s: float) -> Point2:
        return self.center + from_polar(self.angle_at(s), self.radius)

    def tangent_at(self, s: float) -> Vec2:
        radial = from_polar(self.angle_at(s))
        t = rot90(radial)
        return t if self.sweep > 0 else -t

    def curvature_at(self, s: float) -> float:
        return (1.0 if self.sweep > 0 else -1.0) / self.radius

    @property
    def start_point(self) -> Point2:
        return self.point_at(0.0)

    @property
    def end_point(self) -> Point2:
        return self.point_at(self.length)

    @property
    def start_tangent(self) -> Vec2:
        return self.tangent_at(0.0)

    @property
    def end_tangent(self) -> Vec2:
        return self.tangent_at(self.length)

    @property
    def sweep_angle(self) -> float:
        return self.sweep

    def reversed(self) -> "Arc":
        return Arc(self.center, self.radius,
                   self.start_angle + self.sweep, -self.sweep)


CurvePrimitive = Union[Segment, Arc]


def _primitive_extent(p: CurvePrimitive) -> float:
    pts = [p.start_point, p.end_point]
    if isinstance(p, Arc):
        pts.append(p.center + Vec2(p.radius, p.radius))
    return max(max(abs(q.x), abs(q.y)) for q in pts)


class PiecewiseCurve:
    """G1 chain of primitives, parameterized by arc length on [0, L]."""

    __slots__ = ("primitives", "breaks", "length", "_turn_breaks", "_scale")

    def __init__(self, primitives, *, require_g1: bool = True):
        prims = list(primitives)
        if not prims:
            raise InvalidInput("curve needs at least one primitive")
        scale = max(1.0, max(_primitive_extent(p) for p in prims))
        prims = [p for p in prims if p.length > DROP_REL * scale]
        if not prims:
            raise InvalidInput("all primitives are degenerately short")
        if require_g1:
            pos_tol = JOINT_POS_REL * scale
            for prev, nxt in zip(prims, prims[1:]):
                gap = dist(prev.end_point, nxt.start_point)
                if gap > pos_tol:
                    raise InvalidInput(f"position gap {gap!r} at joint exceeds {pos_tol!r}")
                turn = oriented_angle(prev.end_tangent, nxt.start_tangent)
                if abs(turn) > JOINT_ANG_TOL:
                    raise InvalidInput(f"tangent gap {turn!r} rad at joint")
        breaks = [0.0]
        turns = [0.0]
        for p in prims:
            breaks.append(breaks[-1] + p.length)
            turns.append(turns[-1] + p.sweep_angle)
        self.primitives = tuple(prims)
        self.breaks = tuple(breaks)
        self.length = breaks[-1]
        self._turn_breaks = tuple(turns)
        self._scale = scale

    @property
    def coordinate_scale(self) -> float:
        """Extent-based scale for relative tolerances (at least 1)."""
        return self._scale

    def _locate(self, s: float) -> tuple[int, float]:
        slack = 1e-12 * max(1.0, self.length)
        if s < -slack or s > self.length + slack:
            raise OutOfRange(f"arc length {s!r} outside [0, {self.length!r}]")
        s = min(max(s, 0.0), self.length)
        i = min(bisect_right(self.breaks, s) - 1, len(self.primitives) - 1)
        return i, s - self.breaks[i]

    def evaluate(self, s: float) -> tuple[Point2, Vec2, float]:
        """Point, unit tangent and signed curvature at arc length s.

        At an interior joint the right-hand primitive wins, so curvature
        jumps are sampled from the later piece.
        """
        i, local = self._locate(s)
        p = self.primitives[i]
        return p.point_at(local), p.tangent_at(local), p.curvature_at(local)

    def point_at(self, s: float) -> Point2:
        i, local = self._locate(s)
        return self.primitives[i].point_at(local)

    def turning(self, s: float) -> float:
        """Accumulated signed turning (unwrapped heading change) on [0, s]."""
        i, local = self._locate(s)
        p = self.primitives[i]
        partial = p.sweep_angle * (local / p.length)
        return self._turn_breaks[i] + partial

    @property
    def start_point(self) -> Point2:
        return self.primitives[0].start_point

    @property
    def end_point(self) -> Point2:
        return self.primitives[-1].end_point

    @property
    def start_tangent(self) -> Vec2:
        return self.primitives[0].start_tangent

    @property
    def end_tangent(self) -> Vec2:
        return self.primitives[-1].end_tangent

    def reversed_copy(self) -> "PiecewiseCurve":
        return PiecewiseCurve([p.reversed() for p in reversed(self.primitives)])

    def sample_at(self, svals: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Vectorized evaluation: points (n,2), tangents (n,2), curvature (n,)."""
        svals = np.asarray(svals, dtype=float)
        slack = 1e-12 * max(1.0, self.length)
        if svals.min(initial=0.0) < -slack or svals.max(initial=0.0) > self.length + slack:
            raise OutOfRange("sample arc length outside [0, L]")
        s = np.clip(svals, 0.0, self.length)
        idx = np.clip(np.searchsorted(self.breaks, s, side="right") - 1,
                      0, len(self.primitives) - 1)
        pts = np.empty((s.size, 2))
        tans = np.empty((s.size, 2))
        curv = np.empty(s.size)
        for i, prim in enumerate(self.primitives):
            mask = idx == i
            if not mask.any():
                continue
            local = s[mask] - self.breaks[i]
            if isinstance(prim, Segment):
                d = prim.direction
                pts[mask, 0] = prim.start.x + d.x * local
                pts[mask, 1] = prim.start.y + d.y * local
                tans[mask, 0] = d.x
                tans[mask, 1] = d.y
                curv[mask] = 0.0
            else:
                psi = prim.start_angle + prim.sweep * (local / prim.length)
                sign = 1.0 if prim.sweep > 0 else -1.0
                pts[mask, 0] = prim.center.x + prim.radius * np.cos(psi)
                pts[mask, 1] = prim.center.y + prim.radius * np.sin(psi)
                tans[mask, 0] = -sign * np.sin(psi)
                tans[mask, 1] = sign * np.cos(psi)
                curv[mask] = sign / prim.radius
        return pts, tans, curv


class PathBuilder:
    """Grow a primitive chain by straight runs and turns from a pose."""

    def __init__(self, start: Point2 = Vec2(0.0, 0.0), heading: float = 0.0):
        self._point = start
        self._heading = heading
        self._prims: list[CurvePrimitive] = []

    @property
    def point(self) -> Point2:
        return self._point

    @property
    def heading(self) -> float:
        return self._heading

    def line(self, length: float) -> "PathBuilder":
        if length < 0.0:
            raise InvalidInput(f"negative segment length {length!r}")
        if length > 0.0:
            end = self._point + from_polar(self._heading, length)
            self._prims.append(Segment(self._point, end))
            self._point = end
        return self

    def arc(self, radius: float, sweep: float) -> "PathBuilder":
        if sweep == 0.0:
            return self
        direction = from_polar(self._heading)
        side = rot90(direction) if sweep > 0 else -rot90(direction)
        center = self._point + side * radius
        start_angle = (self._point - center).angle()
        a = Arc(center, radius, start_angle, sweep)
        self._prims.append(a)
        self._point = a.end_point
        self._heading = self._heading + sweep
        return self

    def build(self, *, require_g1: bool = True) -> PiecewiseCurve:
        return PiecewiseCurve(self._prims, require_g1=require_g1)


def heading(curve: PiecewiseCurve, inst: ProblemInstance, s: float) -> float:
    """Continuous (unwrapped) heading relative to the instance tangent alpha.

    phi(0) is the principal angle from alpha to the start tangent (zero
    for admissible curves); later values accumulate the signed sweeps
    and are deliberately not re-wrapped.
    """
    phi0 = oriented_angle(inst.alpha, curve.start_tangent)
    return phi0 + curve.turning(s)


def max_curvature(curve: PiecewiseCurve) -> float:
    """Largest |curvature| over the chain; segments contribute zero."""
    best = 0.0
    for p in curve.primitives:
        if isinstance(p, Arc):
            best = max(best, 1.0 / p.radius)
    return best


@dataclass(frozen=True)
class MembershipReport:
    """Per-condition residuals for the admissibility check."""

    endpoint_a_residual: float
    endpoint_b_residual: float
    tangent_a_residual: float
    tangent_b_residual: float
    unit_speed: bool
    curvature_nonnegative: bool
    phi_monotone: bool
    phi_range_ok: bool
    in_e: bool

    def as_dict(self) -> dict:
        return {
            "endpointA_residual": self.endpoint_a_residual,
            "endpointB_residual": self.endpoint_b_residual,
            "tangentA_residual": self.tangent_a_residual,
            "tangentB_residual": self.tangent_b_residual,
            "unitSpeed": self.unit_speed,
            "curvatureNonnegative": self.curvature_nonnegative,
            "phiMonotone": self.phi_monotone,
            "phiRangeOK": self.phi_range_ok,
            "inE": self.in_e,
        }


def check_membership(curve: PiecewiseCurve, inst: ProblemInstance) -> MembershipReport:
    """Evaluate every admissibility condition against the instance.

    Position residuals are compared to 1e-9 * scene diameter, angular
    residuals to 1e-9 rad.  Headings are piecewise linear in arc length,
    so monotonicity and the range check are exact at the breakpoints.
    """
    pos_tol = 1e-9 * inst.diameter
    ang_tol = 1e-9
    endpoint_a = dist(curve.start_point, inst.A)
    endpoint_b = dist(curve.end_point, inst.B)
    tangent_a = abs(oriented_angle(curve.start_tangent, inst.alpha))
    tangent_b = abs(oriented_angle(curve.end_tangent, inst.beta))
    curvature_ok = all(p.sweep_angle >= 0.0 for p in curve.primitives)
    phi0 = oriented_angle(inst.alpha, curve.start_tangent)
    phis = [phi0 + t for t in curve._turn_breaks]
    monotone = all(b - a >= -ang_tol for a, b in zip(phis, phis[1:]))
    range_ok = min(phis) >= -ang_tol and max(phis) <= inst.omega + ang_tol
    in_e = (endpoint_a <= pos_tol and endpoint_b <= pos_tol
            and tangent_a <= ang_tol and tangent_b <= ang_tol
            and curvature_ok and monotone and range_ok)
    return MembershipReport(
        endpoint_a_residual=endpoint_a,
        endpoint_b_residual=endpoint_b,
        tangent_a_residual=tangent_a,
        tangent_b_residual=tangent_b,
        unit_speed=True,
        curvature_nonnegative=curvature_ok,
        phi_monotone=monotone,
        phi_range_ok=range_ok,
        in_e=in_e,
    )


def sample_polyline(curve: PiecewiseCurve, n: int) -> list[tuple[float, Point2, Vec2, float]]:
    """n+1 samples at equal arc-length spacing, both endpoints included."""
    if n < 1:
        raise InvalidInput(f"sample count must be >= 1, got {n!r}")
    rows = []
    for i in range(n + 1):
        s = curve.length * i / n
        point, tangent, curv = curve.evaluate(s)
        rows.append((s, point, tangent, curv))
    return rows


def numeric_curvature(points: list[Point2]) -> list[float]:
    """Discrete curvature of a sampled curve from chord headings.

    The turning between consecutive chords, divided by the mean adjacent
    chord length, estimates |curvature| to second order in the spacing;
    the first and last samples reuse the nearest interior estimate.
    """
    m = len(points)
    if m < 3:
        raise InvalidInput("need at least 3 points")
    headings = []
    chords = []
    for p, q in zip(points, points[1:]):
        d = q - p
        n = d.norm()
        if n == 0.0:
            raise InvalidInput("duplicate consecutive sample points")
        headings.append(d.angle())
        chords.append(n)
    kappa = [0.0] * m
    for i in range(1, m - 1):
        dpsi = principal_angle(headings[i] - headings[i - 1])
        kappa[i] = dpsi / (0.5 * (chords[i - 1] + chords[i]))
    kappa[0] = kappa[1]
    kappa[-1] = kappa[-2]
    return kappa


# ---------------------------------------------------------------------------
# JSON schema:
# {"primitives":[{"type":"segment","start":[x,y],"end":[x,y]}
#               |{"type":"arc","center":[x,y],"radius":r,"startAngle":a,"sweep":w}]}

def _pair(obj, key):
    val = obj.get(key)
    if (not isinstance(val, (list, tuple)) or len(val) != 2
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in val)):
        raise InvalidInput(f"field {key!r} must be a pair of numbers")
    return Vec2(float(val[0]), float(val[1]))


def _number(obj, key):
    val = obj.get(key)
    if not isinstance(val, (int, float)) or isinstance(val, bool):
        raise InvalidInput(f"field {key!r} must be a number")
    return float(val)


def curve_from_json(obj: dict) -> PiecewiseCurve:
    if not isinstance(obj, dict) or not isinstance(obj.get("primitives"), list):
        raise InvalidInput('curve JSON must be an object with a "primitives" list')
    prims: list[CurvePrimitive] = []
    for entry in obj["primitives"]:
        if not isinstance(entry, dict):
            raise InvalidInput("each primitive must be an object")
        kind = entry.get("type")
        if kind == "segment":
            prims.append(Segment(_pair(entry, "start"), _pair(entry, "end")))
        elif kind == "arc":
            prims.append(Arc(_pair(entry, "center"), _number(entry, "radius"),
                             _number(entry, "startAngle"), _number(entry, "sweep")))
        else:
            raise InvalidInput(f"unknown primitive type {kind!r}")
    return PiecewiseCurve(prims)


def curve_to_json(curve: PiecewiseCurve) -> dict:
    prims = []
    for p in curve.primitives:
        if isinstance(p, Segment):
            prims.append({"type": "segment",
                          "start": [p.start.x, p.start.y],
                          "end": [p.end.x, p.end.y]})
        else:
            prims.append({"type": "arc",
                          "center": [p.center.x, p.center.y],
                          "radius": p.radius,
                          "startAngle": p.start_angle,
                          "sweep": p.sweep})
    return {"primitives": prims}
