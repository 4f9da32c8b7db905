"""Bounded-radius curve families used to probe the optimality theorem.

Two families live here:

* the two-arc-plus-segment curve of radius R (both arcs turn
  counterclockwise), admissible exactly for 0 < R <= R_a where R_a is
  the optimal radius; at the upper end it degenerates into the optimal
  arc+segment curve;
* composite curves segment/arc/segment/arc/segment whose two arcs split
  the turning angle in half, the family the optimality proof compares
  against.  A grid sweep over both families gives an empirical check of
  the min-max theorem.

Composite parameters are always expressed in the arc-first orientation
(the problem is reversed and mirrored when OA > OB), matching the
closed-form certificates; the returned curves are mapped back to world
coordinates either way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curves import Arc, PathBuilder, PiecewiseCurve, Segment
from .errors import InternalError, InvalidInput, RadiusNotAdmissible
from .geometry import Frame, Point2, dist, normalized, oriented_angle, principal_angle, rot90
from .instance import ProblemInstance
from .synthesis import arc_radius

#: relative slack accepted at the admissibility boundary R = R_a
LIMIT_SLACK = 1e-12
#: relative threshold below which a curve counts as the limit case
LIMIT_CASE_REL = 1e-9

INTERIOR = "interior"
LIMIT = "limit"


def is_feasible_radius(inst: ProblemInstance, radius: float) -> bool:
    """True iff a curve of minimum turn radius `radius` is admissible,
    i.e. 0 < radius <= R_a (with relative slack 1e-12 at the boundary)."""
    return 0.0 < radius <= arc_radius(inst) * (1.0 + LIMIT_SLACK)


@dataclass(frozen=True)
class DubinsCurve:
    radius: float
    curve: PiecewiseCurve
    case: str  # INTERIOR or LIMIT


def dubins_curve(inst: ProblemInstance, radius: float) -> DubinsCurve:
    """The admissible two-arc-plus-segment curve of turn radius `radius`.

    Both arcs turn counterclockwise: one leaves A tangent to the line
    (OA), one reaches B tangent to (OB); the connecting segment is their
    common external tangent, parallel to the line of arc centers.  At
    radius = R_a one arc degenerates and the result equals the optimal
    curve; beyond R_a no such admissible curve exists.
    """
    if radius <= 0.0 or not math.isfinite(radius):
        raise InvalidInput(f"radius must be positive, got {radius!r}")
    ra = arc_radius(inst)
    if radius > ra * (1.0 + LIMIT_SLACK):
        raise RadiusNotAdmissible(f"radius {radius!r} exceeds the limit {ra!r}")
    r = min(radius, ra)

    center_a = inst.A + rot90(inst.alpha) * r
    center_b = inst.B + rot90(inst.beta) * r
    gap = dist(center_a, center_b)
    prims: list
    if gap <= 1e-12 * inst.diameter:
        # symmetric limit: the two arcs close into one
        prims = [Arc(center_a, r, (inst.A - center_a).angle(), inst.omega)]
    else:
        t = normalized(center_b - center_a)
        sweep1 = oriented_angle(inst.alpha, t)
        if sweep1 < -1e-9 or sweep1 > inst.omega + 1e-9:
            raise InternalError(f"tangent construction left [0, omega]: {sweep1!r}")
        sweep1 = min(max(sweep1, 0.0), inst.omega)
        sweep2 = inst.omega - sweep1
        e = center_a - rot90(t) * r
        d = center_b - rot90(t) * r
        prims = []
        if sweep1 * r > 1e-12 * inst.diameter:
            prims.append(Arc(center_a, r, (inst.A - center_a).angle(), sweep1))
        if dist(e, d) > 1e-12 * inst.diameter:
            prims.append(Segment(e, d))
        if sweep2 * r > 1e-12 * inst.diameter:
            prims.append(Arc(center_b, r, (d - center_b).angle(), sweep2))
    case = LIMIT if abs(radius - ra) <= LIMIT_CASE_REL * ra else INTERIOR
    return DubinsCurve(radius=radius, curve=PiecewiseCurve(prims), case=case)


# ---------------------------------------------------------------------------
# composite family (segment d1, arc R1, segment d2, arc R2, segment d3)

@dataclass(frozen=True)
class _ArcFirstView:
    """Geometry of the instance in the arc-first normalized frame."""

    omega: float
    ra: float
    seg: float          # segment length of the optimal curve
    xb: float           # endpoint coordinates in the normalized frame
    yb: float
    mirrored: bool


def arc_first_view(inst: ProblemInstance) -> _ArcFirstView:
    ra = arc_radius(inst)
    om = inst.omega
    seg = abs(inst.oa - inst.ob)
    xb = ra * math.sin(om) + seg * math.cos(om)
    yb = ra * (1.0 - math.cos(om)) + seg * math.sin(om)
    return _ArcFirstView(omega=om, ra=ra, seg=seg, xb=xb, yb=yb,
                         mirrored=inst.oa > inst.ob)


def _composite_params(view: _ArcFirstView, r1: float, r2: float,
                      split: float, tol: float):
    """Segment lengths (d1, d2, d3) closing the composite, or None.

    The endpoint condition is a rank-2 linear system in three segment
    lengths; its kernel direction has signs (+, -, +), so the minimal
    total-length solution with d1, d3 >= 0 is feasible iff its d2 is.
    """
    om = view.omega
    s1 = split * om
    sin1, cos1 = math.sin(s1), math.cos(s1)
    sino, coso = math.sin(om), math.cos(om)
    rx = view.xb - (r1 * sin1 + r2 * (sino - sin1))
    ry = view.yb - (r1 * (1.0 - cos1) + r2 * (cos1 - coso))
    p2 = ry / sin1
    p1 = rx - p2 * cos1
    k1 = math.sin(om - s1) / sin1
    k2 = -sino / sin1
    t = max(0.0, -p1 / k1)
    d1 = p1 + k1 * t
    d2 = p2 + k2 * t
    d3 = t
    if d2 < -tol:
        return None
    return max(d1, 0.0), max(d2, 0.0), d3


@dataclass(frozen=True)
class CompositeCurve:
    """Five-piece competitor curve, parameters in arc-first convention."""

    r1: float
    r2: float
    d1: float
    d2: float
    d3: float
    sweep1: float
    sweep2: float
    curve: PiecewiseCurve


def _mirror_back(prims, inst: ProblemInstance) -> list:
    """Undo the reverse+mirror normalization primitive by primitive."""
    beta, B = inst.beta, inst.B
    e2 = rot90(beta)
    b_angle = beta.angle()

    def point_map(q: Point2) -> Point2:
        return B - beta * q.x + e2 * q.y

    out = []
    for p in reversed(prims):
        if isinstance(p, Segment):
            out.append(Segment(point_map(p.end), point_map(p.start)))
        else:
            start = principal_angle(b_angle + math.pi - p.start_angle - p.sweep)
            out.append(Arc(point_map(p.center), p.radius, start, p.sweep))
    return out


def composite_solve(inst: ProblemInstance, r1: float, r2: float,
                    split: float = 0.5) -> CompositeCurve | None:
    """Close the composite family for the given arc radii, if possible.

    Returns None when no admissible composite exists (a segment length
    would have to be negative).  Sweeps default to half the turning
    angle each; `split` moves the break point.
    """
    if not (r1 > 0.0 and r2 > 0.0 and math.isfinite(r1) and math.isfinite(r2)):
        raise InvalidInput("arc radii must be positive and finite")
    if not 0.0 < split < 1.0:
        raise InvalidInput(f"split must lie in (0, 1), got {split!r}")
    view = arc_first_view(inst)
    tol = 1e-9 * inst.diameter
    params = _composite_params(view, r1, r2, split, tol)
    if params is None:
        return None
    d1, d2, d3 = params
    s1 = split * view.omega
    s2 = view.omega - s1

    builder = PathBuilder()
    builder.line(d1).arc(r1, s1).line(d2).arc(r2, s2).line(d3)
    abstract = builder.build()
    if view.mirrored:
        prims = _mirror_back(abstract.primitives, inst)
    else:
        frame = Frame(inst.A, inst.alpha)
        a_angle = inst.alpha.angle()
        prims = []
        for p in abstract.primitives:
            if isinstance(p, Segment):
                prims.append(Segment(frame.from_frame(p.start), frame.from_frame(p.end)))
            else:
                prims.append(Arc(frame.from_frame(p.center), p.radius,
                                 principal_angle(p.start_angle + a_angle), p.sweep))
    curve = PiecewiseCurve(prims)
    if dist(curve.end_point, inst.B) > 10.0 * tol:
        raise InternalError("composite construction failed to close on B")
    return CompositeCurve(r1=r1, r2=r2, d1=d1, d2=d2, d3=d3,
                          sweep1=s1, sweep2=s2, curve=curve)


def _p2_params(view: _ArcFirstView, r: float, tol: float):
    """Segment lengths (d1, d3) for the single-arc two-segment family."""
    om = view.omega
    sino, coso = math.sin(om), math.cos(om)
    d3 = (view.yb - r * (1.0 - coso)) / sino
    d1 = view.xb - r * sino - d3 * coso
    if d1 < -tol or d3 < -tol:
        return None
    return max(d1, 0.0), max(d3, 0.0)


@dataclass(frozen=True)
class SweepReport:
    """Outcome of the empirical min-max check over the curve families."""

    min_max_curvature: float
    argmin: dict
    margin: float
    grid_size: tuple[int, int]
    feasible_count: int
    ra: float

    def as_dict(self) -> dict:
        return {
            "minMaxCurvature": self.min_max_curvature,
            "argmin": self.argmin,
            "margin": self.margin,
            "gridSize": [self.grid_size[0], self.grid_size[1]],
        }


def family_sweep(inst: ProblemInstance, grid_n: int = 60,
                 r_lo: float = 0.2, r_hi: float = 3.0) -> SweepReport:
    """Grid-sweep both curve families and report the best max curvature.

    Every admissible composite and single-arc curve on an n x n radius
    grid spanning [r_lo, r_hi] * R_a is scored by its max curvature
    1/min(R1, R2); the report carries the minimum, the parameters
    achieving it and the margin against the theoretical bound 1/R_a.
    """
    if grid_n < 2:
        raise InvalidInput(f"grid size must be >= 2, got {grid_n!r}")
    if not (0.0 < r_lo < r_hi and math.isfinite(r_hi)):
        raise InvalidInput("need 0 < r_lo < r_hi, both finite")
    view = arc_first_view(inst)
    ra = view.ra
    tol = 1e-9 * inst.diameter
    radii = [ra * (r_lo + (r_hi - r_lo) * i / (grid_n - 1)) for i in range(grid_n)]

    best = math.inf
    argmin: dict = {}
    feasible = 0
    for r1 in radii:
        for r2 in radii:
            params = _composite_params(view, r1, r2, 0.5, tol)
            if params is None:
                continue
            feasible += 1
            mc = 1.0 / min(r1, r2)
            if mc < best:
                best = mc
                d1, d2, d3 = params
                argmin = {"family": "p4", "R1": r1, "R2": r2,
                          "d1": d1, "d2": d2, "d3": d3}
    for r in radii:
        params = _p2_params(view, r, tol)
        if params is None:
            continue
        feasible += 1
        mc = 1.0 / r
        if mc < best:
            best = mc
            d1, d3 = params
            argmin = {"family": "p2", "R1": r, "R2": r,
                      "d1": d1, "d2": 0.0, "d3": d3}
    if not math.isfinite(best):
        raise InternalError("no admissible curve found on the sweep grid")
    return SweepReport(
        min_max_curvature=best,
        argmin=argmin,
        margin=best - 1.0 / ra,
        grid_size=(grid_n, grid_n),
        feasible_count=feasible,
        ra=ra,
    )
