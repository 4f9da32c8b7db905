"""Validated boundary data for the curve-synthesis problem.

A problem instance is three pairwise distinct points O, A, B.  The unit
tangent at A points from A towards O, the unit tangent at B points from
O towards B, and the turning angle between them must lie strictly
inside (0, pi).  Data whose turning angle is negative is normalized by
swapping A and B (traversing the sought curve backwards); the instance
remembers this in its ``reversed`` flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import DegenerateInput, IllPosedAngle, InvalidInput, NoAdmissibleCurve
from .geometry import (
    Point2,
    Vec2,
    dist,
    from_polar,
    line_intersection,
    normalized,
    oriented_angle,
    principal_angle,
)

#: relative tolerance for distinct-point checks (scaled by scene diameter)
EPS_DIST = 1e-9
#: absolute tolerance (radians) for angle degeneracy checks
EPS_ANG = 1e-9


@dataclass(frozen=True)
class ProblemInstance:
    """Normalized boundary data (O, A, B, alpha, beta, Omega)."""

    A: Point2
    B: Point2
    O: Point2
    alpha: Vec2
    beta: Vec2
    omega: float
    symmetric: bool
    reversed: bool

    @property
    def oa(self) -> float:
        return dist(self.O, self.A)

    @property
    def ob(self) -> float:
        return dist(self.O, self.B)

    @property
    def diameter(self) -> float:
        """Scene scale: largest pairwise distance among O, A, B."""
        return max(dist(self.O, self.A), dist(self.O, self.B), dist(self.A, self.B))


def make_instance(O: Point2, A: Point2, B: Point2) -> ProblemInstance:
    """Build an instance from the apex O and the endpoints A, B.

    When the raw turning angle is negative the traversal is reversed
    (A and B swapped, both tangents negated) so that the stored angle
    is always in (0, pi); the ``reversed`` flag records the swap.
    """
    diam = max(dist(O, A), dist(O, B), dist(A, B))
    if diam == 0.0:
        raise DegenerateInput("O, A, B all coincide")
    eps = EPS_DIST * diam
    if dist(O, A) <= eps or dist(O, B) <= eps or dist(A, B) <= eps:
        raise DegenerateInput("O, A, B must be pairwise distinct")

    alpha = normalized(O - A)
    beta = normalized(B - O)
    omega = oriented_angle(alpha, beta)
    if abs(omega) <= EPS_ANG or abs(omega) >= math.pi - EPS_ANG:
        raise IllPosedAngle(
            f"turning angle {omega!r} is within tolerance of a multiple of pi"
        )

    rev = omega < 0.0
    if rev:
        A, B = B, A
        alpha, beta = -beta, -alpha
        omega = -omega
    symmetric = abs(dist(O, A) - dist(O, B)) <= eps
    return ProblemInstance(A=A, B=B, O=O, alpha=alpha, beta=beta,
                           omega=omega, symmetric=symmetric, reversed=rev)


def instance_from_tangents(A: Point2, B: Point2, alpha: Vec2, beta: Vec2) -> ProblemInstance:
    """Recover O as the intersection of the two tangent lines.

    With AO = u0*alpha and OB = v0*beta, both u0 and v0 must be strictly
    positive, otherwise no admissible curve exists for this data.
    """
    if abs(alpha.norm() - 1.0) > EPS_ANG or abs(beta.norm() - 1.0) > EPS_ANG:
        raise InvalidInput("alpha and beta must be unit vectors")
    if abs(alpha.cross(beta)) <= EPS_ANG:
        raise IllPosedAngle("tangent lines are parallel")
    O = line_intersection(A, alpha, B, beta)
    u0 = (O - A).dot(alpha)
    v0 = (B - O).dot(beta)
    scale = max(dist(A, B), dist(A, O), dist(B, O))
    if u0 <= EPS_DIST * scale or v0 <= EPS_DIST * scale:
        raise NoAdmissibleCurve(
            f"tangent orientation admits no curve (u0={u0!r}, v0={v0!r})"
        )
    return make_instance(O, A, B)


def similarity_transform(inst: ProblemInstance, rotation: float, scale: float,
                         translation: Vec2) -> ProblemInstance:
    """Rotate, scale and translate an instance.  Omega is unchanged."""
    if scale <= 0.0:
        raise InvalidInput(f"scale must be positive, got {scale!r}")
    c, s = math.cos(rotation), math.sin(rotation)

    def mov(p: Point2) -> Point2:
        return Vec2(scale * (c * p.x - s * p.y) + translation.x,
                    scale * (s * p.x + c * p.y) + translation.y)

    def rot(v: Vec2) -> Vec2:
        return Vec2(c * v.x - s * v.y, s * v.x + c * v.y)

    return replace(inst, A=mov(inst.A), B=mov(inst.B), O=mov(inst.O),
                   alpha=rot(inst.alpha), beta=rot(inst.beta))


def random_instance(rng, omega: float | None = None) -> ProblemInstance:
    """Draw a valid instance: omega in (0.1, pi - 0.1) unless given,
    leg lengths in [0.5, 2], random pose."""
    if omega is None:
        omega = rng.uniform(0.1 + 1e-6, math.pi - 0.1 - 1e-6)
    if not (EPS_ANG < omega < math.pi - EPS_ANG):
        raise InvalidInput(f"omega {omega!r} outside (0, pi)")
    pose = rng.uniform(-math.pi, math.pi)
    oa = rng.uniform(0.5, 2.0)
    ob = rng.uniform(0.5, 2.0)
    O = Vec2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
    alpha = from_polar(pose)
    beta = from_polar(principal_angle(pose + omega))
    A = O - alpha * oa
    B = O + beta * ob
    return make_instance(O, A, B)


# ---------------------------------------------------------------------------
# JSON schema: {"A":[x,y],"B":[x,y],"O":[x,y]}
#          or  {"A":[x,y],"alpha":[x,y],"B":[x,y],"beta":[x,y]}

def _point_from_json(obj, key: str) -> Point2:
    val = obj.get(key)
    if (not isinstance(val, (list, tuple)) or len(val) != 2
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in val)):
        raise InvalidInput(f"field {key!r} must be a pair of numbers")
    return Vec2(float(val[0]), float(val[1]))


def instance_from_json(obj: dict) -> ProblemInstance:
    """Parse the instance schema; exactly one of "O" / ("alpha","beta")."""
    if not isinstance(obj, dict):
        raise InvalidInput("instance JSON must be an object")
    has_o = "O" in obj
    has_tangents = "alpha" in obj or "beta" in obj
    if has_o == has_tangents:
        raise InvalidInput('exactly one of "O" or ("alpha","beta") must be present')
    A = _point_from_json(obj, "A")
    B = _point_from_json(obj, "B")
    if has_o:
        return make_instance(_point_from_json(obj, "O"), A, B)
    if "alpha" not in obj or "beta" not in obj:
        raise InvalidInput('both "alpha" and "beta" are required')
    return instance_from_tangents(A, B, _point_from_json(obj, "alpha"),
                                  _point_from_json(obj, "beta"))


def instance_to_json(inst: ProblemInstance) -> dict:
    return {
        "A": [inst.A.x, inst.A.y],
        "B": [inst.B.x, inst.B.y],
        "O": [inst.O.x, inst.O.y],
    }
