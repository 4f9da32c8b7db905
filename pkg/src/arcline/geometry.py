"""Exact planar primitives: vectors, principal angles, rotations, frames.

All angles are radians.  Oriented angles are reduced to the principal
range (-pi, pi]; equality of angles is meant strictly in that range,
not modulo 2*pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInput

TWO_PI = 2.0 * math.pi

#: tolerance for "this vector must be unit length"
UNIT_TOL = 1e-9


def principal_angle(value: float) -> float:
    """Wrap any real angle into the principal range (-pi, pi]."""
    if not math.isfinite(value):
        raise InvalidInput(f"angle must be finite, got {value!r}")
    wrapped = math.remainder(value, TWO_PI)
    if wrapped <= -math.pi:
        # remainder() lands on -pi for odd multiples of pi
        wrapped = math.pi
    return wrapped


@dataclass(frozen=True)
class Vec2:
    """Immutable 2D vector / point with finite components."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidInput(f"non-finite components ({self.x!r}, {self.y!r})")

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def __mul__(self, s: float) -> "Vec2":
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def angle(self) -> float:
        """Direction angle in (-pi, pi] (atan2 convention)."""
        return math.atan2(self.y, self.x)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


#: points and vectors share one representation
Point2 = Vec2


def rot90(u: Vec2) -> Vec2:
    """Rotate by +pi/2: (x, y) -> (-y, x).  Norm-preserving."""
    return Vec2(-u.y, u.x)


def from_polar(angle: float, radius: float = 1.0) -> Vec2:
    return Vec2(radius * math.cos(angle), radius * math.sin(angle))


def dist(a: Vec2, b: Vec2) -> float:
    return math.hypot(a.x - b.x, a.y - b.y)


def normalized(v: Vec2) -> Vec2:
    n = v.norm()
    if n == 0.0:
        raise InvalidInput("cannot normalize the zero vector")
    return Vec2(v.x / n, v.y / n)


def _require_unit(v: Vec2, name: str = "vector") -> None:
    n = v.norm()
    if abs(n - 1.0) > UNIT_TOL:
        raise InvalidInput(f"{name} must be unit length, |v| = {n!r}")


def oriented_angle(u: Vec2, v: Vec2) -> float:
    """Signed angle in (-pi, pi] that rotates unit vector u onto unit v.

    Opposite vectors give +pi, never -pi.
    """
    _require_unit(u, "u")
    _require_unit(v, "v")
    return principal_angle(math.atan2(u.cross(v), u.dot(v)))


@dataclass(frozen=True)
class Frame:
    """Direct orthonormal frame (origin, x_axis, rot90(x_axis))."""

    origin: Point2
    x_axis: Vec2

    def __post_init__(self) -> None:
        _require_unit(self.x_axis, "frame x_axis")
        # renormalize so the unit invariant holds to machine precision
        object.__setattr__(self, "x_axis", normalized(self.x_axis))

    @property
    def y_axis(self) -> Vec2:
        return rot90(self.x_axis)

    def to_frame(self, p: Point2) -> Point2:
        d = p - self.origin
        return Vec2(d.dot(self.x_axis), d.dot(self.y_axis))

    def from_frame(self, p: Point2) -> Point2:
        return self.origin + self.x_axis * p.x + self.y_axis * p.y


def line_intersection(p1: Point2, d1: Vec2, p2: Point2, d2: Vec2) -> Point2:
    """Intersection of the lines p1 + t*d1 and p2 + s*d2.

    Raises IllPosedAngle-grade InvalidInput when the directions are
    (anti)parallel.
    """
    den = d1.cross(d2)
    if abs(den) <= UNIT_TOL * max(d1.norm() * d2.norm(), 1e-300):
        raise InvalidInput("lines are parallel; no unique intersection")
    t = (p2 - p1).cross(d2) / den
    return p1 + d1 * t


def distance_to_line(p: Point2, origin: Point2, direction: Vec2) -> float:
    """Unsigned distance from p to the line through origin along direction."""
    d = normalized(direction)
    return abs(d.cross(p - origin))
