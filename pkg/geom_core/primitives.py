"""
Primitive geometry on immutable values: points, circles through and
containing three points, triangle measures.

Orientation decisions are exact (see predicates.py); metric values are plain
floating point.
"""
import math
from dataclasses import dataclass
from typing import Optional

from config.Config import RIGHT_ANGLE_RTOL
from exceptions import AllCoincident, DegenerateSegment, DuplicatePoint
from .predicates import Orientation, orient


@dataclass(frozen=True, slots=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"Point2 coordinates must be finite, got ({self.x}, {self.y})")

    def dist(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def dist2(self, other: "Point2") -> float:
        dx = self.x - other.x
        dy = self.y - other.y
        return dx * dx + dy * dy


@dataclass(frozen=True, slots=True)
class Circle:
    """A circle; radius = +inf (and no center) encodes the collinear case."""
    center: Optional[Point2]
    radius: float

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("Circle radius must be >= 0")
        if math.isinf(self.radius) and self.center is not None:
            raise ValueError("A degenerate (infinite) circle has no center")
        if not math.isinf(self.radius) and self.center is None:
            raise ValueError("A finite circle needs a center")

    @property
    def degenerate(self) -> bool:
        return math.isinf(self.radius)

    def contains(self, p: Point2, rtol: float = 1e-12) -> bool:
        if self.degenerate:
            return True
        return self.center.dist(p) <= self.radius * (1.0 + rtol) + rtol


DEGENERATE_CIRCLE = Circle(center=None, radius=math.inf)


def _diameter_circle(a: Point2, b: Point2) -> Circle:
    return Circle(Point2((a.x + b.x) / 2.0, (a.y + b.y) / 2.0), a.dist(b) / 2.0)


def circumcenter_xy(v: Point2, p: Point2, q: Point2) -> Optional[tuple[float, float]]:
    """Circumcenter coordinates, translated through v for accuracy; None if collinear."""
    bx, by = p.x - v.x, p.y - v.y
    cx, cy = q.x - v.x, q.y - v.y
    d = 2.0 * (bx * cy - by * cx)
    if d == 0.0 or orient(v, p, q) is Orientation.Collinear:
        return None
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    return v.x + ux, v.y + uy


def circumcircle(p: Point2, q: Point2, r: Point2) -> Circle:
    if p == q or q == r or p == r:
        raise DuplicatePoint(f"circumcircle needs three distinct points: {p}, {q}, {r}")
    center = circumcenter_xy(p, q, r)
    if center is None:
        return DEGENERATE_CIRCLE
    c = Point2(*center)
    return Circle(c, c.dist(p))


def min_enclosing_circle_3(p: Point2, q: Point2, r: Point2) -> Circle:
    """
    Minimum circle containing p, q, r.

    Acute or right triangle -> circumcircle; obtuse or collinear -> circle on
    the longest edge. Near-right triangles (relative tolerance RIGHT_ANGLE_RTOL)
    take the circumcircle branch.
    """
    if p == q == r:
        raise AllCoincident(f"all three points coincide at {p}")
    if p == q:
        return _diameter_circle(p, r)
    if q == r or p == r:
        return _diameter_circle(p, q)

    sides = sorted(
        [(p.dist2(q), p, q), (q.dist2(r), q, r), (p.dist2(r), p, r)],
        key=lambda s: s[0],
    )
    (s1, _, _), (s2, _, _), (longest, a, b) = sides
    if orient(p, q, r) is Orientation.Collinear or longest > (s1 + s2) * (1.0 + RIGHT_ANGLE_RTOL):
        return _diameter_circle(a, b)
    return circumcircle(p, q, r)


def triangle_area(a: Point2, b: Point2, c: Point2) -> float:
    if orient(a, b, c) is Orientation.Collinear:
        return 0.0
    return abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)) / 2.0


def point_segment_distance(x: Point2, a: Point2, b: Point2) -> float:
    if a == b:
        raise DegenerateSegment(f"segment endpoints coincide at {a}")
    abx, aby = b.x - a.x, b.y - a.y
    t = ((x.x - a.x) * abx + (x.y - a.y) * aby) / (abx * abx + aby * aby)
    t = min(1.0, max(0.0, t))
    return math.hypot(x.x - (a.x + t * abx), x.y - (a.y + t * aby))
