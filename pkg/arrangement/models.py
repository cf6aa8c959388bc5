import math
from dataclasses import dataclass
from typing import Optional

from distances import SitePair
from geom_core import Point2


@dataclass(frozen=True)
class Line:
    """a*x + b*y + c = 0 with a^2 + b^2 = 1 and the leading nonzero of (a, b) positive."""
    a: float
    b: float
    c: float
    source: Optional[SitePair] = None

    @classmethod
    def normalized(cls, a: float, b: float, c: float, source: Optional[SitePair] = None) -> "Line":
        norm = math.hypot(a, b)
        if norm == 0.0:
            raise ValueError("a line needs (a, b) != (0, 0)")
        a, b, c = a / norm, b / norm, c / norm
        if a < 0 or (a == 0 and b < 0):
            a, b, c = -a, -b, -c
        return cls(a, b, c, source)

    @classmethod
    def through(cls, p: Point2, q: Point2, source: Optional[SitePair] = None) -> "Line":
        a = -(q.y - p.y)
        b = q.x - p.x
        return cls.normalized(a, b, -(a * p.x + b * p.y), source)

    def side(self, x, y):
        return self.a * x + self.b * y + self.c

    def direction(self) -> tuple[float, float]:
        return -self.b, self.a


@dataclass(frozen=True)
class Vertex:
    point: tuple[float, float]
    lines: frozenset[int]
    # lowest-index pair of lines that produced this vertex
    witness: tuple[int, int]


@dataclass(frozen=True)
class Edge:
    """Piece of line `line` between two vertices; None marks an end at infinity."""
    line: int
    start: Optional[int]
    end: Optional[int]

    @property
    def bounded(self) -> bool:
        return self.start is not None and self.end is not None


@dataclass(frozen=True)
class Face:
    polygon: tuple[tuple[float, float], ...]
    representative: tuple[float, float]
    signs: tuple[int, ...]
    bounded: bool
    label: Optional[SitePair] = None
    tie: bool = False


@dataclass(frozen=True)
class Arrangement:
    lines: tuple[Line, ...]
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    faces: tuple[Face, ...]
    box: tuple[float, float, float, float]

    def euler_characteristic(self) -> int:
        """V - E + F with one extra vertex at infinity; 2 for a valid arrangement."""
        return (len(self.vertices) + 1) - len(self.edges) + len(self.faces)
