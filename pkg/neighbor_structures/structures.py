from dataclasses import dataclass, field

from distances import SitePair


@dataclass(frozen=True)
class Hull:
    """Strictly convex hull; vertices are site indices in counterclockwise order."""
    vertices: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        """Directed CCW edges (a, b) as site indices."""
        return [(self.vertices[t], self.vertices[(t + 1) % self.k]) for t in range(self.k)]


@dataclass(frozen=True)
class Triangulation:
    edges: frozenset[SitePair]
    # CCW index triples, rotated so the smallest index comes first
    triangles: frozenset[tuple[int, int, int]] = field(default_factory=frozenset)

    def has_edge(self, i: int, j: int) -> bool:
        return SitePair.of(i, j) in self.edges


@dataclass(frozen=True)
class AntipodalPairs:
    pairs: frozenset[SitePair]

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair) -> bool:
        return pair in self.pairs
