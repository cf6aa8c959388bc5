from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from geom_core import Point2


class Provenance(str, Enum):
    TwoLine = "two-line"
    CollinearUnit = "collinear-unit"
    ConvexPosition = "convex-position"
    RandomGeneral = "random-general"


@dataclass(frozen=True)
class ConstructionSet:
    """
    Generated site set. For two-line sets the first ceil(n/2) sites lie on
    y = 0 and the rest on y = d.
    """
    sites: tuple[Point2, ...]
    provenance: Provenance
    seed: Optional[int] = None
    params: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.sites)

    def line_split(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Indices of the sites on the lower and upper line of a two-line set."""
        half = (self.n + 1) // 2
        return tuple(range(half)), tuple(range(half, self.n))

    def header(self) -> str:
        parts = [f"provenance={self.provenance.value}", f"n={self.n}"]
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        parts.extend(f"{k}={v}" for k, v in sorted(self.params.items()))
        return " ".join(parts)


@dataclass(frozen=True)
class CircleIntersectionCounts:
    circles: int
    pairs_intersecting: int
    # two per crossing pair, before any deduplication
    incidences: int
    distinct_points: int
    non_site_points: int
    coincident_pairs: int = 0

    def as_dict(self) -> dict:
        return {
            "circles": self.circles,
            "pairsIntersecting": self.pairs_intersecting,
            "incidences": self.incidences,
            "distinctPoints": self.distinct_points,
            "nonSitePoints": self.non_site_points,
            "coincidentPairs": self.coincident_pairs,
        }
