from itertools import combinations

from distances import DistanceKind, DistanceSpec, SitePair
from geom_core import Point2
from logger.Logger import LOG
from neighbor_structures import delaunay
from .models import Mode


def pruning_applies(spec: DistanceSpec, mode: Mode) -> bool:
    """Nearest K and nearest P_c with c >= 0 only ever give regions to Delaunay edges."""
    if mode is not Mode.Nearest:
        return False
    if spec.kind is DistanceKind.ContainingRadius:
        return True
    return spec.kind is DistanceKind.ParamPerimeter and spec.c >= 0.0


def all_pairs(n: int) -> list[SitePair]:
    return [SitePair(i=i, j=j) for i, j in combinations(range(n), 2)]


def candidate_pairs(sites: list[Point2], spec: DistanceSpec, mode: Mode) -> list[SitePair]:
    n = len(sites)
    if n < 3 or not pruning_applies(spec, mode):
        return all_pairs(n)
    edges = sorted(delaunay(sites).edges, key=lambda p: (p.i, p.j))
    LOG.debug(f"Delaunay pruning for {spec.label()} {mode.value}: {len(edges)} of {n * (n - 1) // 2} pairs")
    return edges
