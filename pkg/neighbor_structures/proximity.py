import math
from dataclasses import dataclass
from itertools import combinations

from scipy.spatial import cKDTree

from geom_core import Point2
from distances import SitePair
from utils.util import sites_array


@dataclass(frozen=True)
class ClosestPair:
    pair: SitePair
    distance: float
    unique: bool


@dataclass(frozen=True)
class ClosestNeighbor:
    site: int
    neighbor: int
    distance: float
    runner_up: float
    unique: bool


def closest_pair(sites: list[Point2], rtol: float = 1e-12) -> ClosestPair:
    """Brute-force closest pair; unique is False when another pair ties within rtol."""
    ranked = sorted(
        ((sites[i].dist(sites[j]), i, j) for i, j in combinations(range(len(sites)), 2)),
    )
    best, i, j = ranked[0]
    unique = len(ranked) == 1 or ranked[1][0] > best * (1.0 + rtol)
    return ClosestPair(pair=SitePair(i=i, j=j), distance=best, unique=unique)


def closest_neighbors(sites: list[Point2], rtol: float = 1e-12) -> list[ClosestNeighbor]:
    """
    Closest other site of every site. runner_up is the distance to the second
    closest (inf with two sites); unique is False when it lies within rtol of
    the closest.
    """
    if len(sites) < 2:
        raise ValueError(f"closest neighbours need at least 2 sites, got {len(sites)}")
    k = min(3, len(sites))
    dist, idx = cKDTree(sites_array(sites)).query(sites_array(sites), k=k)
    out = []
    for i in range(len(sites)):
        # drop the site itself; duplicates are rejected upstream
        others = [(float(d), int(j)) for d, j in zip(dist[i], idx[i]) if int(j) != i][:2]
        (d1, j1), runner_up = others[0], (others[1][0] if len(others) > 1 else math.inf)
        out.append(ClosestNeighbor(
            site=i, neighbor=j1, distance=d1, runner_up=runner_up, unique=runner_up > d1 * (1.0 + rtol)
        ))
    return out


def diameter(sites: list[Point2]) -> float:
    return max(sites[i].dist(sites[j]) for i, j in combinations(range(len(sites)), 2))
