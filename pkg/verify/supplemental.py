"""
Point checks behind the lower bounds: on the diameter circle of pq the
circumcenter distances vanish for (p, q), at a crossing of two site-lines the
inscribed radius of both pairs vanishes while their circumcenters run off to
infinity, and at a crossing of two site-segments both pairs see the maximal
view angle pi and a perimeter excess of 0. Next to a site on the segment to
its closest neighbour that pair has the smallest containing circle.
"""
from typing import Optional

import numpy as np

from config.Config import VALUE_TOL
from constructions import crossing_segment_pairs, line_line_point, site_line_crossings
from distances import DistanceKind, DistanceSpec, SitePair
from envelope_raster import Mode, all_pairs, evaluate_pairs, select_owners
from exceptions import PreconditionViolation
from geom_core import Point2
from neighbor_structures import check_distinct, closest_neighbors
from utils.util import sites_array
from .Report import Report
from .checks import _circle_samples, _log_report

NEIGHBOR_RTOL = 1e-6


def _scale(sites: list[Point2]) -> float:
    arr = sites_array(sites)
    return float(np.max(arr.max(axis=0) - arr.min(axis=0))) or 1.0


def check_ccc_zero_locus(sites: list[Point2], samples: int = 32, seed: Optional[int] = None) -> Report:
    if len(sites) < 2:
        raise PreconditionViolation("need at least 2 sites")
    check_distinct(sites)
    tol = VALUE_TOL * _scale(sites)
    pairs = all_pairs(len(sites))

    worst = {DistanceKind.CccSegmentDist: 0.0, DistanceKind.CccArea: 0.0}
    failures = 0
    for pair in pairs:
        p, q = sites[pair.i], sites[pair.j]
        xs, ys = _circle_samples((p.x + q.x) / 2.0, (p.y + q.y) / 2.0, p.dist(q) / 2.0, samples)
        for kind in worst:
            values = evaluate_pairs(sites, DistanceSpec(kind=kind), [pair], xs, ys)[0]
            worst[kind] = max(worst[kind], float(np.nanmax(values)))
            failures += int((~(values <= tol)).sum())

    return _log_report(Report(
        theorem="ccc-zero-locus",
        passed=failures == 0,
        counts={
            "samples": samples * len(pairs),
            "failures": failures,
            "maxSegmentDist": worst[DistanceKind.CccSegmentDist],
            "maxArea": worst[DistanceKind.CccArea],
        },
        details=[f"{samples} samples on the diameter circle of each of {len(pairs)} pairs"],
        seed=seed,
        n=len(sites),
        thresholds={"valueTol": tol},
    ))


def check_inradius_line_crossings(sites: list[Point2], seed: Optional[int] = None) -> Report:
    """Both pairs of every site-line crossing reach the nearest inscribed radius 0 there."""
    if len(sites) < 4:
        raise PreconditionViolation(f"line crossings need at least 4 sites, got {len(sites)}")
    check_distinct(sites)
    crossings = site_line_crossings(sites)
    pairs = all_pairs(len(sites))
    index = {p: k for k, p in enumerate(pairs)}
    center = sites_array(sites).mean(axis=0)
    scale = _scale(sites)

    failures = 0
    worst = 0.0
    if crossings:
        xs = np.array([hit[0] for _, _, hit in crossings])
        ys = np.array([hit[1] for _, _, hit in crossings])
        values = evaluate_pairs(sites, DistanceSpec(kind=DistanceKind.InscribedRadius), pairs, xs, ys)
        # rounding grows with the distance of far crossings from the sites
        tol = VALUE_TOL * np.maximum(scale, np.hypot(xs - center[0], ys - center[1]))
        for m, (a, b, _) in enumerate(crossings):
            for pair in (SitePair.of(*a), SitePair.of(*b)):
                v = values[index[pair], m]
                worst = max(worst, float(v / tol[m]))
                failures += int(not v <= tol[m])

    return _log_report(Report(
        theorem="inradius-line-crossings",
        passed=failures == 0,
        counts={"crossings": len(crossings), "failures": failures, "worstRelativeValue": worst},
        details=[f"{len(crossings)} crossings of site-lines through four distinct sites"],
        seed=seed,
        n=len(sites),
        thresholds={"valueTol": VALUE_TOL},
    ))


def check_viewangle_segment_crossings(sites: list[Point2], seed: Optional[int] = None) -> Report:
    """At every crossing of two site-segments both pairs attain the furthest view angle pi."""
    if len(sites) < 4:
        raise PreconditionViolation(f"segment crossings need at least 4 sites, got {len(sites)}")
    check_distinct(sites)
    crossing = crossing_segment_pairs(sites)
    pairs = all_pairs(len(sites))
    index = {p: k for k, p in enumerate(pairs)}

    failures = 0
    max_gap = 0.0
    if crossing:
        points = [line_line_point(sites[a], sites[b], sites[c], sites[d]) for (a, b), (c, d) in crossing]
        xs = np.array([p[0] for p in points])
        ys = np.array([p[1] for p in points])
        values = evaluate_pairs(sites, DistanceSpec(kind=DistanceKind.ViewAngle), pairs, xs, ys)
        winner, _, _ = select_owners(values, Mode.Furthest)
        for m, (s1, s2) in enumerate(crossing):
            for pair in (SitePair.of(*s1), SitePair.of(*s2)):
                gap = np.pi - values[index[pair], m]
                max_gap = max(max_gap, float(gap))
                failures += int(not gap <= VALUE_TOL)
            # the furthest owner must be one of the two crossing pairs
            failures += int(pairs[int(winner[m])] not in (SitePair.of(*s1), SitePair.of(*s2)))

    return _log_report(Report(
        theorem="viewangle-segment-crossings",
        passed=failures == 0,
        counts={"crossings": len(crossing), "failures": failures, "maxGapToPi": max_gap},
        details=[f"{len(crossing)} crossings among the {len(pairs)} site segments"],
        seed=seed,
        n=len(sites),
        thresholds={"valueTol": VALUE_TOL},
    ))


def check_containing_closest_neighbor(sites: list[Point2], seed: Optional[int] = None) -> Report:
    """
    Points on segment pq just off p belong to (p, q) in the nearest containing
    radius diagram whenever q is the unique closest neighbour of p, so that
    diagram has at least ceil(k/2) regions for k such sites.
    """
    if len(sites) < 2:
        raise PreconditionViolation("need at least 2 sites")
    check_distinct(sites)
    pairs = all_pairs(len(sites))
    # closest distances within NEIGHBOR_RTOL of the runner-up count as ties
    neighbors = [nb for nb in closest_neighbors(sites, rtol=NEIGHBOR_RTOL) if nb.unique]

    owners: set[SitePair] = set()
    failures = 0
    if neighbors:
        # step toward q small enough that every other site stays further than |pq|
        steps = [min(0.25, 0.25 * (nb.runner_up - nb.distance) / nb.distance) for nb in neighbors]
        xs = np.array([
            sites[nb.site].x + t * (sites[nb.neighbor].x - sites[nb.site].x) for nb, t in zip(neighbors, steps)
        ])
        ys = np.array([
            sites[nb.site].y + t * (sites[nb.neighbor].y - sites[nb.site].y) for nb, t in zip(neighbors, steps)
        ])
        values = evaluate_pairs(sites, DistanceSpec(kind=DistanceKind.ContainingRadius), pairs, xs, ys)
        winner, tie, _ = select_owners(values, Mode.Nearest)
        for m, nb in enumerate(neighbors):
            owner = pairs[int(winner[m])]
            owners.add(owner)
            failures += int(owner != SitePair.of(nb.site, nb.neighbor) or bool(tie[m]))

    lower_bound = (len(neighbors) + 1) // 2
    return _log_report(Report(
        theorem="containing-closest-neighbor",
        passed=failures == 0 and len(owners) >= lower_bound,
        counts={
            "sitesWithUniqueNeighbor": len(neighbors),
            "distinctOwners": len(owners),
            "lowerBound": lower_bound,
            "failures": failures,
        },
        details=[f"one sample next to each of {len(neighbors)} sites toward its unique closest neighbour"],
        seed=seed,
        n=len(sites),
    ))


def check_pc_minus1_segment_crossings(sites: list[Point2], seed: Optional[int] = None) -> Report:
    """At every crossing of two site-segments both pairs reach the nearest perimeter value 0 for c = -1."""
    if len(sites) < 4:
        raise PreconditionViolation(f"segment crossings need at least 4 sites, got {len(sites)}")
    check_distinct(sites)
    crossing = crossing_segment_pairs(sites)
    pairs = all_pairs(len(sites))
    index = {p: k for k, p in enumerate(pairs)}
    tol = VALUE_TOL * _scale(sites)

    failures = 0
    worst = 0.0
    if crossing:
        points = [line_line_point(sites[a], sites[b], sites[c], sites[d]) for (a, b), (c, d) in crossing]
        xs = np.array([p[0] for p in points])
        ys = np.array([p[1] for p in points])
        values = evaluate_pairs(sites, DistanceSpec(kind=DistanceKind.ParamPerimeter, c=-1.0), pairs, xs, ys)
        winner, _, _ = select_owners(values, Mode.Nearest)
        for m, (s1, s2) in enumerate(crossing):
            for pair in (SitePair.of(*s1), SitePair.of(*s2)):
                v = values[index[pair], m]
                worst = max(worst, float(v))
                failures += int(not v <= tol)
            # a third segment through the same point may own it, but only at value 0
            failures += int(not values[int(winner[m]), m] <= tol)

    return _log_report(Report(
        theorem="pc-minus1-segment-crossings",
        passed=failures == 0,
        counts={"crossings": len(crossing), "failures": failures, "maxValue": worst},
        details=[f"{len(crossing)} crossings among the {len(pairs)} site segments"],
        seed=seed,
        n=len(sites),
        thresholds={"valueTol": tol},
    ))


CCC_KINDS = (DistanceKind.CccSegmentDist, DistanceKind.CccArea, DistanceKind.CccPerimeter)


def check_ccc_furthest_line_crossings(sites: list[Point2], seed: Optional[int] = None) -> Report:
    """
    At a crossing of two site-lines the circumcenter of either crossing pair
    runs off to infinity, so both pairs dominate every other pair there in the
    furthest circumcenter diagrams.
    """
    if len(sites) < 4:
        raise PreconditionViolation(f"line crossings need at least 4 sites, got {len(sites)}")
    check_distinct(sites)
    crossings = site_line_crossings(sites)
    pairs = all_pairs(len(sites))
    index = {p: k for k, p in enumerate(pairs)}

    failures = {kind.value: 0 for kind in CCC_KINDS}
    if crossings:
        xs = np.array([hit[0] for _, _, hit in crossings])
        ys = np.array([hit[1] for _, _, hit in crossings])
        for kind in CCC_KINDS:
            values = evaluate_pairs(sites, DistanceSpec(kind=kind), pairs, xs, ys)
            for m, (a, b, _) in enumerate(crossings):
                own = [index[SitePair.of(*a)], index[SitePair.of(*b)]]
                rest = np.delete(values[:, m], own)
                failures[kind.value] += int(not min(values[own[0], m], values[own[1], m]) > np.nanmax(rest))

    return _log_report(Report(
        theorem="ccc-furthest-line-crossings",
        passed=not any(failures.values()),
        counts={"crossings": len(crossings), **{f"failures.{k}": v for k, v in failures.items()}},
        details=[f"{len(crossings)} crossings of site-lines, kinds {', '.join(k.value for k in CCC_KINDS)}"],
        seed=seed,
        n=len(sites),
    ))
