"""
Brute-force counters behind the lower-bound constructions: circle-circle,
segment-segment and line-line intersection points of site-derived figures.
"""
from itertools import combinations

import numpy as np

from config.Config import DEDUP_TOL
from geom_core import Point2, cross_sign, orient_sign
from logger.Logger import LOG
from utils.util import count_distinct_points, sites_array
from .models import CircleIntersectionCounts, ConstructionSet, Provenance


def diameter_circles(cset: ConstructionSet) -> list[tuple[int, int, float, float, float]]:
    """(p, q, cx, cy, r) for every circle with diameter pq, p on the lower line and q on the upper."""
    lower, upper = cset.line_split()
    out = []
    for a in lower:
        for b in upper:
            p, q = cset.sites[a], cset.sites[b]
            out.append((a, b, (p.x + q.x) / 2.0, (p.y + q.y) / 2.0, p.dist(q) / 2.0))
    return out


def circle_circle_points(c1, c2):
    """Both crossing points of two circles (x, y, r); None unless they cross properly."""
    x1, y1, r1 = c1
    x2, y2, r2 = c2
    dx, dy = x2 - x1, y2 - y1
    d = np.hypot(dx, dy)
    if d == 0.0 or d >= r1 + r2 or d <= abs(r1 - r2):
        return None
    a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d)
    h = np.sqrt(max(r1 * r1 - a * a, 0.0))
    mx, my = x1 + a * dx / d, y1 + a * dy / d
    return (mx + h * dy / d, my - h * dx / d), (mx - h * dy / d, my + h * dx / d)


def _scale(cset: ConstructionSet) -> float:
    arr = sites_array(list(cset.sites))
    return float(np.max(arr.max(axis=0) - arr.min(axis=0))) or 1.0


def _near_site(point, sites: np.ndarray, tol: float) -> bool:
    return bool(np.min(np.hypot(sites[:, 0] - point[0], sites[:, 1] - point[1])) <= tol)


def count_circle_intersections(cset: ConstructionSet, tol: float = DEDUP_TOL) -> CircleIntersectionCounts:
    if cset.provenance is not Provenance.TwoLine:
        raise ValueError(f"circle intersection counts need a two-line construction, got {cset.provenance.value}")
    circles = diameter_circles(cset)
    scale = _scale(cset)
    sites = sites_array(list(cset.sites))

    points = []
    crossing = coincident = 0
    for c1, c2 in combinations(circles, 2):
        if abs(c1[2] - c2[2]) <= tol * scale and abs(c1[3] - c2[3]) <= tol * scale and abs(c1[4] - c2[4]) <= tol * scale:
            coincident += 1
            continue
        hit = circle_circle_points(c1[2:], c2[2:])
        if hit is None:
            continue
        crossing += 1
        points.extend(hit)
    if coincident:
        LOG.warning(f"Skipped {coincident} coincident circle pairs; the construction is degenerate")

    distinct = count_distinct_points(points, tol, scale_reference=sites)
    off_site = [p for p in points if not _near_site(p, sites, tol * scale)]
    non_site = count_distinct_points(off_site, tol, scale_reference=sites)
    counts = CircleIntersectionCounts(
        circles=len(circles),
        pairs_intersecting=crossing,
        incidences=2 * crossing,
        distinct_points=distinct,
        non_site_points=non_site,
        coincident_pairs=coincident,
    )
    LOG.debug(f"Circle intersections for n={cset.n}: {counts}")
    return counts


def _segments_cross(sites: list[Point2], a: int, b: int, c: int, d: int) -> bool:
    """Proper crossing of segments ab and cd decided by exact orientation signs."""
    p, q, r, s = sites[a], sites[b], sites[c], sites[d]
    o1 = orient_sign(p.x, p.y, q.x, q.y, r.x, r.y)
    o2 = orient_sign(p.x, p.y, q.x, q.y, s.x, s.y)
    o3 = orient_sign(r.x, r.y, s.x, s.y, p.x, p.y)
    o4 = orient_sign(r.x, r.y, s.x, s.y, q.x, q.y)
    return o1 * o2 < 0 and o3 * o4 < 0


def crossing_segment_pairs(sites: list[Point2]) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    segments = list(combinations(range(len(sites)), 2))
    return [
        (s1, s2)
        for s1, s2 in combinations(segments, 2)
        if not set(s1) & set(s2) and _segments_cross(sites, *s1, *s2)
    ]


def count_segment_intersections(sites: list[Point2]) -> int:
    """
    Crossing pairs among all C(n, 2) site segments, so a point where k segments
    meet counts C(k, 2) times; pairs sharing an endpoint never count.
    """
    count = len(crossing_segment_pairs(sites))
    LOG.debug(f"{count} segment crossings among {len(sites)} sites")
    return count


def count_segment_crossing_points(sites: list[Point2], tol: float = DEDUP_TOL) -> int:
    """Distinct interior crossing points of the site segments."""
    points = [
        line_line_point(sites[a], sites[b], sites[c], sites[d]) for (a, b), (c, d) in crossing_segment_pairs(sites)
    ]
    count = count_distinct_points(points, tol, scale_reference=sites_array(sites))
    LOG.debug(f"{count} distinct segment crossing points among {len(sites)} sites")
    return count


def line_line_point(p: Point2, q: Point2, r: Point2, s: Point2):
    """Intersection of lines pq and rs; None when parallel."""
    ux, uy = q.x - p.x, q.y - p.y
    vx, vy = s.x - r.x, s.y - r.y
    if cross_sign(ux, uy, vx, vy) == 0:
        return None
    det = ux * vy - uy * vx
    t = ((r.x - p.x) * vy - (r.y - p.y) * vx) / det
    return p.x + t * ux, p.y + t * uy


def site_line_crossings(sites: list[Point2]) -> list[tuple[tuple[int, int], tuple[int, int], tuple[float, float]]]:
    """Crossings of site-lines through four distinct sites, with the two pairs involved."""
    out = []
    pairs = list(combinations(range(len(sites)), 2))
    for (a, b), (c, d) in combinations(pairs, 2):
        if {a, b} & {c, d}:
            continue
        hit = line_line_point(sites[a], sites[b], sites[c], sites[d])
        if hit is not None:
            out.append(((a, b), (c, d), hit))
    return out


def count_line_intersections(sites: list[Point2], tol: float = DEDUP_TOL) -> int:
    """Distinct intersection points of the C(n, 2) site-lines that are not sites."""
    arr = sites_array(sites)
    scale = float(np.max(arr.max(axis=0) - arr.min(axis=0))) or 1.0
    points = [hit for _, _, hit in site_line_crossings(sites) if not _near_site(hit, arr, tol * scale)]
    count = count_distinct_points(points, tol, scale_reference=arr)
    LOG.debug(f"{count} non-site line intersections among {len(sites)} sites")
    return count
