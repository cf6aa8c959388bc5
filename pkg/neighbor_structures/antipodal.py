import math

from geom_core import Point2, cross_sign
from distances import SitePair
from .structures import AntipodalPairs, Hull


def antipodal_pairs(sites: list[Point2], hull: Hull) -> AntipodalPairs:
    """
    Rotating calipers over a half turn.

    Caliper i supports the hull from below and caliper j from above; whichever
    hull edge the rotating direction meets first advances its caliper. Parallel
    opposite edges advance both and contribute all four endpoint pairs.
    """
    verts = hull.vertices
    k = len(verts)
    pts = [sites[v] for v in verts]

    def edge(t: int) -> tuple[float, float]:
        a, b = pts[t % k], pts[(t + 1) % k]
        return b.x - a.x, b.y - a.y

    i0 = min(range(k), key=lambda t: (pts[t].y, pts[t].x))
    j0 = max(range(k), key=lambda t: (pts[t].y, pts[t].x))

    found: set[tuple[int, int]] = set()

    def emit(a: int, b: int):
        if a % k != b % k:
            found.add((a % k, b % k))

    i, j = i0, j0
    emit(i, j)
    while (i, j) != (j0, i0):
        if i == j0:
            j = (j + 1) % k
        elif j == i0:
            i = (i + 1) % k
        else:
            ex, ey = edge(i)
            fx, fy = edge(j)
            turn = cross_sign(ex, ey, -fx, -fy)
            if turn > 0:
                i = (i + 1) % k
            elif turn < 0:
                j = (j + 1) % k
            else:
                emit(i + 1, j)
                emit(i, j + 1)
                i = (i + 1) % k
                j = (j + 1) % k
        emit(i, j)

    return AntipodalPairs(pairs=frozenset(SitePair.of(verts[a], verts[b]) for a, b in found))


def antipodal_pairs_brute_force(sites: list[Point2], hull: Hull, rtol: float = 1e-12) -> AntipodalPairs:
    """
    Direction-sweep oracle: for every critical support direction (hull edge
    normals and their opposites) and every midpoint between consecutive
    critical directions, pair each maximizing vertex with each minimizing one.
    """
    verts = hull.vertices
    k = len(verts)
    pts = [sites[v] for v in verts]

    angles = set()
    for t in range(k):
        a, b = pts[t], pts[(t + 1) % k]
        theta = math.atan2(-(b.x - a.x), b.y - a.y)
        angles.add(theta % (2 * math.pi))
        angles.add((theta + math.pi) % (2 * math.pi))
    ordered = sorted(angles)
    directions = list(ordered)
    for t in range(len(ordered)):
        nxt = ordered[(t + 1) % len(ordered)] + (2 * math.pi if t + 1 == len(ordered) else 0.0)
        directions.append((ordered[t] + nxt) / 2.0)

    scale = max(max(abs(p.x), abs(p.y)) for p in pts) or 1.0
    found = set()
    for theta in directions:
        ux, uy = math.cos(theta), math.sin(theta)
        proj = [p.x * ux + p.y * uy for p in pts]
        hi, lo = max(proj), min(proj)
        tol = rtol * scale * 1e3
        tops = [t for t in range(k) if proj[t] >= hi - tol]
        bottoms = [t for t in range(k) if proj[t] <= lo + tol]
        for a in tops:
            for b in bottoms:
                if a != b:
                    found.add(SitePair.of(verts[a], verts[b]))
    return AntipodalPairs(pairs=frozenset(found))
