"""
Delaunay triangulation by sweep triangulation followed by Lawson edge flips.

Sites are swept in lexicographic order; each new site is joined to the hull
edges it sees. Illegal edges are then flipped with the exact in-circle
predicate until none remain. Cocircular quadruples are resolved by an
index-based rule (the diagonal touching the lowest site index is kept), which
makes the output independent of floating-point noise and reproducible.
"""
from geom_core import Point2, in_circle_sign, orient_sign
from exceptions import DegenerateInput
from distances import SitePair
from logger.Logger import LOG
from .hull import check_distinct
from .structures import Triangulation


def _turn(sites, a: int, b: int, c: int) -> int:
    return orient_sign(sites[a].x, sites[a].y, sites[b].x, sites[b].y, sites[c].x, sites[c].y)


class _Mesh:
    """Triangles keyed by directed edge: (a, b) -> opposite vertex c of CCW triangle (a, b, c)."""

    def __init__(self):
        self.opposite: dict[tuple[int, int], int] = {}

    def add(self, a: int, b: int, c: int):
        self.opposite[(a, b)] = c
        self.opposite[(b, c)] = a
        self.opposite[(c, a)] = b

    def remove(self, a: int, b: int, c: int):
        del self.opposite[(a, b)]
        del self.opposite[(b, c)]
        del self.opposite[(c, a)]

    def triangles(self) -> set[tuple[int, int, int]]:
        out = set()
        for (a, b), c in self.opposite.items():
            tri = (a, b, c)
            r = tri.index(min(tri))
            out.add(tri[r:] + tri[:r])
        return out


def _sweep(sites: list[Point2], mesh: _Mesh) -> None:
    order = sorted(range(len(sites)), key=lambda i: (sites[i].x, sites[i].y))

    m = 2
    while m < len(order) and _turn(sites, order[0], order[1], order[m]) == 0:
        m += 1
    if m == len(order):
        raise DegenerateInput("all sites are collinear")

    apex = order[m]
    chain = order[:m]
    if _turn(sites, chain[0], chain[-1], apex) > 0:
        hull = chain + [apex]
    else:
        hull = [apex] + chain[::-1]
    for t in range(len(hull)):
        a, b = hull[t], hull[(t + 1) % len(hull)]
        if apex not in (a, b):
            mesh.add(a, b, apex)

    for p in order[m + 1:]:
        k = len(hull)
        visible = [_turn(sites, hull[t], hull[(t + 1) % k], p) < 0 for t in range(k)]
        # rotate so the visible run does not wrap around the end of the list
        start = next(t for t in range(k) if visible[t] and not visible[t - 1])
        hull = hull[start:] + hull[:start]
        visible = visible[start:] + visible[:start]
        run = 0
        while run < k and visible[run]:
            mesh.add(hull[run], p, hull[run + 1])
            run += 1
        # hull[1..run-1] become interior; p takes their place
        hull = [hull[0], p] + hull[run:]


def _illegal(sites, a: int, b: int, c: int, d: int) -> bool:
    """Edge (a, b) with CCW triangle (a, b, c) and opposite vertex d."""
    s = in_circle_sign(sites[a], sites[b], sites[c], sites[d])
    if s != 0:
        return s > 0
    return min(c, d) < min(a, b)


def _legalize(sites: list[Point2], mesh: _Mesh) -> int:
    stack = list(mesh.opposite.keys())
    flips = 0
    limit = 50 * len(sites) * len(sites) + 100
    while stack:
        a, b = stack.pop()
        c = mesh.opposite.get((a, b))
        d = mesh.opposite.get((b, a))
        if c is None or d is None:
            continue
        if not _illegal(sites, a, b, c, d):
            continue
        mesh.remove(a, b, c)
        mesh.remove(b, a, d)
        mesh.add(a, d, c)
        mesh.add(d, b, c)
        stack.extend([(a, d), (d, b), (b, c), (c, a)])
        flips += 1
        if flips > limit:
            LOG.warning(f"Delaunay legalization stopped after {flips} flips")
            break
    return flips


def delaunay(sites: list[Point2]) -> Triangulation:
    if len(sites) < 3:
        raise DegenerateInput(f"Delaunay triangulation needs at least 3 sites, got {len(sites)}")
    check_distinct(sites)

    mesh = _Mesh()
    _sweep(sites, mesh)
    flips = _legalize(sites, mesh)

    edges = frozenset(SitePair.of(a, b) for (a, b) in mesh.opposite)
    triangles = frozenset(mesh.triangles())
    LOG.debug(f"Delaunay: {len(sites)} sites, {len(edges)} edges, {len(triangles)} triangles, {flips} flips")
    return Triangulation(edges=edges, triangles=triangles)


def is_delaunay_edge_brute_force(sites: list[Point2], i: int, j: int) -> bool:
    """
    Empty-circle oracle: (i, j) is a Delaunay edge iff some circle through
    sites i and j has no site strictly inside.

    Circles through i and j form a pencil parameterised by the position of
    the center on the bisector; each other site k bounds that position from
    one side, so an empty circle exists iff the feasible interval is non-empty.
    """
    p, q = sites[i], sites[j]
    mx, my = (p.x + q.x) / 2.0, (p.y + q.y) / 2.0
    # bisector: center = m + t * n
    nx, ny = -(q.y - p.y), q.x - p.x
    lo, hi = float("-inf"), float("inf")
    for k, s in enumerate(sites):
        if k in (i, j):
            continue
        side = orient_sign(p.x, p.y, q.x, q.y, s.x, s.y)
        # |c - s|^2 >= |c - p|^2  <=>  2 t n.(p - s) >= |s - m|^2 - |p - m|^2 (rearranged around m)
        a = 2.0 * (nx * (p.x - s.x) + ny * (p.y - s.y))
        rhs = (s.x - mx) ** 2 + (s.y - my) ** 2 - (p.x - mx) ** 2 - (p.y - my) ** 2
        if side == 0:
            # on the line pq: strictly between p and q means every circle contains it
            if (s.x - p.x) * (s.x - q.x) + (s.y - p.y) * (s.y - q.y) < 0:
                return False
            continue
        # the inequality is a * t >= -rhs with sign(a) tied to the side of s
        bound = -rhs / a
        if a > 0:
            lo = max(lo, bound)
        else:
            hi = min(hi, bound)
    return lo <= hi
