from geom_core import Point2, orient_sign
from exceptions import DegenerateInput, DuplicatePoint
from logger.Logger import LOG
from .structures import Hull


def check_distinct(sites: list[Point2]) -> None:
    seen: dict[Point2, int] = {}
    for idx, s in enumerate(sites):
        if s in seen:
            raise DuplicatePoint(f"sites {seen[s]} and {idx} coincide at ({s.x}, {s.y})")
        seen[s] = idx


def _turn(sites, a: int, b: int, c: int) -> int:
    return orient_sign(sites[a].x, sites[a].y, sites[b].x, sites[b].y, sites[c].x, sites[c].y)


def convex_hull(sites: list[Point2]) -> Hull:
    """Monotone-chain hull with exact turns; collinear boundary sites are dropped."""
    if len(sites) < 3:
        raise DegenerateInput(f"convex hull needs at least 3 sites, got {len(sites)}")
    check_distinct(sites)

    order = sorted(range(len(sites)), key=lambda i: (sites[i].x, sites[i].y))
    lower: list[int] = []
    for i in order:
        while len(lower) >= 2 and _turn(sites, lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(order):
        while len(upper) >= 2 and _turn(sites, upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)

    chain = lower[:-1] + upper[:-1]
    if len(chain) < 3:
        raise DegenerateInput("all sites are collinear")
    LOG.debug(f"convex hull: {len(chain)} of {len(sites)} sites are extreme")
    return Hull(vertices=tuple(chain))


def point_in_hull(sites: list[Point2], hull: Hull, x: float, y: float, strict: bool = False) -> bool:
    """Inside (or on, unless strict) the hull polygon, decided with exact turns."""
    for a, b in hull.edges():
        s = orient_sign(sites[a].x, sites[a].y, sites[b].x, sites[b].y, x, y)
        if s < 0 or (strict and s == 0):
            return False
    return True
