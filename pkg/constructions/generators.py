from itertools import combinations

import numpy as np

from config.Config import DEDUP_TOL, DEFAULT_SEED, MAX_GENERICITY_RETRIES
from exceptions import GenericityFailure
from geom_core import Point2, orient_sign
from logger.Logger import LOG
from utils.util import count_distinct_points, retry, sites_array, to_points
from .counters import circle_circle_points, count_circle_intersections, diameter_circles
from .models import ConstructionSet, Provenance


def _check_two_line_genericity(cset: ConstructionSet, tol: float) -> None:
    """
    Raises GenericityFailure unless every diameter circle passes through only
    its two defining sites, every two circles cross, and the non-site
    intersection points are as distinct as parallel lines allow.

    Every circle through a site p also passes through the foot of the
    perpendicular from p to the other line, so the circles sharing p meet
    there as well; those n projection points are the only forced
    coincidences.
    """
    circles = diameter_circles(cset)
    sites = sites_array(list(cset.sites))
    scale = float(np.max(sites.max(axis=0) - sites.min(axis=0))) or 1.0

    for a, b, cx, cy, r in circles:
        gap = np.abs(np.hypot(sites[:, 0] - cx, sites[:, 1] - cy) - r)
        gap[[a, b]] = np.inf
        if gap.min() <= tol * scale:
            raise GenericityFailure(f"circle on ({a},{b}) passes through site {int(gap.argmin())}")

    for c1, c2 in combinations(circles, 2):
        if circle_circle_points(c1[2:], c2[2:]) is None:
            raise GenericityFailure(f"circles on ({c1[0]},{c1[1]}) and ({c2[0]},{c2[1]}) do not cross")

    counts = count_circle_intersections(cset, tol)
    disjoint = sum(1 for c1, c2 in combinations(circles, 2) if not {c1[0], c1[1]} & {c2[0], c2[1]})
    expected = 2 * disjoint + cset.n
    if counts.non_site_points != expected:
        raise GenericityFailure(
            f"{expected - counts.non_site_points} non-site circle intersections coincide within tolerance"
        )


def gen_two_line_set(
    n: int,
    d: float = 10.0,
    spread: float = 0.05,
    seed: int = DEFAULT_SEED,
    retries: int = MAX_GENERICITY_RETRIES,
    tol: float = DEDUP_TOL,
) -> ConstructionSet:
    """
    ceil(n/2) sites on y = 0 and floor(n/2) on y = d, x drawn uniformly from
    [0, spread]. Draws are rejected until the genericity checks pass.
    """
    if n < 4:
        raise ValueError(f"two-line construction needs n >= 4, got {n}")
    if not (d > 0 and 0 < spread <= d / 100.0):
        raise ValueError(f"two-line construction needs d > 0 and 0 < spread <= d/100, got d={d}, spread={spread}")
    lower, upper = (n + 1) // 2, n // 2

    def attempt_draw(attempt: int) -> ConstructionSet:
        rng = np.random.default_rng([seed, attempt])
        xs = rng.uniform(0.0, spread, size=n)
        ys = np.concatenate([np.zeros(lower), np.full(upper, float(d))])
        cset = ConstructionSet(
            sites=tuple(to_points(np.column_stack([xs, ys]))),
            provenance=Provenance.TwoLine,
            seed=seed,
            params={"d": d, "spread": spread, "attempt": attempt},
        )
        _check_two_line_genericity(cset, tol)
        return cset

    cset = retry(attempt_draw, retries=retries, retry_on=(GenericityFailure,))
    LOG.info(f"Generated two-line set n={n} d={d} spread={spread} seed={seed} (attempt {cset.params['attempt']})")
    return cset


def gen_collinear_unit(n: int) -> ConstructionSet:
    if n < 2:
        raise ValueError(f"collinear construction needs n >= 2, got {n}")
    return ConstructionSet(
        sites=tuple(Point2(float(k), 0.0) for k in range(n)),
        provenance=Provenance.CollinearUnit,
    )


def gen_convex_position(n: int, seed: int = DEFAULT_SEED) -> ConstructionSet:
    """n points on the unit circle at sorted random angles."""
    if n < 3:
        raise ValueError(f"convex-position construction needs n >= 3, got {n}")
    rng = np.random.default_rng(seed)
    angles = np.sort(rng.uniform(0.0, 2.0 * np.pi, size=n))
    if count_distinct_points(np.column_stack([np.cos(angles), np.sin(angles)]), DEDUP_TOL) < n:
        raise GenericityFailure("two convex-position angles coincide")
    return ConstructionSet(
        sites=tuple(to_points(np.column_stack([np.cos(angles), np.sin(angles)]))),
        provenance=Provenance.ConvexPosition,
        seed=seed,
    )


def has_collinear_triple(sites: list[Point2]) -> bool:
    return any(
        orient_sign(a.x, a.y, b.x, b.y, c.x, c.y) == 0
        for a, b, c in combinations(sites, 3)
    )


def gen_random_general(
    n: int,
    seed: int = DEFAULT_SEED,
    retries: int = MAX_GENERICITY_RETRIES,
) -> ConstructionSet:
    """Uniform sites in the unit square with no exactly collinear triple."""
    if n < 2:
        raise ValueError(f"random construction needs n >= 2, got {n}")

    def attempt_draw(attempt: int) -> ConstructionSet:
        rng = np.random.default_rng([seed, attempt])
        sites = to_points(rng.uniform(0.0, 1.0, size=(n, 2)))
        if count_distinct_points(sites_array(sites), DEDUP_TOL) < n:
            raise GenericityFailure("two random sites coincide")
        if has_collinear_triple(sites):
            raise GenericityFailure("random sites contain a collinear triple")
        return ConstructionSet(
            sites=tuple(sites), provenance=Provenance.RandomGeneral, seed=seed, params={"attempt": attempt}
        )

    return retry(attempt_draw, retries=retries, retry_on=(GenericityFailure,))
