"""Runs every check concurrently; each check already parallelises its own rasters."""
import asyncio
from typing import Optional

from config.Config import DEFAULT_SEED
from constructions import gen_random_general
from distances import DistanceKind, DistanceSpec
from envelope_raster import default_grid
from exceptions import PreconditionViolation
from geom_core import Point2
from logger.Logger import LOG
from .Report import Report
from .checks import (
    check_delaunay_pruning,
    check_far_field_antipodal,
    check_line_locus_furthest_C,
    check_pc_limit,
    check_ppcirc_collinear,
    check_viewangle_outer,
)
from .supplemental import (
    check_ccc_furthest_line_crossings,
    check_ccc_zero_locus,
    check_containing_closest_neighbor,
    check_inradius_line_crossings,
    check_pc_minus1_segment_crossings,
    check_viewangle_segment_crossings,
)

THEOREMS = (
    "delaunay-pruning",
    "pc-limit",
    "viewangle-outer",
    "far-field-antipodal",
    "ppcirc-collinear",
    "line-locus-furthest-C",
    "ccc-zero-locus",
    "inradius-line-crossings",
    "viewangle-segment-crossings",
    "containing-closest-neighbor",
    "pc-minus1-segment-crossings",
    "ccc-furthest-line-crossings",
)


def _precondition_report(theorem: str, n: int, seed: Optional[int], exc: PreconditionViolation) -> Report:
    LOG.warning(f"Check {theorem} skipped: {exc}")
    return Report(
        theorem=theorem,
        passed=False,
        counts={"preconditionFailed": 1},
        details=[f"precondition failed: {exc}"],
        seed=seed,
        n=n,
    )


async def run_all_async(
    n: int = 12,
    seed: int = DEFAULT_SEED,
    grid_size: int = 256,
    threads: Optional[int] = None,
    sites: Optional[list[Point2]] = None,
) -> list[Report]:
    """Checks run on `sites` when given, else on n random sites drawn from seed."""
    if sites is None:
        sites = list(gen_random_general(n, seed=seed).sites)
    n = len(sites)
    grid = default_grid(sites, grid_size, grid_size)
    jobs = {
        "delaunay-pruning": lambda: check_delaunay_pruning(
            sites, DistanceSpec(kind=DistanceKind.ContainingRadius), grid, seed=seed, threads=threads
        ),
        "pc-limit": lambda: check_pc_limit(sites, 1e6, grid, seed=seed, threads=threads),
        "viewangle-outer": lambda: check_viewangle_outer(sites, grid, seed=seed, threads=threads),
        "far-field-antipodal": lambda: check_far_field_antipodal(sites, 1e3, seed=seed),
        "ppcirc-collinear": lambda: check_ppcirc_collinear(max(n, 3), threads=threads),
        "line-locus-furthest-C": lambda: check_line_locus_furthest_C(sites, grid, seed=seed),
        "ccc-zero-locus": lambda: check_ccc_zero_locus(sites, seed=seed),
        "inradius-line-crossings": lambda: check_inradius_line_crossings(sites, seed=seed),
        "viewangle-segment-crossings": lambda: check_viewangle_segment_crossings(sites, seed=seed),
        "containing-closest-neighbor": lambda: check_containing_closest_neighbor(sites, seed=seed),
        "pc-minus1-segment-crossings": lambda: check_pc_minus1_segment_crossings(sites, seed=seed),
        "ccc-furthest-line-crossings": lambda: check_ccc_furthest_line_crossings(sites, seed=seed),
    }

    async def run(theorem: str) -> Report:
        try:
            return await asyncio.to_thread(jobs[theorem])
        except PreconditionViolation as e:
            return _precondition_report(theorem, n, seed, e)

    reports = await asyncio.gather(*(run(t) for t in THEOREMS))
    failed = [r.theorem for r in reports if not r.passed]
    LOG.info(f"Ran {len(reports)} checks: {len(reports) - len(failed)} passed" + (f", failed: {failed}" if failed else ""))
    return list(reports)


def run_all(
    n: int = 12,
    seed: int = DEFAULT_SEED,
    grid_size: int = 256,
    threads: Optional[int] = None,
    sites: Optional[list[Point2]] = None,
) -> list[Report]:
    return asyncio.run(run_all_async(n=n, seed=seed, grid_size=grid_size, threads=threads, sites=sites))
