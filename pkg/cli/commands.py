"""
Command implementations. Each takes a validated RunConfig and returns the
process exit code; geometry errors propagate to main.py, which maps them to
exit codes in one place.
"""
import json
import sys
import time
from pathlib import Path
from typing import Optional

import numpy as np

from arrangement import build_arrangement, hull_supporting_lines, label_outer_cells, write_svg
from constructions import (
    Provenance,
    count_circle_intersections,
    gen_collinear_unit,
    gen_convex_position,
    gen_random_general,
    gen_two_line_set,
)
from distances import DistanceKind, DistanceSpec
from envelope_raster import (
    GridSpec,
    all_pairs,
    candidate_pairs,
    compute_raster,
    default_grid,
    region_stats,
    render_rgb,
    stats_to_dict,
    write_ppm,
)
from geom_core import Point2
from logger.Logger import LOG
from neighbor_structures import check_distinct, convex_hull
from utils.points_io import format_points, read_points, write_points
from verify import (
    check_ccc_furthest_line_crossings,
    check_ccc_zero_locus,
    check_containing_closest_neighbor,
    check_delaunay_pruning,
    check_far_field_antipodal,
    check_inradius_line_crossings,
    check_line_locus_furthest_C,
    check_pc_limit,
    check_pc_minus1_segment_crossings,
    check_ppcirc_collinear,
    check_viewangle_outer,
    check_viewangle_segment_crossings,
    run_all,
)
from .RunConfig import RunConfig

DEFAULT_VERIFY_N = 12
DEFAULT_BENCH_N = 30
DEFAULT_PPCIRC_N = 8
DEFAULT_PC_LIMIT_C = 1e6


def _spec(config: RunConfig, default_kind: DistanceKind, default_c: float = 1.0) -> DistanceSpec:
    kind = config.kind or default_kind
    spec = DistanceSpec(kind=kind, c=default_c if config.c is None else config.c)
    if config.c is not None and not spec.uses_c:
        LOG.warning(f"--c {config.c:g} is ignored for distance '{kind.value}'")
    return spec


def _grid(config: RunConfig, sites: list[Point2]) -> GridSpec:
    if config.bbox is not None:
        return GridSpec(bbox=config.bbox, width=config.width, height=config.height, jitter=config.jitter)
    return default_grid(sites, config.width, config.height, jitter=config.jitter)


def _sites(config: RunConfig, default_n: int) -> tuple[list[Point2], Optional[int]]:
    """Sites from --input, else random general-position sites from --n/--seed."""
    if config.input is not None:
        sites = read_points(config.input)
        check_distinct(sites)
        return sites, None
    n = config.n or default_n
    return list(gen_random_general(n, seed=config.seed).sites), config.seed


def _output_stem(config: RunConfig, suffix: str) -> Path:
    stem = config.input.stem if config.input is not None else "sites"
    kind = config.kind.value if config.kind is not None else "diagram"
    return Path(f"{stem}.{kind}.{config.mode.value}{suffix}")


def cmd_compute(config: RunConfig) -> int:
    sites = read_points(config.input)
    check_distinct(sites)
    spec = _spec(config, DistanceKind.ContainingRadius)
    grid = _grid(config, sites)

    raster = compute_raster(sites, spec, config.mode, grid, threads=config.threads)
    stats = region_stats(raster)

    image = config.output or _output_stem(config, ".ppm")
    stats_path = config.stats or image.with_suffix(".json")
    write_ppm(image, render_rgb(raster, sites))
    stats_path.write_text(json.dumps(stats_to_dict(raster, stats), indent=2) + "\n", encoding="utf-8")
    LOG.info(f"Wrote stats to {stats_path}")
    return 0


def _run_check(theorem: str, config: RunConfig):
    if theorem == "ppcirc-collinear":
        n = config.n or DEFAULT_PPCIRC_N
        sites = list(gen_collinear_unit(n).sites)
        grid = _grid(config, sites)
        return check_ppcirc_collinear(n, grid, threads=config.threads)

    sites, seed = _sites(config, DEFAULT_VERIFY_N)
    grid = _grid(config, sites)
    if theorem == "delaunay-pruning":
        spec = _spec(config, DistanceKind.ContainingRadius)
        return check_delaunay_pruning(sites, spec, grid, seed=seed, threads=config.threads)
    if theorem == "pc-limit":
        c = DEFAULT_PC_LIMIT_C if config.c is None else config.c
        return check_pc_limit(sites, c, grid, seed=seed, threads=config.threads)
    if theorem == "viewangle-outer":
        return check_viewangle_outer(sites, grid, seed=seed, threads=config.threads)
    if theorem == "far-field-antipodal":
        return check_far_field_antipodal(sites, config.multiplier, seed=seed)
    if theorem == "line-locus-furthest-C":
        return check_line_locus_furthest_C(sites, grid, seed=seed)
    if theorem == "ccc-zero-locus":
        return check_ccc_zero_locus(sites, seed=seed)
    if theorem == "inradius-line-crossings":
        return check_inradius_line_crossings(sites, seed=seed)
    if theorem == "viewangle-segment-crossings":
        return check_viewangle_segment_crossings(sites, seed=seed)
    if theorem == "containing-closest-neighbor":
        return check_containing_closest_neighbor(sites, seed=seed)
    if theorem == "pc-minus1-segment-crossings":
        return check_pc_minus1_segment_crossings(sites, seed=seed)
    if theorem == "ccc-furthest-line-crossings":
        return check_ccc_furthest_line_crossings(sites, seed=seed)
    raise ValueError(f"unknown check '{theorem}'")


def cmd_verify(config: RunConfig) -> int:
    if config.theorem == "all":
        sites = None
        if config.input is not None:
            sites = read_points(config.input)
            check_distinct(sites)
        reports = run_all(
            n=config.n or DEFAULT_VERIFY_N, seed=config.seed, grid_size=config.width, threads=config.threads, sites=sites
        )
        print(json.dumps([r.model_dump(mode="json") for r in reports], indent=2))
        return 0 if all(r.passed for r in reports) else 1

    report = _run_check(config.theorem, config)
    print(report.to_json())
    return 0 if report.passed else 1


def _best_time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def cmd_bench(config: RunConfig) -> int:
    """Wall time of pruned vs full candidate sets and of one thread vs the configured thread count."""
    sites, seed = _sites(config, DEFAULT_BENCH_N)
    spec = _spec(config, DistanceKind.ContainingRadius)
    grid = _grid(config, sites)
    pruned = candidate_pairs(sites, spec, config.mode)
    full = all_pairs(len(sites))

    def run(candidates, threads):
        return compute_raster(sites, spec, config.mode, grid, candidates=candidates, threads=threads)

    single = run(full, 1)
    multi = run(full, config.threads)
    result = {
        "n": len(sites),
        "seed": seed,
        "spec": spec.label(),
        "mode": config.mode.value,
        "grid": grid.describe(),
        "repeats": config.repeats,
        "prunedPairs": len(pruned),
        "fullPairs": len(full),
        "prunedSeconds": _best_time(lambda: run(pruned, config.threads), config.repeats),
        "fullSeconds": _best_time(lambda: run(full, config.threads), config.repeats),
        "threads": {
            "1": _best_time(lambda: run(full, 1), config.repeats),
            str(config.threads): _best_time(lambda: run(full, config.threads), config.repeats),
        },
        "identicalAcrossThreads": bool(
            np.array_equal(single.labels, multi.labels) and np.array_equal(single.ties, multi.ties)
        ),
        "prunedEqualsFull": bool(np.array_equal(run(pruned, config.threads).pair_codes(), multi.pair_codes())),
    }
    print(json.dumps(result, indent=2))
    return 0


def cmd_generate(config: RunConfig) -> int:
    n = config.n or DEFAULT_VERIFY_N
    kind = config.construction
    if kind is Provenance.TwoLine:
        cset = gen_two_line_set(n, config.d, config.spread, seed=config.seed)
        counts = count_circle_intersections(cset)
        LOG.info(f"Two-line set circle intersections: {counts.as_dict()}")
    elif kind is Provenance.CollinearUnit:
        cset = gen_collinear_unit(n)
    elif kind is Provenance.ConvexPosition:
        cset = gen_convex_position(n, seed=config.seed)
    else:
        cset = gen_random_general(n, seed=config.seed)

    if config.output is None:
        sys.stdout.write(format_points(list(cset.sites), header=cset.header()))
    else:
        write_points(config.output, list(cset.sites), header=cset.header())
    return 0


def cmd_arrangement(config: RunConfig) -> int:
    sites = read_points(config.input)
    hull = convex_hull(sites)
    lines = hull_supporting_lines(sites, hull)
    arr = label_outer_cells(build_arrangement(lines, include=[(s.x, s.y) for s in sites]), sites, hull)

    out = config.output or Path(f"{config.input.stem}.arrangement.svg")
    write_svg(out, arr, sites)
    summary = {
        "hullVertices": hull.k,
        "vertices": len(arr.vertices),
        "edges": len(arr.edges),
        "faces": len(arr.faces),
        "labeledFaces": sum(1 for f in arr.faces if f.label is not None),
        "tiedFaces": sum(1 for f in arr.faces if f.tie),
        "eulerCharacteristic": arr.euler_characteristic(),
    }
    print(json.dumps(summary, indent=2))
    return 0


COMMAND_HANDLERS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "bench": cmd_bench,
    "generate": cmd_generate,
    "arrangement": cmd_arrangement,
}
