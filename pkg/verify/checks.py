"""
Desk-scale checks of the structural claims behind the 2-site diagrams.

Each check builds its own evidence (rasters, samples, oracles), records the
raw numbers in `Report.counts` and derives `passed` from them. Precondition
failures raise PreconditionViolation instead of producing a report.
"""
import math
from typing import Iterable, Optional

import numpy as np

from arrangement import (
    build_arrangement,
    distance_to_lines,
    face_interior_samples,
    furthest_view_angle_owners,
    hull_supporting_lines,
    label_outer_cells,
    locate_faces,
)
from config.Config import AGREEMENT_THRESHOLD, DEFAULT_SEED, VALUE_TOL
from constructions import gen_collinear_unit, site_line_crossings
from constructions.generators import has_collinear_triple
from distances import DistanceKind, DistanceSpec, SitePair
from envelope_raster import (
    UNDEFINED,
    GridSpec,
    Mode,
    all_pairs,
    compute_raster,
    default_grid,
    evaluate_pairs,
    pruning_applies,
    select_owners,
)
from exceptions import DegenerateInput, NoUniqueClosestPair, PreconditionViolation
from geom_core import Point2
from logger.Logger import LOG
from neighbor_structures import (
    antipodal_pairs,
    antipodal_pairs_brute_force,
    closest_pair,
    convex_hull,
    delaunay,
    diameter,
)
from utils.util import sites_array
from .Report import Report

# below this radius multiplier far-field sampling says nothing about unbounded regions
NEAR_FIELD_MULTIPLIER = 10.0


def _hull_or_precondition(sites: list[Point2]):
    try:
        return convex_hull(sites)
    except DegenerateInput as e:
        raise PreconditionViolation(f"need at least 3 noncollinear sites: {e}")


def _pair_code(pair: SitePair, n: int) -> int:
    return pair.i * n + pair.j


def _fmt(pair: SitePair) -> str:
    return f"({pair.i},{pair.j})"


def _log_report(report: Report) -> Report:
    LOG.info(f"Check {report.theorem}: {'passed' if report.passed else 'FAILED'} {report.counts}")
    return report


def random_edge_set(n: int, size: int, seed: int) -> frozenset[SitePair]:
    """Uniformly random set of `size` site pairs; negative control for the pruning check."""
    pairs = all_pairs(n)
    rng = np.random.default_rng(seed)
    pick = rng.choice(len(pairs), size=min(size, len(pairs)), replace=False)
    return frozenset(pairs[k] for k in pick)


def check_delaunay_pruning(
    sites: list[Point2],
    spec: DistanceSpec,
    grid: Optional[GridSpec] = None,
    seed: Optional[int] = None,
    reference_edges: Optional[Iterable[SitePair]] = None,
    threads: Optional[int] = None,
) -> Report:
    """
    Every pair owning a nearest region (computed over all C(n,2) pairs) must be
    a Delaunay edge. `reference_edges` replaces the Delaunay edges, which is
    how the randomized negative control is run.
    """
    if not pruning_applies(spec, Mode.Nearest):
        raise PreconditionViolation(f"{spec.label()} has no Delaunay pruning guarantee")
    _hull_or_precondition(sites)
    n = len(sites)
    grid = grid or default_grid(sites)

    full = compute_raster(sites, spec, Mode.Nearest, grid, candidates=all_pairs(n), threads=threads)
    pruned = compute_raster(sites, spec, Mode.Nearest, grid, threads=threads)
    dt_edges = delaunay(sites).edges
    reference = frozenset(reference_edges) if reference_edges is not None else dt_edges

    owners = full.nonempty_pairs()
    outside = sorted(owners - reference, key=lambda p: p.as_tuple())
    mismatched = int((full.pair_codes() != pruned.pair_codes()).sum())

    details = [f"{spec.label()} nearest on {grid.describe()}: {len(owners)} owning pairs"]
    if reference_edges is not None:
        details.append(f"reference edge set supplied by caller ({len(reference)} pairs)")
    if outside:
        details.append("owning pairs outside the reference edges: " + " ".join(_fmt(p) for p in outside))
    if mismatched:
        details.append(f"{mismatched} cells differ between pruned and full rasters")

    return _log_report(Report(
        theorem="delaunay-pruning",
        passed=not outside,
        counts={
            "owningPairs": len(owners),
            "referenceEdges": len(reference),
            "delaunayEdges": len(dt_edges),
            "ownersOutsideReference": len(outside),
            "prunedCandidates": len(pruned.candidates),
            "fullCandidates": len(full.candidates),
            "mismatchedCells": mismatched,
        },
        details=details,
        seed=seed,
        n=n,
        grid=Report.grid_info(grid),
    ))


def check_pc_limit(
    sites: list[Point2],
    c: float = 1e6,
    grid: Optional[GridSpec] = None,
    seed: Optional[int] = None,
    threads: Optional[int] = None,
) -> Report:
    """For large c the nearest P_c diagram collapses onto the region of the closest pair."""
    if len(sites) < 2:
        raise PreconditionViolation("need at least 2 sites")
    n = len(sites)
    closest = closest_pair(sites)
    if not closest.unique:
        raise NoUniqueClosestPair(f"closest distance {closest.distance!r} is attained by several pairs")
    grid = grid or default_grid(sites)
    spec = DistanceSpec(kind=DistanceKind.ParamPerimeter, c=c)

    raster = compute_raster(sites, spec, Mode.Nearest, grid, threads=threads)
    codes = raster.pair_codes()
    owned = codes >= 0
    by_closest = int((codes == _pair_code(closest.pair, n)).sum())
    by_others = int(owned.sum()) - by_closest
    owners = raster.nonempty_pairs()

    details = [f"closest pair {_fmt(closest.pair)} at distance {closest.distance:.6g}; c = {c:g}"]
    if by_others:
        details.append("other owning pairs: " + " ".join(_fmt(p) for p in sorted(owners - {closest.pair}, key=lambda p: p.as_tuple())))

    return _log_report(Report(
        theorem="pc-limit",
        passed=by_others == 0 and by_closest > 0,
        counts={
            "ownedByClosest": by_closest,
            "ownedByOthers": by_others,
            "owningPairs": len(owners),
            "tieCells": int(raster.ties.sum()),
            "undefinedCells": int(((raster.labels == UNDEFINED) & ~raster.ties).sum()),
        },
        details=details,
        seed=seed,
        n=n,
        grid=Report.grid_info(grid),
        thresholds={"c": c},
    ))


def _outside_hull(sites: list[Point2], hull, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    outside = np.zeros(xs.shape, dtype=bool)
    for a, b in hull.edges():
        p, q = sites[a], sites[b]
        outside |= (q.x - p.x) * (ys - p.y) - (q.y - p.y) * (xs - p.x) < 0
    return outside


def check_viewangle_outer(
    sites: list[Point2],
    grid: Optional[GridSpec] = None,
    seed: Optional[int] = None,
    threads: Optional[int] = None,
    samples_per_face: int = 16,
) -> Report:
    """
    Outside the hull the furthest view-angle diagram is the arrangement of the
    hull's supporting lines: raster labels on cells well clear of every line
    must match the label of the face containing them.
    """
    hull = _hull_or_precondition(sites)
    n = len(sites)
    grid = grid or default_grid(sites)
    xmin, ymin, xmax, ymax = grid.bbox

    lines = hull_supporting_lines(sites, hull)
    include = [(s.x, s.y) for s in sites] + [(xmin, ymin), (xmax, ymax)]
    arr = label_outer_cells(build_arrangement(lines, include=include), sites, hull)

    raster = compute_raster(
        sites, DistanceSpec(kind=DistanceKind.ViewAngle), Mode.Furthest, grid, candidates=all_pairs(n), threads=threads
    )
    X, Y = np.meshgrid(grid.xs(), grid.ys())
    qualifying = _outside_hull(sites, hull, X, Y) & (distance_to_lines(arr, X, Y) > 2.0 * grid.cell_diagonal())
    compared = int(qualifying.sum())

    face_of = locate_faces(arr, X[qualifying], Y[qualifying])
    face_codes = np.array([_pair_code(f.label, n) if f.label is not None else UNDEFINED for f in arr.faces])
    expected = np.where(face_of >= 0, face_codes[np.clip(face_of, 0, None)], UNDEFINED)
    cand_codes = np.array([_pair_code(p, n) for p in raster.candidates])
    labels = raster.labels[qualifying]
    got = np.where(labels >= 0, cand_codes[np.clip(labels, 0, None)], UNDEFINED)
    agreeing = int((got == expected).sum())
    agreement = agreeing / compared if compared else 1.0

    rng = np.random.default_rng(DEFAULT_SEED if seed is None else seed)
    labeled = [f for f in arr.faces if f.label is not None]
    inconsistent = 0
    for face in labeled:
        pts = face_interior_samples(face, samples_per_face, rng)
        pairs, winner, tie = furthest_view_angle_owners(sites, pts[:, 0], pts[:, 1])
        if any(pairs[int(w)] != face.label for w, t in zip(winner, tie) if not t):
            inconsistent += 1

    k = hull.k
    expected_faces = 1 + k + k * (k - 1) // 2
    generic = len(arr.vertices) == k * (k - 1) // 2

    details = [f"hull with {k} vertices; arrangement has {len(arr.vertices)} vertices and {len(arr.faces)} faces"]
    if compared == 0:
        details.append("no qualifying cells outside the hull: vacuous pass")
    if not generic:
        details.append("hull supporting lines are not in general position (parallel or concurrent)")
    elif len(arr.faces) != expected_faces:
        details.append(f"face count {len(arr.faces)} differs from 1 + k + C(k,2) = {expected_faces}")
    if inconsistent:
        details.append(f"{inconsistent} labeled faces contain interior samples with another furthest pair")

    return _log_report(Report(
        theorem="viewangle-outer",
        passed=agreement >= AGREEMENT_THRESHOLD and inconsistent == 0,
        counts={
            "comparedCells": compared,
            "agreeingCells": agreeing,
            "agreement": agreement,
            "rasterTieCells": int(raster.ties[qualifying].sum()),
            "hullVertices": k,
            "faces": len(arr.faces),
            "expectedFaces": expected_faces,
            "labeledFaces": len(labeled),
            "tiedFaces": sum(1 for f in arr.faces if f.tie),
            "inconsistentFaces": inconsistent,
        },
        details=details,
        seed=seed,
        n=n,
        grid=Report.grid_info(grid),
        thresholds={"agreement": AGREEMENT_THRESHOLD, "clearanceCellDiagonals": 2.0},
    ))


def check_far_field_antipodal(
    sites: list[Point2],
    radius_multiplier: float = 1e3,
    directions: int = 720,
    seed: Optional[int] = None,
) -> Report:
    """Far from the sites every furthest inscribed-radius owner is an antipodal hull pair."""
    hull = _hull_or_precondition(sites)
    n = len(sites)
    calipers = antipodal_pairs(sites, hull)
    oracle = antipodal_pairs_brute_force(sites, hull)

    center = sites_array(sites).mean(axis=0)
    radius = radius_multiplier * diameter(sites)
    theta = 2.0 * np.pi * (np.arange(directions) + 0.5) / directions
    xs = center[0] + radius * np.cos(theta)
    ys = center[1] + radius * np.sin(theta)

    pairs = all_pairs(n)
    values = evaluate_pairs(sites, DistanceSpec(kind=DistanceKind.InscribedRadius), pairs, xs, ys)
    winner, tie, _ = select_owners(values, Mode.Furthest)
    owners = [pairs[int(w)] for w in winner]
    bad = sorted({p for p in owners if p not in calipers}, key=lambda p: p.as_tuple())
    non_antipodal = sum(1 for p in owners if p not in calipers)
    near_field = radius_multiplier < NEAR_FIELD_MULTIPLIER

    details = [f"{directions} directions at {radius_multiplier:g} x diameter; {len(calipers)} antipodal pairs"]
    if near_field:
        details.append("near-field sampling: the unbounded-region claim is asymptotic, result is non-probative")
    if bad:
        details.append("non-antipodal owners: " + " ".join(_fmt(p) for p in bad))
    if calipers.pairs != oracle.pairs:
        details.append("rotating calipers disagree with the direction-sweep oracle")

    return _log_report(Report(
        theorem="far-field-antipodal",
        passed=non_antipodal == 0,
        counts={
            "directions": directions,
            "nonAntipodalSamples": non_antipodal,
            "tieSamples": int(tie.sum()),
            "distinctOwners": len(set(owners)),
            "antipodalPairs": len(calipers),
            "oracleMismatch": len(calipers.pairs ^ oracle.pairs),
            "nearField": int(near_field),
        },
        details=details,
        seed=seed,
        n=n,
        thresholds={"radiusMultiplier": radius_multiplier, "nearFieldBelow": NEAR_FIELD_MULTIPLIER},
    ))


def _circle_samples(cx: float, cy: float, r: float, count: int) -> tuple[np.ndarray, np.ndarray]:
    # half-step offset keeps samples off the diameter endpoints
    theta = 2.0 * np.pi * (np.arange(count) + 0.5) / count
    return cx + r * np.cos(theta), cy + r * np.sin(theta)


def check_ppcirc_collinear(
    n: int,
    grid: Optional[GridSpec] = None,
    samples: int = 64,
    threads: Optional[int] = None,
) -> Report:
    """
    Unit-spaced collinear sites: on the diameter circle of each consecutive
    pair the nearest circumcenter-perimeter value is exactly 2 and belongs to
    that pair, so each of the n - 1 consecutive pairs owns a region.
    """
    if n < 3:
        raise PreconditionViolation(f"collinear construction check needs n >= 3, got {n}")
    sites = list(gen_collinear_unit(n).sites)
    spec = DistanceSpec(kind=DistanceKind.CccPerimeter)
    pairs = all_pairs(n)
    index = {p: k for k, p in enumerate(pairs)}

    value_failures = owner_failures = 0
    max_deviation = 0.0
    min_value = min_other = math.inf
    for k in range(n - 1):
        target = index[SitePair(i=k, j=k + 1)]
        xs, ys = _circle_samples(k + 0.5, 0.0, 0.5, samples)
        values = evaluate_pairs(sites, spec, pairs, xs, ys)
        winner, tie, _ = select_owners(values, Mode.Nearest)
        deviation = np.abs(values[target] - 2.0)
        max_deviation = max(max_deviation, float(deviation.max()))
        min_value = min(min_value, float(values[target].min()))
        value_failures += int((deviation > VALUE_TOL).sum())
        owner_failures += int(((winner != target) | tie).sum())
        min_other = min(min_other, float(np.nanmin(np.delete(values, target, axis=0))))

    # a non-consecutive pair on its own diameter circle
    xs, ys = _circle_samples(1.0, 0.0, 1.0, samples)
    control = float(np.nanmin(evaluate_pairs(sites, spec, [SitePair(i=0, j=2)], xs, ys)))

    grid = grid or default_grid(sites)
    raster = compute_raster(sites, spec, Mode.Nearest, grid, threads=threads)
    owners = raster.nonempty_pairs()
    consecutive = sum(1 for k in range(n - 1) if SitePair(i=k, j=k + 1) in owners)

    controls_ok = min_other > 2.0 + VALUE_TOL and control > 2.0 + VALUE_TOL
    details = [f"{n} unit-spaced sites; {samples} samples per consecutive-pair circle"]
    if consecutive < n - 1:
        details.append(f"only {consecutive} of {n - 1} consecutive pairs own raster cells")
    if not controls_ok:
        details.append("a non-consecutive pair reaches the minimum value 2")

    return _log_report(Report(
        theorem="ppcirc-collinear",
        passed=value_failures == 0 and owner_failures == 0 and consecutive == n - 1 and controls_ok,
        counts={
            "samples": samples * (n - 1),
            "valueFailures": value_failures,
            "ownerFailures": owner_failures,
            "maxDeviation": max_deviation,
            "minValue": min_value,
            "minOtherPairValue": min_other,
            "controlNonConsecutiveValue": control,
            "consecutiveRegions": consecutive,
            "nonEmptyRegions": len(owners),
        },
        details=details,
        n=n,
        grid=Report.grid_info(grid),
        thresholds={"valueTol": VALUE_TOL},
    ))


def check_line_locus_furthest_C(
    sites: list[Point2],
    grid: Optional[GridSpec] = None,
    samples_per_line: int = 16,
    seed: Optional[int] = None,
) -> Report:
    """
    Points on the line through p and q have infinite circumradius for (p, q),
    so the furthest-C owner there is (p, q). Samples where several site-lines
    meet are ties and pass when the owner is any of those pairs.
    """
    n = len(sites)
    if n < 2:
        raise PreconditionViolation("need at least 2 sites")
    if has_collinear_triple(sites):
        raise PreconditionViolation("sites contain a collinear triple")
    grid = grid or default_grid(sites)
    xmin, ymin, xmax, ymax = grid.bbox
    pairs = all_pairs(n)
    arr = sites_array(sites)
    scale = float(np.max(arr.max(axis=0) - arr.min(axis=0)))

    t = -0.5 + 2.0 * (np.arange(samples_per_line) + 0.5) / samples_per_line
    px, py = arr[[p.i for p in pairs]].T
    qx, qy = arr[[p.j for p in pairs]].T
    line_xs = (px[:, None] + t * (qx - px)[:, None]).ravel()
    line_ys = (py[:, None] + t * (qy - py)[:, None]).ravel()
    crossings = np.array([hit for _, _, hit in site_line_crossings(sites)], dtype=float).reshape(-1, 2)
    xs = np.concatenate([line_xs, crossings[:, 0]])
    ys = np.concatenate([line_ys, crossings[:, 1]])
    inside = (xs >= xmin) & (xs <= xmax) & (ys >= ymin) & (ys <= ymax)
    n_line = int(inside[:len(line_xs)].sum())
    xs, ys = xs[inside], ys[inside]

    values = evaluate_pairs(sites, DistanceSpec(kind=DistanceKind.Circumradius), pairs, xs, ys)
    winner, _, _ = select_owners(values, Mode.Furthest)

    # pairs whose line passes through each sample
    norm = np.hypot(qx - px, qy - py)[:, None]
    dist = np.abs((qx - px)[:, None] * (ys - py[:, None]) - (qy - py)[:, None] * (xs - px[:, None])) / norm
    expected = dist <= VALUE_TOL * scale
    ok = expected[winner, np.arange(len(xs))]
    ties = expected.sum(axis=0) >= 2
    failures = int((~ok).sum())

    details = [f"{n_line} on-line samples and {len(xs) - n_line} line-crossing samples inside the grid"]
    if failures:
        details.append(f"{failures} samples owned by a pair whose line misses them")

    return _log_report(Report(
        theorem="line-locus-furthest-C",
        passed=failures == 0,
        counts={
            "samples": int(len(xs)),
            "lineSamples": n_line,
            "tieSamples": int(ties.sum()),
            "failures": failures,
            "linesSampled": int((expected.any(axis=1)).sum()),
        },
        details=details,
        seed=seed,
        n=n,
        grid=Report.grid_info(grid),
        thresholds={"onLineTol": VALUE_TOL},
    ))
