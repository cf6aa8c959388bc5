import json
import math

import pytest

from distances import DistanceKind, DistanceSpec
from envelope_raster import GridSpec, default_grid
from exceptions import NoUniqueClosestPair, PreconditionViolation
from neighbor_structures import delaunay
from utils.util import to_points
from verify import (
    THEOREMS,
    Report,
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
    random_edge_set,
    run_all,
)
from constructions import gen_convex_position

CONTAINING = DistanceSpec(kind=DistanceKind.ContainingRadius)


def small_grid(sites, size=96):
    return default_grid(sites, size, size)


@pytest.fixture
def generic_quadrilateral():
    return to_points([(0, 0), (4, 0.5), (3, 3), (-0.5, 2)])


@pytest.mark.parametrize("spec", [CONTAINING, DistanceSpec(kind=DistanceKind.ParamPerimeter, c=0.0)], ids=lambda s: s.label())
def test_delaunay_pruning_passes(random_sites, spec):
    sites = random_sites(12, 1)
    report = check_delaunay_pruning(sites, spec, small_grid(sites, 128), seed=1)
    assert report.passed
    assert report.counts["ownersOutsideReference"] == 0
    assert report.counts["mismatchedCells"] == 0
    assert report.counts["fullCandidates"] == 66
    assert report.counts["prunedCandidates"] == report.counts["delaunayEdges"]


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_random_edge_set_control_fails(random_sites, seed):
    sites = random_sites(12, 1)
    size = len(delaunay(sites).edges)
    control = random_edge_set(12, size, seed=100 + seed)
    assert len(control) == size
    report = check_delaunay_pruning(sites, CONTAINING, small_grid(sites, 64), reference_edges=control)
    assert not report.passed
    assert report.counts["ownersOutsideReference"] > 0
    assert any("supplied by caller" in d for d in report.details)


def test_delaunay_pruning_rejects_unpruned_specs(random_sites):
    sites = random_sites(6, 0)
    with pytest.raises(PreconditionViolation):
        check_delaunay_pruning(sites, DistanceSpec(kind=DistanceKind.ViewAngle), small_grid(sites, 16))
    with pytest.raises(PreconditionViolation):
        check_delaunay_pruning(sites, DistanceSpec(kind=DistanceKind.ParamPerimeter, c=-0.5), small_grid(sites, 16))


def test_pc_limit_collapses_onto_closest_pair(random_sites):
    sites = random_sites(8, 2)
    grid = small_grid(sites, 128)
    report = check_pc_limit(sites, 1e6, grid, seed=2)
    assert report.passed
    assert report.counts["owningPairs"] == 1
    assert report.counts["ownedByOthers"] == 0

    control = check_pc_limit(sites, 0.0, grid, seed=2)
    assert not control.passed
    assert control.counts["owningPairs"] > 1


def test_pc_limit_two_sites():
    sites = to_points([(0, 0), (1, 1)])
    assert check_pc_limit(sites, 5.0, small_grid(sites, 16)).passed


def test_pc_limit_needs_unique_closest_pair(unit_square):
    with pytest.raises(NoUniqueClosestPair):
        check_pc_limit(unit_square, 1e6, small_grid(unit_square, 16))


def test_viewangle_outer_triangle(right_triangle):
    sites = list(right_triangle)
    report = check_viewangle_outer(sites, small_grid(sites, 128))
    assert report.passed
    assert report.counts["comparedCells"] > 0
    assert report.counts["faces"] == report.counts["expectedFaces"] == 7
    assert report.counts["inconsistentFaces"] == 0


def test_viewangle_outer_random_sites(random_sites):
    sites = random_sites(10, 3)
    report = check_viewangle_outer(sites, small_grid(sites, 128), seed=3)
    assert report.passed
    assert report.counts["agreement"] >= 0.999


def test_viewangle_outer_vacuous_inside_hull():
    sites = to_points([(0, 0), (10, 0), (0, 10)])
    report = check_viewangle_outer(sites, GridSpec(bbox=(1, 1, 2, 2), width=16, height=16))
    assert report.passed
    assert report.counts["comparedCells"] == 0
    assert any("vacuous" in d for d in report.details)


def test_viewangle_outer_needs_noncollinear_sites():
    sites = to_points([(0, 0), (1, 0), (2, 0)])
    with pytest.raises(PreconditionViolation):
        check_viewangle_outer(sites, small_grid(sites, 16))


def test_far_field_regular_pentagon():
    sites = to_points([(math.cos(2 * math.pi * k / 5), math.sin(2 * math.pi * k / 5)) for k in range(5)])
    report = check_far_field_antipodal(sites, 1e3)
    assert report.passed
    # the five diagonals; adjacent vertices are never antipodal
    assert report.counts["antipodalPairs"] == 5
    assert report.counts["oracleMismatch"] == 0
    assert report.counts["nearField"] == 0


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_far_field_random_sites(random_sites, seed):
    report = check_far_field_antipodal(random_sites(12, seed), 1e3, seed=seed)
    assert report.passed
    assert report.counts["directions"] == 720
    assert report.counts["oracleMismatch"] == 0


def test_far_field_near_field_is_flagged(random_sites):
    report = check_far_field_antipodal(random_sites(12, 0), 1.0)
    assert report.counts["nearField"] == 1
    assert any("non-probative" in d for d in report.details)


@pytest.mark.parametrize("n", [3, 8])
def test_ppcirc_collinear(n):
    sites = to_points([(k, 0) for k in range(n)])
    report = check_ppcirc_collinear(n, default_grid(sites, 32 * n, 64))
    assert report.passed
    assert report.counts["consecutiveRegions"] == n - 1
    assert report.counts["samples"] == 64 * (n - 1)
    assert report.counts["maxDeviation"] <= 1e-9
    assert report.counts["minValue"] == pytest.approx(2.0, abs=1e-9)
    assert report.counts["minOtherPairValue"] > 2.0
    assert report.counts["controlNonConsecutiveValue"] == pytest.approx(4.0)


def test_ppcirc_collinear_needs_three_sites():
    with pytest.raises(PreconditionViolation):
        check_ppcirc_collinear(2)


def test_line_locus_furthest_circumradius(generic_quadrilateral):
    report = check_line_locus_furthest_C(generic_quadrilateral, small_grid(generic_quadrilateral, 64))
    assert report.passed
    assert report.counts["linesSampled"] == 6
    # the diagonals cross inside the grid: a tie sample that still passes
    assert report.counts["tieSamples"] >= 1
    assert report.counts["failures"] == 0


def test_line_locus_rejects_collinear_triple():
    sites = to_points([(0, 0), (1, 1), (2, 2), (0, 1)])
    with pytest.raises(PreconditionViolation):
        check_line_locus_furthest_C(sites, small_grid(sites, 16))


def test_ccc_zero_locus(random_sites):
    report = check_ccc_zero_locus(random_sites(6, 4))
    assert report.passed
    assert report.counts["samples"] == 32 * 15


def test_inradius_line_crossings(random_sites):
    report = check_inradius_line_crossings(random_sites(6, 5))
    assert report.passed
    assert report.counts["crossings"] == 45
    with pytest.raises(PreconditionViolation):
        check_inradius_line_crossings(random_sites(3, 5))


def test_viewangle_segment_crossings_convex_position():
    sites = list(gen_convex_position(6, seed=1).sites)
    report = check_viewangle_segment_crossings(sites)
    assert report.passed
    assert report.counts["crossings"] == 15
    assert report.counts["maxGapToPi"] <= 1e-9


@pytest.mark.parametrize("seed", range(3))
def test_containing_closest_neighbor_random_sites(random_sites, seed):
    report = check_containing_closest_neighbor(random_sites(8, seed), seed=seed)
    assert report.passed
    assert report.counts["sitesWithUniqueNeighbor"] == 8
    assert report.counts["distinctOwners"] >= 4


def test_containing_closest_neighbor_two_clusters():
    sites = to_points([(0, 0), (1, 0), (5, 0), (5, 3)])
    report = check_containing_closest_neighbor(sites)
    assert report.passed
    assert report.counts["distinctOwners"] == report.counts["lowerBound"] == 2


def test_containing_closest_neighbor_skips_tied_neighbours(unit_square):
    report = check_containing_closest_neighbor(unit_square)
    assert report.passed
    assert report.counts["sitesWithUniqueNeighbor"] == 0


def test_pc_minus1_segment_crossings_convex_position():
    sites = list(gen_convex_position(6, seed=1).sites)
    report = check_pc_minus1_segment_crossings(sites)
    assert report.passed
    assert report.counts["crossings"] == 15


def test_pc_minus1_segment_crossings_concurrent_diagonals():
    hexagon = to_points([(math.cos(k * math.pi / 3), math.sin(k * math.pi / 3)) for k in range(6)])
    assert check_pc_minus1_segment_crossings(hexagon).passed


def test_ccc_furthest_line_crossings(random_sites):
    report = check_ccc_furthest_line_crossings(random_sites(6, 5))
    assert report.passed
    assert report.counts["crossings"] == 45


@pytest.mark.parametrize(
    "check", [check_pc_minus1_segment_crossings, check_ccc_furthest_line_crossings], ids=lambda f: f.__name__
)
def test_crossing_checks_need_four_sites(random_sites, check):
    with pytest.raises(PreconditionViolation):
        check(random_sites(3, 0))


def test_report_json(random_sites):
    sites = random_sites(5, 0)
    report = check_far_field_antipodal(sites, 1e3, directions=36, seed=0)
    data = json.loads(report.to_json())
    assert {"theorem", "passed", "counts", "details", "seed", "n", "grid"} <= set(data)
    assert data["theorem"] == "far-field-antipodal"
    assert data["seed"] == 0
    assert Report.model_validate(data) == report


def test_reports_are_reproducible(random_sites):
    sites = random_sites(8, 7)
    grid = small_grid(sites, 48)
    a = check_viewangle_outer(sites, grid, seed=7, threads=1)
    b = check_viewangle_outer(sites, grid, seed=7, threads=3)
    assert a.to_json() == b.to_json()


def test_run_all_reports_every_check():
    reports = run_all(n=6, seed=0, grid_size=48, threads=2)
    assert [r.theorem for r in reports] == list(THEOREMS)
    assert all(r.n == 6 for r in reports if r.theorem != "ppcirc-collinear")


def test_run_all_turns_preconditions_into_failed_reports():
    sites = to_points([(0, 0), (1, 0), (2, 0), (3, 0)])
    reports = {r.theorem: r for r in run_all(sites=sites, grid_size=32, threads=1)}
    for theorem in ("viewangle-outer", "far-field-antipodal", "line-locus-furthest-C"):
        assert not reports[theorem].passed
        assert reports[theorem].details[0].startswith("precondition failed")
    assert reports["ppcirc-collinear"].passed
    for theorem in ("containing-closest-neighbor", "pc-minus1-segment-crossings", "ccc-furthest-line-crossings"):
        assert reports[theorem].passed


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(10))
def test_acceptance_sweeps(random_sites, seed):
    sites = random_sites(8, seed)
    assert check_pc_limit(sites, 1e6, small_grid(sites, 256), seed=seed).passed
    for n in (6, 10):
        sites = random_sites(n, seed)
        report = check_viewangle_outer(sites, small_grid(sites, 256), seed=seed)
        assert report.passed
        if report.counts["faces"] == report.counts["expectedFaces"]:
            assert report.counts["inconsistentFaces"] == 0
    assert check_far_field_antipodal(random_sites(12, seed), 1e3, seed=seed).passed
