from math import comb

import numpy as np
import pytest

from constructions import (
    ConstructionSet,
    Provenance,
    count_circle_intersections,
    count_line_intersections,
    count_segment_crossing_points,
    count_segment_intersections,
    crossing_segment_pairs,
    diameter_circles,
    gen_collinear_unit,
    gen_convex_position,
    gen_random_general,
    gen_two_line_set,
    line_line_point,
    site_line_crossings,
)
from constructions.generators import has_collinear_triple
from geom_core import Point2
from utils.util import to_points


@pytest.mark.parametrize("n, expected", [(4, 1), (5, 5), (6, 15), (8, 70)])
def test_convex_position_segment_crossings(n, expected):
    cset = gen_convex_position(n, seed=n)
    assert count_segment_intersections(list(cset.sites)) == expected == comb(n, 4)
    assert count_segment_crossing_points(list(cset.sites)) == expected


def test_concurrent_diagonals_count_once_as_points():
    hexagon = to_points([(np.cos(k * np.pi / 3), np.sin(k * np.pi / 3)) for k in range(6)])
    # the three long diagonals meet at the centre
    assert count_segment_intersections(hexagon) == 15
    assert count_segment_crossing_points(hexagon) == 13


def test_segments_sharing_an_endpoint_never_cross(unit_square):
    assert crossing_segment_pairs(unit_square) == [((0, 2), (1, 3))]


def test_line_line_point():
    p, q, r, s = to_points([(0, 0), (2, 2), (0, 2), (2, 0)])
    assert line_line_point(p, q, r, s) == pytest.approx((1.0, 1.0))
    assert line_line_point(*to_points([(0, 0), (1, 0), (0, 1), (3, 1)])) is None


def test_line_intersections_of_four_sites():
    sites = to_points([(0, 0), (4, 0.5), (3, 3), (-0.5, 2)])
    assert count_line_intersections(sites) == 3
    assert len(site_line_crossings(sites)) == 3


@pytest.mark.parametrize("n", [4, 5, 6, 7])
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_line_intersection_count_for_generic_sites(n, seed):
    sites = list(gen_random_general(n, seed=seed).sites)
    m = comb(n, 2)
    assert count_line_intersections(sites) == comb(m, 2) - n * comb(n - 1, 2)
    if n == 5:
        assert count_line_intersections(sites) == 15


def test_two_line_set_layout():
    cset = gen_two_line_set(8, seed=1)
    assert cset.provenance is Provenance.TwoLine
    lower, upper = cset.line_split()
    assert lower == (0, 1, 2, 3)
    assert upper == (4, 5, 6, 7)
    assert all(cset.sites[k].y == 0.0 for k in lower)
    assert all(cset.sites[k].y == 10.0 for k in upper)
    assert all(0.0 <= s.x <= 0.05 for s in cset.sites)
    assert len(diameter_circles(cset)) == 16
    assert "provenance=two-line" in cset.header()
    assert "seed=1" in cset.header()


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_two_line_circle_counts_n8(seed):
    counts = count_circle_intersections(gen_two_line_set(8, seed=seed))
    assert counts.circles == 16
    assert counts.pairs_intersecting == 120
    assert counts.incidences == 240
    # 8 sites, 8 perpendicular feet shared by circles through one site, 2 points per disjoint circle pair
    assert counts.distinct_points == 160
    assert counts.non_site_points == 152
    assert counts.coincident_pairs == 0


def test_two_line_circle_counts_n4():
    counts = count_circle_intersections(gen_two_line_set(4, seed=0))
    assert counts.circles == 4
    assert counts.pairs_intersecting == 6
    assert counts.distinct_points == 12
    assert counts.as_dict()["distinctPoints"] == 12


def test_odd_two_line_set_puts_extra_site_below():
    cset = gen_two_line_set(5, seed=3)
    lower, upper = cset.line_split()
    assert (len(lower), len(upper)) == (3, 2)
    assert count_circle_intersections(cset).circles == 6


def test_two_line_generation_is_deterministic():
    assert gen_two_line_set(6, seed=9).sites == gen_two_line_set(6, seed=9).sites


def test_coincident_circles_are_skipped():
    # rectangle corners: both diagonals give the same circle
    cset = ConstructionSet(
        sites=tuple(to_points([(0, 0), (1, 0), (0, 10), (1, 10)])),
        provenance=Provenance.TwoLine,
    )
    counts = count_circle_intersections(cset)
    assert counts.coincident_pairs == 1
    assert counts.pairs_intersecting == 5


def test_circle_counts_need_two_line_set():
    with pytest.raises(ValueError):
        count_circle_intersections(gen_collinear_unit(4))


@pytest.mark.parametrize("kwargs", [
    {"n": 3},
    {"n": 8, "spread": 0.0},
    {"n": 8, "d": 10.0, "spread": 0.5},
    {"n": 8, "d": -1.0},
])
def test_two_line_parameter_validation(kwargs):
    with pytest.raises(ValueError):
        gen_two_line_set(**kwargs)


def test_collinear_unit():
    cset = gen_collinear_unit(5)
    assert cset.sites == tuple(Point2(float(k), 0.0) for k in range(5))
    assert has_collinear_triple(list(cset.sites))
    with pytest.raises(ValueError):
        gen_collinear_unit(1)


def test_convex_position_on_unit_circle():
    cset = gen_convex_position(10, seed=4)
    radii = np.hypot([s.x for s in cset.sites], [s.y for s in cset.sites])
    np.testing.assert_allclose(radii, 1.0)
    angles = np.mod(np.arctan2([s.y for s in cset.sites], [s.x for s in cset.sites]), 2.0 * np.pi)
    assert (np.diff(angles) > 0).all()
    with pytest.raises(ValueError):
        gen_convex_position(2)


def test_random_general_position():
    cset = gen_random_general(15, seed=5)
    assert cset.n == 15
    assert not has_collinear_triple(list(cset.sites))
    assert all(0.0 <= s.x <= 1.0 and 0.0 <= s.y <= 1.0 for s in cset.sites)
    assert gen_random_general(15, seed=5).sites == cset.sites
    assert gen_random_general(15, seed=6).sites != cset.sites
