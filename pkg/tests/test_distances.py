import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from pydantic import ValidationError

from distances import (
    DistanceKind,
    DistanceSpec,
    SitePair,
    evaluate,
    evaluate_many,
    parse_kind,
    view_angle_key,
    view_angle_key_many,
)
from exceptions import CoincidentSites
from geom_core import Point2, triangle_area
from strategies import points

ALL_KINDS = list(DistanceKind)


def value(kind, v, p, q, c=1.0):
    return evaluate(DistanceSpec(kind=kind, c=c), Point2(*v), Point2(*p), Point2(*q)).value


def test_distance_examples():
    assert value(DistanceKind.Circumradius, (0, 0), (3, 0), (0, 4)) == pytest.approx(2.5)
    assert value(DistanceKind.ViewAngle, (0.5, 0), (0, 0), (1, 0)) == math.pi
    assert value(DistanceKind.ViewAngle, (0, 1), (-1, 0), (1, 0)) == pytest.approx(math.pi / 2)
    assert value(DistanceKind.InscribedRadius, (0, 0), (3, 0), (0, 4)) == pytest.approx(1.0)
    assert value(DistanceKind.CccSegmentDist, (0, 0), (3, 0), (0, 4)) == pytest.approx(0.0, abs=1e-12)
    assert value(DistanceKind.CccArea, (0, 0), (3, 0), (0, 4)) == pytest.approx(0.0, abs=1e-12)
    assert value(DistanceKind.CccPerimeter, (0, 0), (3, 0), (0, 4)) == pytest.approx(10.0)
    assert value(DistanceKind.ParamPerimeter, (0, 0), (3, 0), (0, 4), c=1.0) == pytest.approx(12.0)
    assert value(DistanceKind.ParamPerimeter, (0, 0), (3, 0), (0, 4), c=0.0) == pytest.approx(7.0)
    assert value(DistanceKind.ParamPerimeter, (1.5, 2), (3, 0), (0, 4), c=-1.0) == pytest.approx(0.0, abs=1e-12)
    assert value(DistanceKind.ContainingRadius, (0, 0), (4, 0), (1, 0.5)) == pytest.approx(2.0)


def test_view_angle_beyond_segment_is_zero():
    assert value(DistanceKind.ViewAngle, (2, 0), (0, 0), (1, 0)) == 0.0


def test_collinear_values_are_infinite():
    for kind in (DistanceKind.Circumradius, DistanceKind.CccSegmentDist, DistanceKind.CccArea, DistanceKind.CccPerimeter):
        assert value(kind, (2, 0), (0, 0), (1, 0)) == math.inf
    assert value(DistanceKind.InscribedRadius, (2, 0), (0, 0), (1, 0)) == 0.0


def test_values_at_sites():
    for kind in ALL_KINDS:
        result = evaluate(DistanceSpec(kind=kind), Point2(0, 0), Point2(0, 0), Point2(1, 0))
        if kind in (DistanceKind.ContainingRadius, DistanceKind.InscribedRadius, DistanceKind.ParamPerimeter):
            assert result.defined
        else:
            assert not result.defined
            assert result.value is None
    assert value(DistanceKind.ContainingRadius, (0, 0), (0, 0), (2, 0)) == 1.0
    assert value(DistanceKind.InscribedRadius, (0, 0), (0, 0), (2, 0)) == 0.0


def test_coincident_sites_rejected():
    with pytest.raises(CoincidentSites):
        evaluate(DistanceSpec(kind=DistanceKind.ViewAngle), Point2(1, 1), Point2(0, 0), Point2(0, 0))


def test_spec_validation():
    with pytest.raises(ValidationError):
        DistanceSpec(kind=DistanceKind.ParamPerimeter, c=-1.5)
    assert DistanceSpec(kind=DistanceKind.ParamPerimeter, c=-1.0).c == -1.0
    assert DistanceSpec(kind=DistanceKind.ParamPerimeter, c=2).label() == "param-perimeter(c=2)"
    assert DistanceSpec(kind=DistanceKind.ViewAngle).label() == "viewangle"


def test_site_pair_is_ordered():
    assert SitePair.of(5, 2).as_tuple() == (2, 5)
    with pytest.raises(ValidationError):
        SitePair(i=3, j=3)


def test_parse_kind():
    assert parse_kind("ccc-perimeter") is DistanceKind.CccPerimeter
    assert parse_kind(" Containing ") is DistanceKind.ContainingRadius
    with pytest.raises(ValueError):
        parse_kind("manhattan")


@settings(max_examples=150)
@given(points(), points(), points())
def test_symmetric_in_the_pair(v, p, q):
    assume(p != q)
    for kind in ALL_KINDS:
        spec = DistanceSpec(kind=kind, c=0.5)
        a, b = evaluate(spec, v, p, q), evaluate(spec, v, q, p)
        assert a.defined == b.defined
        if a.defined:
            assert a.value == pytest.approx(b.value, rel=1e-9, abs=1e-12) or a.value == b.value


@settings(max_examples=150)
@given(points(), points(), points())
def test_ranges(v, p, q):
    assume(p != q)
    for kind in ALL_KINDS:
        result = evaluate(DistanceSpec(kind=kind, c=-1.0), v, p, q)
        if not result.defined:
            continue
        assert result.value >= 0.0
        if kind is DistanceKind.ViewAngle:
            assert result.value <= math.pi


@settings(max_examples=150)
@given(points(), points(), points())
def test_inradius_times_perimeter_is_twice_area(v, p, q):
    assume(len({v, p, q}) == 3)
    area = triangle_area(v, p, q)
    assume(area > 1e-6)
    r = value(DistanceKind.InscribedRadius, (v.x, v.y), (p.x, p.y), (q.x, q.y))
    assert r * (v.dist(p) + v.dist(q) + p.dist(q)) == pytest.approx(2.0 * area, rel=1e-12)


def test_ccc_distances_vanish_on_diameter_circle():
    p, q = Point2(-1.0, 0.0), Point2(1.0, 0.0)
    for theta in np.linspace(0.1, math.pi - 0.1, 25):
        v = Point2(math.cos(theta), math.sin(theta))
        assert evaluate(DistanceSpec(kind=DistanceKind.CccSegmentDist), v, p, q).value == pytest.approx(0.0, abs=1e-9)
        assert evaluate(DistanceSpec(kind=DistanceKind.CccArea), v, p, q).value == pytest.approx(0.0, abs=1e-9)
    off = Point2(0.0, 1.5)
    assert evaluate(DistanceSpec(kind=DistanceKind.CccSegmentDist), off, p, q).value > 1e-3


def _random_triples(count: int, seed: int):
    rng = np.random.default_rng(seed)
    return rng.uniform(-10.0, 10.0, size=(6, count))


def test_circumradius_matches_law_of_sines():
    vx, vy, px, py, qx, qy = _random_triples(100_000, seed=42)
    radius = evaluate_many(DistanceSpec(kind=DistanceKind.Circumradius), vx, vy, px, py, qx, qy)
    angle = np.arctan2(np.abs((px - vx) * (qy - vy) - (py - vy) * (qx - vx)), (px - vx) * (qx - vx) + (py - vy) * (qy - vy))
    law = np.hypot(qx - px, qy - py) / (2.0 * np.sin(angle))
    keep = np.sin(angle) > 1e-4
    assert keep.sum() > 99_000
    np.testing.assert_allclose(radius[keep], law[keep], rtol=1e-9)


def test_view_angle_comparator_agrees_with_negative_cosine():
    a = _random_triples(100_000, seed=7)
    b = _random_triples(100_000, seed=8)
    spec = DistanceSpec(kind=DistanceKind.ViewAngle)
    # same query point, two different pairs
    b[0], b[1] = a[0], a[1]
    angle_a, angle_b = evaluate_many(spec, *a), evaluate_many(spec, *b)
    key_a, key_b = view_angle_key_many(*a), view_angle_key_many(*b)
    separated = np.abs(angle_a - angle_b) > 1e-9
    np.testing.assert_array_equal((angle_a > angle_b)[separated], (key_a > key_b)[separated])


def test_view_angle_key_scalar():
    v, p, q = Point2(0, 1), Point2(-1, 0), Point2(1, 0)
    assert view_angle_key(v, p, q) == pytest.approx(0.0, abs=1e-15)


def test_vectorised_matches_scalar():
    rng = np.random.default_rng(3)
    vx, vy, px, py, qx, qy = rng.uniform(-5, 5, size=(6, 200))
    for kind in ALL_KINDS:
        spec = DistanceSpec(kind=kind, c=0.25)
        many = evaluate_many(spec, vx, vy, px, py, qx, qy)
        for t in range(0, 200, 7):
            single = evaluate(spec, Point2(vx[t], vy[t]), Point2(px[t], py[t]), Point2(qx[t], qy[t]))
            assert many[t] == pytest.approx(single.value, rel=1e-9, abs=1e-12)


def test_vectorised_sentinels():
    spec = DistanceSpec(kind=DistanceKind.Circumradius)
    out = evaluate_many(spec, np.array([0.0, 2.0, 0.5]), np.array([0.0, 0.0, 1.0]), 0.0, 0.0, 1.0, 0.0)
    assert math.isnan(out[0])
    assert out[1] == math.inf
    assert math.isfinite(out[2])
