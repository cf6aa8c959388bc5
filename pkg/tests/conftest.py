import math

import pytest

from constructions import gen_random_general
from geom_core import Point2
from utils.util import to_points


@pytest.fixture
def right_triangle():
    return Point2(0.0, 0.0), Point2(3.0, 0.0), Point2(0.0, 4.0)


@pytest.fixture
def unit_square():
    return to_points([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def regular_hexagon():
    # exactly symmetric coordinates so opposite edges are exactly parallel
    h = math.sqrt(3.0) / 2.0
    return to_points([(1.0, 0.0), (0.5, h), (-0.5, h), (-1.0, 0.0), (-0.5, -h), (0.5, -h)])


@pytest.fixture
def random_sites():
    def make(n: int, seed: int) -> list[Point2]:
        return list(gen_random_general(n, seed=seed).sites)
    return make
