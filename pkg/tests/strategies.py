"""Hypothesis strategies shared by the property tests."""
import numpy as np
from hypothesis import strategies as st

from geom_core import Point2
from utils.util import to_points

coords = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)


@st.composite
def points(draw):
    return Point2(draw(coords), draw(coords))


@st.composite
def seeded_triples(draw):
    """Three uniform points drawn from a numpy generator seeded by hypothesis."""
    seed = draw(st.integers(min_value=0, max_value=2**31 - 1))
    rng = np.random.default_rng(seed)
    return tuple(to_points(rng.uniform(-10.0, 10.0, size=(3, 2))))


@st.composite
def site_sets(draw, min_points=3, max_points=20):
    n = draw(st.integers(min_value=min_points, max_value=max_points))
    seed = draw(st.integers(min_value=0, max_value=2**31 - 1))
    rng = np.random.default_rng(seed)
    return to_points(rng.uniform(-10.0, 10.0, size=(n, 2)))
