from .models import CircleIntersectionCounts, ConstructionSet, Provenance
from .counters import (
    circle_circle_points,
    count_circle_intersections,
    count_line_intersections,
    count_segment_crossing_points,
    count_segment_intersections,
    crossing_segment_pairs,
    diameter_circles,
    line_line_point,
    site_line_crossings,
)
from .generators import (
    gen_collinear_unit,
    gen_convex_position,
    gen_random_general,
    gen_two_line_set,
)
