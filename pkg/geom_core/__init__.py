from .predicates import Orientation, orient, orient_sign, cross_sign, in_circle_sign
from .primitives import (
    Point2,
    Circle,
    DEGENERATE_CIRCLE,
    circumcenter_xy,
    circumcircle,
    min_enclosing_circle_3,
    triangle_area,
    point_segment_distance,
)
