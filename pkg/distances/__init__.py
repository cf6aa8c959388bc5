from .DistanceSpec import DistanceKind, DistanceSpec, DistanceValue, SitePair
from .evaluator import (
    evaluate,
    evaluate_many,
    parse_kind,
    view_angle_key,
    view_angle_key_many,
)
