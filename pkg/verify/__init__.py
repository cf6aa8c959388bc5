from .Report import Report
from .checks import (
    NEAR_FIELD_MULTIPLIER,
    check_delaunay_pruning,
    check_far_field_antipodal,
    check_line_locus_furthest_C,
    check_pc_limit,
    check_ppcirc_collinear,
    check_viewangle_outer,
    random_edge_set,
)
from .supplemental import (
    check_ccc_furthest_line_crossings,
    check_ccc_zero_locus,
    check_containing_closest_neighbor,
    check_inradius_line_crossings,
    check_pc_minus1_segment_crossings,
    check_viewangle_segment_crossings,
)
from .runner import THEOREMS, run_all, run_all_async
