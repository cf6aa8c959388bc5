from .models import TIE, UNDEFINED, GridSpec, Mode, PairRegion, RasterDiagram, RegionStats
from .candidates import all_pairs, candidate_pairs, pruning_applies
from .raster import compute_raster, default_grid, evaluate_pairs, select_owners
from .stats import count_raster_vertices, region_stats, stats_to_dict
from .render import pair_color, render_rgb, write_ppm
