import numpy as np
from scipy import ndimage

from logger.Logger import LOG
from .models import UNDEFINED, PairRegion, RasterDiagram, RegionStats


def count_raster_vertices(grid: np.ndarray) -> int:
    """2x2 windows holding at least three distinct labels."""
    if grid.shape[0] < 2 or grid.shape[1] < 2:
        return 0
    a, b = grid[:-1, :-1], grid[:-1, 1:]
    c, d = grid[1:, :-1], grid[1:, 1:]
    distinct = 1 + (b != a) + ((c != a) & (c != b)) + ((d != a) & (d != b) & (d != c))
    return int((distinct >= 3).sum())


def region_stats(raster: RasterDiagram) -> RegionStats:
    labels, ties = raster.labels, raster.ties
    owned = (labels >= 0) & ~ties
    counts = np.bincount(labels[owned], minlength=len(raster.candidates))

    per_pair = []
    for k, pair in enumerate(raster.candidates):
        cells = int(counts[k])
        components = 0
        if cells:
            _, components = ndimage.label(owned & (labels == k))
        per_pair.append(PairRegion(pair=pair, cells=cells, components=int(components)))

    stats = RegionStats(
        per_pair=tuple(per_pair),
        nonempty_pairs=int((counts > 0).sum()),
        tie_cells=int(ties.sum()),
        undefined_cells=int(((labels == UNDEFINED) & ~ties).sum()),
        raster_vertices=count_raster_vertices(labels),
        total_cells=int(labels.size),
    )
    LOG.debug(f"Region stats: {stats.nonempty_pairs} non-empty pairs, {stats.raster_vertices} raster vertices")
    return stats


def stats_to_dict(raster: RasterDiagram, stats: RegionStats) -> dict:
    return {
        "spec": {"kind": raster.spec.kind.value, "c": raster.spec.c if raster.spec.uses_c else None},
        "mode": raster.mode.value,
        "n": raster.n_sites,
        "grid": {
            "width": raster.grid.width,
            "height": raster.grid.height,
            "bbox": list(raster.grid.bbox),
            "jitter": raster.grid.jitter,
        },
        "nonEmptyPairs": stats.nonempty_pairs,
        "tieCells": stats.tie_cells,
        "undefinedCells": stats.undefined_cells,
        "rasterVertices": stats.raster_vertices,
        "perPair": [
            {"i": r.pair.i, "j": r.pair.j, "cells": r.cells, "components": r.components}
            for r in stats.per_pair
            if r.cells
        ],
    }
