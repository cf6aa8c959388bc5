from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

import numpy as np

from config.Config import BBOX_INFLATION, BISITE_THREADS, DEFAULT_GRID_HEIGHT, DEFAULT_GRID_WIDTH, RASTER_CHUNK_ROWS, TIE_RTOL
from distances import DistanceSpec, SitePair, evaluate_many
from exceptions import EmptyCandidates
from geom_core import Point2
from logger.Logger import LOG
from utils.util import sites_array
from .candidates import candidate_pairs
from .models import UNDEFINED, GridSpec, Mode, RasterDiagram

# upper bound on evaluated (pair, cell) values held at once by one chunk
_MAX_CHUNK_VALUES = 1 << 21


def default_grid(
    sites: list[Point2],
    width: int = DEFAULT_GRID_WIDTH,
    height: int = DEFAULT_GRID_HEIGHT,
    inflation: float = BBOX_INFLATION,
    jitter: bool = True,
) -> GridSpec:
    """Site bbox inflated by `inflation` of its span per side; a flat axis borrows the larger span."""
    arr = sites_array(sites)
    lo, hi = arr.min(axis=0), arr.max(axis=0)
    spans = hi - lo
    big = float(spans.max()) or 1.0
    pad = [inflation * (float(s) if s > 0 else big) for s in spans]
    bbox = (float(lo[0] - pad[0]), float(lo[1] - pad[1]), float(hi[0] + pad[0]), float(hi[1] + pad[1]))
    return GridSpec(bbox=bbox, width=width, height=height, jitter=jitter)


def select_owners(values: np.ndarray, mode: Mode, rtol: float = TIE_RTOL):
    """
    Column-wise owner selection over a (P, M) value block.

    Returns (winner, tie, undefined): winner is the lowest candidate index
    attaining the optimum, tie marks columns where another candidate lies
    within rtol of it, undefined marks columns with no defined value.
    +inf loses every argmin and wins every argmax; two +inf values tie.
    """
    defined = ~np.isnan(values)
    undefined = ~defined.any(axis=0)
    with np.errstate(invalid="ignore"):
        return _select(values, defined, undefined, mode, rtol)


def _select(values, defined, undefined, mode, rtol):
    if mode is Mode.Nearest:
        key = np.where(defined, values, np.inf)
        winner = key.argmin(axis=0)
        best = key.min(axis=0)
        finite = np.isfinite(best)
        bound = np.where(finite, best + rtol * np.abs(best), np.inf)
        close = np.where(finite, key <= bound, (key == np.inf) & defined)
    else:
        key = np.where(defined, values, -np.inf)
        winner = key.argmax(axis=0)
        best = key.max(axis=0)
        finite = np.isfinite(best)
        bound = np.where(finite, best - rtol * np.abs(best), np.inf)
        close = np.where(finite, key >= bound, key == np.inf)
    tie = (close.sum(axis=0) >= 2) & ~undefined
    return winner, tie, undefined


def _pair_columns(sites: list[Point2], candidates: Sequence[SitePair]):
    arr = sites_array(sites)
    idx_i = np.array([p.i for p in candidates])
    idx_j = np.array([p.j for p in candidates])
    return (
        arr[idx_i, 0][:, None], arr[idx_i, 1][:, None],
        arr[idx_j, 0][:, None], arr[idx_j, 1][:, None],
    )


def evaluate_pairs(sites: list[Point2], spec: DistanceSpec, pairs: Sequence[SitePair], xs, ys) -> np.ndarray:
    """(len(pairs), len(xs)) block of distance values at scattered query points."""
    px, py, qx, qy = _pair_columns(sites, pairs)
    return evaluate_many(spec, np.asarray(xs, dtype=float), np.asarray(ys, dtype=float), px, py, qx, qy)


def compute_raster(
    sites: list[Point2],
    spec: DistanceSpec,
    mode: Mode,
    grid: GridSpec,
    candidates: Optional[Sequence[SitePair]] = None,
    threads: Optional[int] = None,
) -> RasterDiagram:
    """
    Label every grid cell with the candidate pair minimizing (Nearest) or
    maximizing (Furthest) the distance at the cell's sample point.

    Rows are evaluated in fixed-size chunks on a thread pool. Chunk boundaries
    depend only on the grid and candidate count, so the output is identical
    for every thread count.
    """
    if candidates is None:
        candidates = candidate_pairs(sites, spec, mode)
    candidates = tuple(candidates)
    if not candidates:
        raise EmptyCandidates("no candidate site pairs to evaluate")
    threads = threads or BISITE_THREADS

    px, py, qx, qy = _pair_columns(sites, candidates)
    xs, ys = grid.xs(), grid.ys()
    width, height = grid.width, grid.height

    labels = np.empty((height, width), dtype=np.int32)
    ties = np.zeros((height, width), dtype=bool)

    rows_per_chunk = max(1, min(RASTER_CHUNK_ROWS, _MAX_CHUNK_VALUES // (len(candidates) * width)))
    chunks = [(r0, min(height, r0 + rows_per_chunk)) for r0 in range(0, height, rows_per_chunk)]

    def work(chunk):
        r0, r1 = chunk
        vx = np.tile(xs, r1 - r0)
        vy = np.repeat(ys[r0:r1], width)
        values = evaluate_many(spec, vx, vy, px, py, qx, qy)
        winner, tie, undefined = select_owners(values, mode)
        labels[r0:r1] = np.where(undefined, UNDEFINED, winner).reshape(r1 - r0, width)
        ties[r0:r1] = tie.reshape(r1 - r0, width)

    if threads == 1:
        for chunk in chunks:
            work(chunk)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(work, chunks))

    LOG.info(
        f"Raster {spec.label()} {mode.value}: {len(sites)} sites, {len(candidates)} candidate pairs, "
        f"{grid.describe()} cells, {len(chunks)} chunks on {threads} threads"
    )
    return RasterDiagram(
        labels=labels,
        ties=ties,
        mode=mode,
        spec=spec,
        candidates=candidates,
        grid=grid,
        n_sites=len(sites),
    )
