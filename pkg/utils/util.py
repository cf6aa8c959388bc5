import hashlib

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial import cKDTree

from geom_core import Point2
from logger.Logger import LOG


def sha256_hex(s: str) -> str:
    return hashlib.sha256(s.encode("utf-8")).hexdigest()


def retry(func, *args, retries=3, retry_on=(Exception,), **kwargs):
    """Simple retry helper; func receives the attempt number as `attempt`."""
    attempt = 0
    while True:
        try:
            return func(*args, attempt=attempt, **kwargs)
        except retry_on as e:
            attempt += 1
            if attempt > retries:
                raise
            LOG.warning(f"Attempt {attempt} of {func.__name__} failed: {str(e)} - retrying")


def to_points(coords) -> list[Point2]:
    return [Point2(float(x), float(y)) for x, y in coords]


def sites_array(sites: list[Point2]) -> np.ndarray:
    return np.array([[s.x, s.y] for s in sites], dtype=float).reshape(-1, 2)


def count_distinct_points(points, tol: float, scale_reference=None) -> int:
    """
    Number of clusters of points closer than tol, after normalizing coordinates
    to the unit box of scale_reference (defaults to the points themselves).
    """
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if len(pts) == 0:
        return 0
    ref = pts if scale_reference is None else np.asarray(scale_reference, dtype=float).reshape(-1, 2)
    lo = ref.min(axis=0)
    span = float(np.max(ref.max(axis=0) - lo)) or 1.0
    normalized = (pts - lo) / span
    pairs = cKDTree(normalized).query_pairs(r=tol, output_type="ndarray")
    if len(pairs) == 0:
        return len(pts)
    graph = coo_matrix((np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])), shape=(len(pts), len(pts)))
    n_components, _ = connected_components(graph, directed=False)
    return int(n_components)
