"""
Incremental construction of a line arrangement.

Vertices are the pairwise intersections (merged within a tolerance), edges are
the pieces of each line between consecutive vertices, and faces are built by
splitting a large box with one line at a time; every face of the arrangement
meets the box in exactly one convex polygon because the box strictly contains
all vertices.
"""
from itertools import combinations
from typing import Optional

import numpy as np

from config.Config import ARRANGEMENT_MERGE_TOL
from geom_core import Point2
from logger.Logger import LOG
from neighbor_structures import Hull
from distances import SitePair
from .models import Arrangement, Edge, Face, Line, Vertex

_PARALLEL_EPS = 1e-12


def hull_supporting_lines(sites: list[Point2], hull: Hull) -> list[Line]:
    return [Line.through(sites[a], sites[b], SitePair.of(a, b)) for a, b in hull.edges()]


def _intersect(l1: Line, l2: Line) -> Optional[tuple[float, float]]:
    det = l1.a * l2.b - l2.a * l1.b
    if abs(det) < _PARALLEL_EPS:
        return None
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l2.a * l1.c - l1.a * l2.c) / det
    return x, y


def _merge_vertices(lines: list[Line], tol: float) -> list[Vertex]:
    points: list[list[float]] = []
    members: list[set[int]] = []
    witnesses: list[tuple[int, int]] = []
    for i, j in combinations(range(len(lines)), 2):
        hit = _intersect(lines[i], lines[j])
        if hit is None:
            continue
        for v, (vx, vy) in enumerate(points):
            if abs(vx - hit[0]) <= tol and abs(vy - hit[1]) <= tol:
                members[v].update((i, j))
                break
        else:
            points.append(list(hit))
            members.append({i, j})
            witnesses.append((i, j))
    return [
        Vertex(point=(p[0], p[1]), lines=frozenset(m), witness=w)
        for p, m, w in zip(points, members, witnesses)
    ]


def _edges(lines: list[Line], vertices: list[Vertex]) -> list[Edge]:
    edges = []
    for li, line in enumerate(lines):
        dx, dy = line.direction()
        on_line = sorted(
            (vi for vi, v in enumerate(vertices) if li in v.lines),
            key=lambda vi: vertices[vi].point[0] * dx + vertices[vi].point[1] * dy,
        )
        stops: list[Optional[int]] = [None] + on_line + [None]
        for s, e in zip(stops, stops[1:]):
            edges.append(Edge(line=li, start=s, end=e))
    return edges


def _box(lines: list[Line], vertices: list[Vertex], include) -> tuple[float, float, float, float]:
    pts = [v.point for v in vertices] + [tuple(p) for p in include]
    if not pts:
        pts = [(0.0, 0.0)]
    arr = np.array(pts, dtype=float)
    center = arr.mean(axis=0)
    # a point of every line, so lines without vertices still cross the box
    feet = [(center[0] - l.a * l.side(*center), center[1] - l.b * l.side(*center)) for l in lines]
    arr = np.vstack([arr, np.array(feet, dtype=float).reshape(-1, 2)])
    lo, hi = arr.min(axis=0), arr.max(axis=0)
    margin = max(1.0, float((hi - lo).max()))
    return float(lo[0] - margin), float(lo[1] - margin), float(hi[0] + margin), float(hi[1] + margin)


def _split(polygon: list[tuple[float, float]], line: Line, tol: float):
    """Split a convex polygon by a line; returns (negative part, positive part) or None."""
    sides = [line.side(x, y) for x, y in polygon]
    if max(sides) <= tol or min(sides) >= -tol:
        return None
    neg, pos = [], []
    n = len(polygon)
    for t in range(n):
        p, q = polygon[t], polygon[(t + 1) % n]
        sp, sq = sides[t], sides[(t + 1) % n]
        if sp <= tol:
            neg.append(p)
        if sp >= -tol:
            pos.append(p)
        if (sp < -tol and sq > tol) or (sp > tol and sq < -tol):
            w = sp / (sp - sq)
            cut = (p[0] + w * (q[0] - p[0]), p[1] + w * (q[1] - p[1]))
            neg.append(cut)
            pos.append(cut)
    return neg, pos


def _centroid(polygon) -> tuple[float, float]:
    """Area centroid from a triangle fan rooted at the first vertex."""
    x0, y0 = polygon[0]
    area = cx = cy = 0.0
    for (x1, y1), (x2, y2) in zip(polygon[1:], polygon[2:]):
        a = ((x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)) / 2.0
        area += a
        cx += a * (x0 + x1 + x2) / 3.0
        cy += a * (y0 + y1 + y2) / 3.0
    if area == 0.0:
        return float(np.mean([p[0] for p in polygon])), float(np.mean([p[1] for p in polygon]))
    return cx / area, cy / area


def sign_vector(lines, x: float, y: float) -> tuple[int, ...]:
    return tuple(int(np.sign(l.side(x, y))) for l in lines)


def build_arrangement(lines: list[Line], include=(), tol: float = ARRANGEMENT_MERGE_TOL) -> Arrangement:
    lines = list(lines)
    if not lines:
        raise ValueError("an arrangement needs at least one line")

    vertices = _merge_vertices(lines, tol)
    edges = _edges(lines, vertices)
    box = _box(lines, vertices, include)
    xmin, ymin, xmax, ymax = box
    split_tol = 1e-12 * max(xmax - xmin, ymax - ymin)

    polygons = [[(xmin, ymin), (xmax, ymin), (xmax, ymax), (xmin, ymax)]]
    for line in lines:
        nxt = []
        for poly in polygons:
            parts = _split(poly, line, split_tol)
            if parts is None:
                nxt.append(poly)
            else:
                nxt.extend(parts)
        polygons = nxt

    faces = []
    for poly in polygons:
        rep = _centroid(poly)
        on_box = any(
            abs(x - xmin) <= split_tol or abs(x - xmax) <= split_tol or abs(y - ymin) <= split_tol or abs(y - ymax) <= split_tol
            for x, y in poly
        )
        signs = sign_vector(lines, *rep)
        faces.append(Face(polygon=tuple(poly), representative=rep, signs=signs, bounded=not on_box))

    arr = Arrangement(
        lines=tuple(lines),
        vertices=tuple(vertices),
        edges=tuple(edges),
        faces=tuple(faces),
        box=box,
    )
    LOG.debug(
        f"Arrangement of {len(lines)} lines: {len(vertices)} vertices, {len(edges)} edges, {len(faces)} faces"
    )
    return arr


def _codes(signs: np.ndarray) -> np.ndarray:
    """Base-3 code of sign vectors along the last axis."""
    powers = 3 ** np.arange(signs.shape[-1], dtype=np.int64)
    return ((signs.astype(np.int64) + 1) * powers).sum(axis=-1)


def locate_faces(arr: Arrangement, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Face index of each query point by sign vector; -1 for points on a line."""
    xs, ys = np.asarray(xs, dtype=float), np.asarray(ys, dtype=float)
    signs = np.stack([np.sign(l.side(xs, ys)) for l in arr.lines], axis=-1)
    codes = _codes(signs)

    face_codes = _codes(np.array([f.signs for f in arr.faces]))
    order = np.argsort(face_codes)
    sorted_codes = face_codes[order]
    pos = np.clip(np.searchsorted(sorted_codes, codes), 0, len(sorted_codes) - 1)
    return np.where(sorted_codes[pos] == codes, order[pos], -1)


def distance_to_lines(arr: Arrangement, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Distance to the union of all arrangement edges (every edge lies on a line; lines are unit-normal)."""
    xs, ys = np.asarray(xs, dtype=float), np.asarray(ys, dtype=float)
    return np.min(np.stack([np.abs(l.side(xs, ys)) for l in arr.lines]), axis=0)
