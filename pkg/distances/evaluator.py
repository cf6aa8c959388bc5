"""
Evaluation of the eight 2-site distance functions.

`evaluate` is the scalar reference used by the verification checks; it takes
its collinearity decisions from the exact orientation predicate.
`evaluate_many` is the numpy fast path used for rasters and batch sampling;
undefined values come back as NaN and infinite values as +inf.
"""
import math

import numpy as np

from config.Config import RIGHT_ANGLE_RTOL
from exceptions import CoincidentSites
from geom_core import (
    Orientation,
    Point2,
    circumcircle,
    min_enclosing_circle_3,
    orient,
    point_segment_distance,
    triangle_area,
)
from .DistanceSpec import DistanceKind, DistanceSpec, DistanceValue

_UNDEFINED_AT_SITES = {
    DistanceKind.Circumradius,
    DistanceKind.ViewAngle,
    DistanceKind.CccSegmentDist,
    DistanceKind.CccArea,
    DistanceKind.CccPerimeter,
}

_KIND_NAMES = {kind.value: kind for kind in DistanceKind}


def parse_kind(name: str) -> DistanceKind:
    try:
        return _KIND_NAMES[name.strip().lower()]
    except KeyError:
        raise ValueError(f"Unknown distance kind '{name}'; expected one of {', '.join(_KIND_NAMES)}")


def _view_angle(v: Point2, p: Point2, q: Point2) -> float:
    dot = (p.x - v.x) * (q.x - v.x) + (p.y - v.y) * (q.y - v.y)
    if orient(v, p, q) is Orientation.Collinear:
        # on the line: pi strictly between p and q, 0 beyond
        return math.pi if dot < 0 else 0.0
    # acos of the cosine loses precision near 0 and pi
    cross = (p.x - v.x) * (q.y - v.y) - (p.y - v.y) * (q.x - v.x)
    return math.atan2(abs(cross), dot)


def evaluate(spec: DistanceSpec, v: Point2, p: Point2, q: Point2) -> DistanceValue:
    if p == q:
        raise CoincidentSites(f"site pair must be two distinct points, got {p} twice")

    kind = spec.kind
    at_site = v == p or v == q
    if at_site and kind in _UNDEFINED_AT_SITES:
        return DistanceValue.undefined()

    if kind is DistanceKind.Circumradius:
        area = triangle_area(v, p, q)
        if area == 0.0:
            return DistanceValue(value=math.inf)
        rad2 = v.dist2(p) * v.dist2(q) * p.dist2(q) / (16.0 * area * area)
        return DistanceValue(value=math.sqrt(rad2))

    if kind is DistanceKind.ContainingRadius:
        return DistanceValue(value=min_enclosing_circle_3(v, p, q).radius)

    if kind is DistanceKind.ViewAngle:
        return DistanceValue(value=_view_angle(v, p, q))

    if kind is DistanceKind.InscribedRadius:
        if at_site:
            return DistanceValue(value=0.0)
        perimeter = v.dist(p) + v.dist(q) + p.dist(q)
        return DistanceValue(value=2.0 * triangle_area(v, p, q) / perimeter)

    if kind is DistanceKind.ParamPerimeter:
        return DistanceValue(value=max(0.0, v.dist(p) + v.dist(q) + spec.c * p.dist(q)))

    # circumcenter-based kinds
    circle = circumcircle(v, p, q)
    if circle.degenerate:
        return DistanceValue(value=math.inf)
    o = circle.center
    if kind is DistanceKind.CccSegmentDist:
        return DistanceValue(value=point_segment_distance(o, p, q))
    if kind is DistanceKind.CccArea:
        return DistanceValue(value=triangle_area(o, p, q))
    return DistanceValue(value=o.dist(p) + o.dist(q) + p.dist(q))


def view_angle_key(v: Point2, p: Point2, q: Point2) -> float:
    """-cos(angle pvq): orders view angles the same way the angles themselves do."""
    dot = (p.x - v.x) * (q.x - v.x) + (p.y - v.y) * (q.y - v.y)
    return -dot / (v.dist(p) * v.dist(q))


def evaluate_many(spec: DistanceSpec, vx, vy, px, py, qx, qy) -> np.ndarray:
    """
    Broadcasting evaluation: query coordinates (vx, vy) against pair
    coordinates (px, py, qx, qy). Typical shapes are (W,) for the queries and
    (P, 1) for the pairs, giving a (P, W) result.
    """
    vx, vy = np.asarray(vx, dtype=float), np.asarray(vy, dtype=float)
    px, py = np.asarray(px, dtype=float), np.asarray(py, dtype=float)
    qx, qy = np.asarray(qx, dtype=float), np.asarray(qy, dtype=float)
    kind = spec.kind

    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        bx, by = px - vx, py - vy
        cx, cy = qx - vx, qy - vy
        vp2 = bx * bx + by * by
        vq2 = cx * cx + cy * cy
        pq2 = (qx - px) ** 2 + (qy - py) ** 2
        vp, vq, pq = np.sqrt(vp2), np.sqrt(vq2), np.sqrt(pq2)
        cross = bx * cy - by * cx
        at_site = (vp2 == 0.0) | (vq2 == 0.0)

        if kind is DistanceKind.ParamPerimeter:
            out = np.maximum(0.0, vp + vq + spec.c * pq)

        elif kind is DistanceKind.InscribedRadius:
            out = np.abs(cross) / (vp + vq + pq)

        elif kind is DistanceKind.ViewAngle:
            out = np.arctan2(np.abs(cross), bx * cx + by * cy)

        elif kind is DistanceKind.Circumradius:
            out = np.where(cross == 0.0, np.inf, vp * vq * pq / (2.0 * np.abs(cross)))

        elif kind is DistanceKind.ContainingRadius:
            longest = np.maximum(np.maximum(vp2, vq2), pq2)
            rest = vp2 + vq2 + pq2 - longest
            on_edge = (longest > rest * (1.0 + RIGHT_ANGLE_RTOL)) | (cross == 0.0) | at_site
            circum = vp * vq * pq / (2.0 * np.abs(cross))
            out = np.where(on_edge, np.sqrt(longest) / 2.0, circum)

        else:
            d = 2.0 * cross
            ux = (cy * vp2 - by * vq2) / d
            uy = (bx * vq2 - cx * vp2) / d
            ox, oy = vx + ux, vy + uy
            if kind is DistanceKind.CccSegmentDist:
                sx, sy = qx - px, qy - py
                t = np.clip(((ox - px) * sx + (oy - py) * sy) / pq2, 0.0, 1.0)
                out = np.hypot(ox - (px + t * sx), oy - (py + t * sy))
            elif kind is DistanceKind.CccArea:
                out = np.abs((px - ox) * (qy - oy) - (py - oy) * (qx - ox)) / 2.0
            else:
                out = np.hypot(px - ox, py - oy) + np.hypot(qx - ox, qy - oy) + pq
            out = np.where(cross == 0.0, np.inf, out)

        if kind in _UNDEFINED_AT_SITES:
            out = np.where(at_site, np.nan, out)
        elif kind is DistanceKind.InscribedRadius:
            out = np.where(at_site, 0.0, out)

    return np.asarray(out, dtype=float)


def view_angle_key_many(vx, vy, px, py, qx, qy) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore"):
        bx, by = px - vx, py - vy
        cx, cy = qx - vx, qy - vy
        return -(bx * cx + by * cy) / (np.hypot(bx, by) * np.hypot(cx, cy))
