from dataclasses import replace

import numpy as np

from distances import DistanceKind, DistanceSpec
from envelope_raster import Mode, all_pairs, evaluate_pairs, select_owners
from geom_core import Point2
from logger.Logger import LOG
from neighbor_structures import Hull, point_in_hull
from .models import Arrangement, Face

VIEW_ANGLE = DistanceSpec(kind=DistanceKind.ViewAngle)


def furthest_view_angle_owners(sites: list[Point2], xs, ys):
    """All site pairs, plus the furthest view-angle winner index and tie flag at each query point."""
    pairs = all_pairs(len(sites))
    values = evaluate_pairs(sites, VIEW_ANGLE, pairs, xs, ys)
    winner, tie, _ = select_owners(values, Mode.Furthest)
    return pairs, winner, tie


def label_outer_cells(arr: Arrangement, sites: list[Point2], hull: Hull) -> Arrangement:
    """
    Label every face whose representative point lies strictly outside the
    hull with the pair of maximum view angle there; inner faces stay unlabeled.
    Ties keep the lexicographically smallest pair and set Face.tie.
    """
    outer = [
        k for k, f in enumerate(arr.faces)
        if not point_in_hull(sites, hull, *f.representative)
    ]
    faces = list(arr.faces)
    if outer:
        xs = np.array([arr.faces[k].representative[0] for k in outer])
        ys = np.array([arr.faces[k].representative[1] for k in outer])
        pairs, winner, tie = furthest_view_angle_owners(sites, xs, ys)
        for slot, k in enumerate(outer):
            faces[k] = replace(faces[k], label=pairs[int(winner[slot])], tie=bool(tie[slot]))
    ties = sum(1 for f in faces if f.tie)
    LOG.debug(f"Labeled {len(outer)} of {len(faces)} faces outside the hull ({ties} ties)")
    return replace(arr, faces=tuple(faces))


def face_interior_samples(face: Face, count: int, rng: np.random.Generator) -> np.ndarray:
    """Random strictly interior points: positive convex combinations of the face polygon."""
    poly = np.array(face.polygon, dtype=float)
    weights = rng.dirichlet(np.ones(len(poly)), size=count)
    return weights @ poly
