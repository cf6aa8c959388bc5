from .structures import AntipodalPairs, Hull, Triangulation
from .hull import check_distinct, convex_hull, point_in_hull
from .delaunay import delaunay, is_delaunay_edge_brute_force
from .antipodal import antipodal_pairs, antipodal_pairs_brute_force
from .proximity import ClosestNeighbor, ClosestPair, closest_neighbors, closest_pair, diameter
