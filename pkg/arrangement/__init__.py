from .models import Arrangement, Edge, Face, Line, Vertex
from .builder import build_arrangement, distance_to_lines, hull_supporting_lines, locate_faces, sign_vector
from .labeling import face_interior_samples, furthest_view_angle_owners, label_outer_cells
from .svg import arrangement_to_svg, write_svg
