from tgkit.graph._rotation_ import RotationGraph, Facet, build_rotation_graph, facets, from_neighbor_rotations
from tgkit.graph._faces_ import validate_nice, face_poset, FacePoset, Face
from tgkit.graph._connectivity_ import is_k_connected, separating_pairs, two_edge_cuts, components_without_edges
from tgkit.graph._generate_ import theta_graph, k4_graph, prism_graph, cube_graph, sb_graph
from tgkit.graph._generate_ import generate_rotation_graphs, canonical_code
