from tgkit.torus._characteristic_ import CharacteristicData, is_characteristic, lift_signs, omniorientations
from tgkit.torus._torus_graph_ import TorusGraph, Connection, compute_connection, validate_torus_graph
from tgkit.torus._torus_graph_ import from_characteristic, recover_characteristic
from tgkit.torus._torus_graph_ import synthesize_orientation, orientation_from_embedding, flip_orientation
from tgkit.torus._equivalence_ import Isomorphism, is_equivalent
from tgkit.torus._subgraphs_ import Subgraph, face_subgraphs, poset_agrees
from tgkit.torus._families_ import sphere_graph, simplex_graph, sb_torus_graph, cube_torus_graph, simplex_sb_simplex_graph
