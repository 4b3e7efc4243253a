from tgkit.formats._json_ import graph_to_dict, graph_from_dict, torus_graph_to_dict, torus_graph_from_dict
from tgkit.formats._json_ import characteristic_to_dict, characteristic_from_dict, record_to_dict, record_from_dict
from tgkit.formats._json_ import leaf_to_dict, leaf_from_dict, tree_to_dict, tree_from_dict
from tgkit.formats._json_ import loads, dumps, read_json, write_json, read_graph, read_torus_graph, parse_with
from tgkit.formats._dot_ import graph_to_dot, torus_graph_to_dot, tree_to_dot
