"""
Date: 261018

{Description: JSON documents for rotation graphs, torus graphs, characteristic data,
gluing records and decomposition trees. Integers may be given as decimal strings}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict

from tgkit._errors_ import ParseError
from tgkit.classify import DecompositionTree, Leaf, LEAF_KINDS
from tgkit.graph import RotationGraph, build_rotation_graph
from tgkit.lattice import LatticeCovector, LatticeVector, SignClass
from tgkit.surgery import GluingRecord
from tgkit.torus import CharacteristicData, TorusGraph

# reading helpers

def _int(x, what):
    if isinstance(x, bool):
        raise ParseError("%s: expected an integer, got %r" % (what, x))
    if isinstance(x, int):
        return x
    if isinstance(x, str) and x.strip().lstrip('+-').isdigit():
        return int(x)
    raise ParseError("%s: expected an integer, got %r" % (what, x))

def _field(doc, key, what):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError("%s: missing field %r" % (what, key))
    return doc[key]

def _list(x, what, length=None):
    if not isinstance(x, list) or (length is not None and len(x) != length):
        raise ParseError("%s: expected a list%s" % (what, "" if length is None else " of %d" % length))
    return x

def _triple(x, what):
    return tuple(_int(c, what) for c in _list(x, what, 3))

def _opt_int(x, what):
    return None if x is None else _int(x, what)

# rotation graphs

def graph_to_dict(g: RotationGraph) -> Dict[str, Any]:
    return {'vertices': g.vertex_count,
            'rotations': [list(r) for r in g.rotations],
            'edges': [[d, t] for d, t in g.edges()]}

def graph_from_dict(doc) -> RotationGraph:
    n = _int(_field(doc, 'vertices', 'graph'), 'graph.vertices')
    rotations = [[_int(d, 'graph.rotations') for d in _list(r, 'graph.rotations')]
                 for r in _list(_field(doc, 'rotations', 'graph'), 'graph.rotations')]
    edges = [[_int(d, 'graph.edges') for d in _list(e, 'graph.edges', 2)]
             for e in _list(_field(doc, 'edges', 'graph'), 'graph.edges')]
    return build_rotation_graph(n, rotations, edges)

# torus graphs

def torus_graph_to_dict(tg: TorusGraph) -> Dict[str, Any]:
    doc = graph_to_dict(tg.graph)
    doc['axial'] = {str(d): list(a) for d, a in enumerate(tg.axial)}
    if tg.sigma is not None:
        doc['sigma'] = {str(v): s for v, s in enumerate(tg.sigma)}
    return doc

def torus_graph_from_dict(doc) -> TorusGraph:
    g = graph_from_dict(doc)
    axial_doc = _field(doc, 'axial', 'torus graph')
    if not isinstance(axial_doc, dict):
        raise ParseError("axial: expected an object keyed by dart")
    axial = {_int(k, 'axial key'): LatticeCovector(_triple(v, 'axial[%s]' % k)) for k, v in axial_doc.items()}
    if set(axial) != set(g.darts):
        raise ParseError("axial: labels for darts %s, graph has darts 0..%d" % (sorted(axial), g.dart_count - 1))
    sigma = None
    if doc.get('sigma') is not None:
        sigma_doc = doc['sigma']
        if not isinstance(sigma_doc, dict):
            raise ParseError("sigma: expected an object keyed by vertex")
        values = {_int(k, 'sigma key'): _int(v, 'sigma[%s]' % k) for k, v in sigma_doc.items()}
        if set(values) != set(g.vertices) or not set(values.values()) <= {1, -1}:
            raise ParseError("sigma: need +1 or -1 for every vertex")
        sigma = [values[v] for v in g.vertices]
    return TorusGraph(g, [axial[d] for d in g.darts], sigma)

# characteristic data

def characteristic_to_dict(g: RotationGraph, lam: CharacteristicData) -> Dict[str, Any]:
    return {'graph': graph_to_dict(g),
            'oriented': lam.oriented,
            'lambda': [list(lam.vector(i)) for i in range(len(lam))]}

def characteristic_from_dict(doc):
    """(RotationGraph, CharacteristicData); with "oriented": false the values are sign classes"""
    g = graph_from_dict(_field(doc, 'graph', 'characteristic data'))
    vectors = [LatticeVector(_triple(v, 'lambda')) for v in _list(_field(doc, 'lambda', 'characteristic data'), 'lambda')]
    if len(vectors) != len(g.faces):
        raise ParseError("lambda: %d vectors for %d facets" % (len(vectors), len(g.faces)))
    if not doc.get('oriented', True):
        try:
            return g, CharacteristicData(tuple(SignClass(v) for v in vectors))
        except ValueError as err:
            raise ParseError("lambda: %s" % err) from err
    return g, CharacteristicData(tuple(vectors))

# surgery records and trees

def record_to_dict(rec: GluingRecord) -> Dict[str, Any]:
    return {'p': rec.p, 'q': rec.q,
            'labels_p': [list(a) for a in rec.labels_p],
            'labels_q': [list(a) for a in rec.labels_q],
            'sigma_p': rec.sigma_p, 'sigma_q': rec.sigma_q,
            'new_edges': [list(e) for e in rec.new_edges],
            'new_labels': [[list(a), list(b)] for a, b in rec.new_labels],
            'left_map': list(rec.left_map), 'right_map': list(rec.right_map)}

def record_from_dict(doc) -> GluingRecord:
    f = lambda key: _field(doc, key, 'record')
    return GluingRecord(
        p=_int(f('p'), 'record.p'), q=_int(f('q'), 'record.q'),
        labels_p=tuple(LatticeCovector(_triple(a, 'record.labels_p')) for a in _list(f('labels_p'), 'labels_p', 3)),
        labels_q=tuple(LatticeCovector(_triple(a, 'record.labels_q')) for a in _list(f('labels_q'), 'labels_q', 3)),
        sigma_p=_int(f('sigma_p'), 'record.sigma_p'), sigma_q=_int(f('sigma_q'), 'record.sigma_q'),
        new_edges=tuple(tuple(_int(d, 'record.new_edges') for d in _list(e, 'new_edges', 2))
                        for e in _list(f('new_edges'), 'new_edges', 3)),
        new_labels=tuple(tuple(LatticeCovector(_triple(a, 'record.new_labels')) for a in _list(pair, 'new_labels', 2))
                         for pair in _list(f('new_labels'), 'new_labels', 3)),
        left_map=tuple(_opt_int(v, 'record.left_map') for v in _list(f('left_map'), 'left_map')),
        right_map=tuple(_opt_int(v, 'record.right_map') for v in _list(f('right_map'), 'right_map')))

def leaf_to_dict(leaf: Leaf) -> Dict[str, Any]:
    doc = {'kind': leaf.kind, 'vertices': leaf.vertex_count, 'witness': torus_graph_to_dict(leaf.witness)}
    if leaf.params is not None:
        doc['params'] = dict(zip(('eps', 'a', 'b'), leaf.params))
    if leaf.basis is not None:
        doc['basis'] = [list(a) for a in leaf.basis]
    return doc

def leaf_from_dict(doc) -> Leaf:
    kind = _field(doc, 'kind', 'leaf')
    if kind not in LEAF_KINDS:
        raise ParseError("leaf: unknown kind %r" % (kind,))
    params = doc.get('params')
    if params is not None:
        params = tuple(_int(_field(params, k, 'leaf.params'), 'leaf.params.' + k) for k in ('eps', 'a', 'b'))
    basis = doc.get('basis')
    if basis is not None:
        basis = tuple(LatticeCovector(_triple(a, 'leaf.basis')) for a in _list(basis, 'leaf.basis', 3))
    return Leaf(kind, torus_graph_from_dict(_field(doc, 'witness', 'leaf')), params=params, basis=basis)

def tree_to_dict(tree: DecompositionTree) -> Dict[str, Any]:
    if tree.is_leaf:
        return {'leaf': leaf_to_dict(tree.leaf)}
    return {'node': {'record': record_to_dict(tree.record),
                     'left': tree_to_dict(tree.left),
                     'right': tree_to_dict(tree.right)}}

def tree_from_dict(doc) -> DecompositionTree:
    if isinstance(doc, dict) and 'leaf' in doc:
        return DecompositionTree(leaf=leaf_from_dict(doc['leaf']))
    node = _field(doc, 'node', 'tree')
    return DecompositionTree(left=tree_from_dict(_field(node, 'left', 'node')),
                             right=tree_from_dict(_field(node, 'right', 'node')),
                             record=record_from_dict(_field(node, 'record', 'node')))

# files

def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError("not a JSON document: %s" % err) from err

def read_json(path) -> Any:
    return loads(Path(path).read_text(encoding='utf-8'))

def dumps(doc, indent=2) -> str:
    return json.dumps(doc, indent=indent)

def write_json(doc, path) -> None:
    Path(path).write_text(dumps(doc) + "\n", encoding='utf-8')

def read_torus_graph(path) -> TorusGraph:
    return torus_graph_from_dict(read_json(path))

def read_graph(path) -> RotationGraph:
    return graph_from_dict(read_json(path))

def parse_with(parser, doc):
    """Run a *_from_dict parser; structural problems of the decoded data become ParseErrors too"""
    try:
        return parser(doc)
    except (AssertionError, KeyError, TypeError) as err:
        raise ParseError("malformed document: %s" % err) from err
