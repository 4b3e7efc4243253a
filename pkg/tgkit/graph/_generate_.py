"""
Date: 261018

{Description: named rotation graphs and an exhaustive generator of small sphere-embedded
3-valent graphs. The generator starts from the theta-graph and repeatedly joins two points
on the boundary of one facet by a new edge, keeping one embedding per isomorphism class}
"""

from __future__ import annotations

import logging
from typing import Dict, Iterator, List, Tuple

from tgkit.graph._rotation_ import RotationGraph, build_rotation_graph, from_neighbor_rotations
from tgkit.graph._faces_ import validate_nice

logger = logging.getLogger(__name__)

# named graphs

def theta_graph() -> RotationGraph:
    """Two vertices joined by three edges, with opposite cyclic orders"""
    return build_rotation_graph(2, [[0, 1, 2], [3, 5, 4]], [[0, 3], [1, 4], [2, 5]])

def k4_graph() -> RotationGraph:
    """The tetrahedron, vertex 0 in the middle of the triangle 1 2 3"""
    return from_neighbor_rotations([[1, 2, 3], [2, 0, 3], [3, 0, 1], [1, 0, 2]])

def prism_graph() -> RotationGraph:
    """Triangular prism: inner triangle 0 1 2, outer triangle 3 4 5, spokes i -- i+3"""
    inner = [[i + 3, (i + 1) % 3, (i + 2) % 3] for i in range(3)]
    outer = [[(i + 1) % 3 + 3, i, (i + 2) % 3 + 3] for i in range(3)]
    return from_neighbor_rotations(inner + outer)

def cube_graph() -> RotationGraph:
    """Vertex v = (x, y, z) as bits, neighbours v ^ 1, v ^ 2, v ^ 4"""
    neighbors = []
    for v in range(8):
        order = [1, 2, 4] if bin(v).count('1') % 2 == 0 else [1, 4, 2]
        neighbors.append([v ^ bit for bit in order])
    return from_neighbor_rotations(neighbors)

def sb_graph() -> RotationGraph:
    """Two double edges 0=1 and 2=3 joined by the single edges 0-2 and 1-3

    Darts 0-3 are the double edge at 0 1, darts 8-11 the double edge at 2 3,
    darts 4 5 and 6 7 the single edges.
    """
    rotations = [[4, 0, 2], [6, 3, 1], [5, 8, 10], [11, 9, 7]]
    edges = [[0, 1], [2, 3], [4, 5], [6, 7], [8, 9], [10, 11]]
    return build_rotation_graph(4, rotations, edges)

# canonical form

def _code_from(g, start, turn):
    label = {start: 0}
    order = [start]
    i = 0
    while i < len(order):
        d = order[i]
        for x in (g.twin_of[d], turn[d]):
            if x not in label:
                label[x] = len(order)
                order.append(x)
        i += 1
    return tuple((label[g.twin_of[d]], label[turn[d]]) for d in order)

def canonical_code(g: RotationGraph) -> Tuple:
    """Equal for two rotation graphs iff they are isomorphic as embeddings, up to reflection"""
    pred = [0] * g.dart_count
    for d in g.darts:
        pred[g.succ_of[d]] = d
    size = [len(g.faces[g.face_of[d]]) for d in g.darts]
    # only darts with the smallest (face, twin face) sizes can start the minimal code
    starts = [(d, g.succ_of, (size[d], size[g.twin_of[d]])) for d in g.darts]
    starts += [(d, pred, (size[g.twin_of[d]], size[d])) for d in g.darts]
    best_key = min(key for _, _, key in starts)
    return (g.vertex_count, min(_code_from(g, d, turn) for d, turn, key in starts if key == best_key))

# edge insertion

def _insert_edge(g: RotationGraph, di: int, dj: int) -> RotationGraph:
    rot = [list(r) for r in g.rotations]
    twin = list(g.twin_of)

    # put a new vertex on the edge of d; d now ends there and the open dart c points into the facet of d
    def subdivide(d):
        a, b, c = len(twin), len(twin) + 1, len(twin) + 2
        td = twin[d]
        twin.extend([d, td, None])
        twin[d], twin[td] = a, b
        rot.append([a, c, b])
        return c, b

    if di == dj:
        c1, b1 = subdivide(di)
        c2, _ = subdivide(b1)
    else:
        c1, _ = subdivide(di)
        c2, _ = subdivide(dj)
    twin[c1], twin[c2] = c2, c1
    return RotationGraph(rot, twin)

def _insertions(g: RotationGraph) -> Iterator[RotationGraph]:
    for f in g.faces:
        for i in range(len(f.darts)):
            for j in range(i, len(f.darts)):
                yield _insert_edge(g, f.darts[i], f.darts[j])

def generate_rotation_graphs(max_vertices: int, nice_only: bool = False) -> List[RotationGraph]:
    """All bridgeless sphere rotation graphs with at most max_vertices vertices

    One embedding per isomorphism class up to reflection, ordered by vertex count and
    then by canonical code.

    Parameters
    ----------
        max_vertices : int
            largest vertex count to produce
        nice_only : bool
            keep only graphs passing validate_nice
    Returns
    -------
    list of RotationGraph
    """
    assert max_vertices >= 2, "the smallest 3-valent graph has 2 vertices"
    level: Dict[Tuple, RotationGraph] = {}
    theta = theta_graph()
    level[canonical_code(theta)] = theta
    out = []
    n = 2
    while True:
        out.extend(level[c] for c in sorted(level))
        logger.debug("%d rotation graphs with %d vertices", len(level), n)
        if n + 2 > max_vertices:
            break
        following: Dict[Tuple, RotationGraph] = {}
        for g in level.values():
            for h in _insertions(g):
                following.setdefault(canonical_code(h), h)
        level = following
        n += 2
    if nice_only:
        out = [g for g in out if validate_nice(g)[0]]
    return out
