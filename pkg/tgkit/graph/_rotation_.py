"""
Date: 261018

{Description: 3-valent graphs embedded in the 2-sphere by a rotation system.
Darts are the integers 0..3V-1, dart d leaves vertex tail(d) and its reverse is twin(d).
The rotation at a vertex is the cyclic order of its three darts; face walks follow
d -> succ(twin(d)) and give the facets of the orbit space}
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Sequence, Tuple

import networkx as nx

from tgkit._errors_ import NotTrivalent, Disconnected, NotSphere, InvalidInput

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class Facet:
    """A face walk: darts in walk order and the tail vertex of each dart"""
    darts: Tuple[int, ...]
    vertices: Tuple[int, ...]

    @property
    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(self.vertices)

    def __len__(self):
        return len(self.darts)

class RotationGraph():

    # rotations[v] is the cyclic order of darts at v, twin[d] is the reversed dart
    def __init__(self, rotations: Sequence[Sequence[int]], twin: Sequence[int]):
        self.rotations = tuple(tuple(r) for r in rotations)
        self.twin_of = tuple(twin)
        tail, succ = {}, {}
        for v, rot in enumerate(self.rotations):
            for i, d in enumerate(rot):
                tail[d] = v
                succ[d] = rot[(i + 1) % len(rot)]
        self.tail_of = tuple(tail[d] for d in range(len(self.twin_of)))
        self.succ_of = tuple(succ[d] for d in range(len(self.twin_of)))

    def __eq__(self, other):
        return isinstance(other, RotationGraph) and (self.rotations, self.twin_of) == (other.rotations, other.twin_of)

    def __hash__(self):
        return hash((self.rotations, self.twin_of))

    def __repr__(self):
        return "RotationGraph(V=%d, E=%d)" % (self.vertex_count, self.edge_count)

    @property
    def vertex_count(self):
        return len(self.rotations)

    @property
    def dart_count(self):
        return len(self.twin_of)

    @property
    def edge_count(self):
        return len(self.twin_of) // 2

    @property
    def vertices(self):
        return range(self.vertex_count)

    @property
    def darts(self):
        return range(self.dart_count)

    def tail(self, d):
        return self.tail_of[d]

    def head(self, d):
        return self.tail_of[self.twin_of[d]]

    def twin(self, d):
        return self.twin_of[d]

    def succ(self, d):
        return self.succ_of[d]

    def darts_at(self, v):
        return self.rotations[v]

    def edge_id(self, d):
        """Undirected edges are named by their smaller dart"""
        return min(d, self.twin_of[d])

    def edges(self) -> List[Tuple[int, int]]:
        return [(d, self.twin_of[d]) for d in self.darts if d < self.twin_of[d]]

    def endpoints(self, e):
        return self.tail(e), self.head(e)

    def neighbors(self, v):
        return [self.head(d) for d in self.rotations[v]]

    def darts_between(self, u, v):
        return [d for d in self.rotations[u] if self.head(d) == v]

    # face walks, each started at its smallest dart, in order of that dart
    @cached_property
    def faces(self) -> Tuple[Facet, ...]:
        seen = [False] * self.dart_count
        out = []
        for start in self.darts:
            if seen[start]:
                continue
            walk = []
            d = start
            while not seen[d]:
                seen[d] = True
                walk.append(d)
                d = self.succ_of[self.twin_of[d]]
            out.append(Facet(tuple(walk), tuple(self.tail_of[x] for x in walk)))
        return tuple(out)

    @cached_property
    def face_of(self) -> Tuple[int, ...]:
        index = [0] * self.dart_count
        for i, f in enumerate(self.faces):
            for d in f.darts:
                index[d] = i
        return tuple(index)

    def facets_at(self, v) -> Tuple[int, int, int]:
        """Facet indices of the corners at v, in rotation order of the darts"""
        return tuple(self.face_of[d] for d in self.rotations[v])

    def facets_of_edge(self, d) -> Tuple[int, int]:
        return self.face_of[d], self.face_of[self.twin_of[d]]

    def normal_facet(self, d):
        """The facet at tail(d) that does not contain the edge of d"""
        return self.face_of[self.succ_of[self.succ_of[d]]]

    def euler_characteristic(self):
        return self.vertex_count - self.edge_count + len(self.faces)

    def to_networkx(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        G.add_nodes_from(self.vertices)
        for d, t in self.edges():
            G.add_edge(self.tail(d), self.tail(t), key=d)
        return G

    def multiple_edges(self) -> List[List[int]]:
        """Classes of parallel edges (two or more edges between the same vertices), as edge ids"""
        groups: Dict[Tuple[int, int], List[int]] = {}
        for d, t in self.edges():
            u, v = sorted((self.tail(d), self.tail(t)))
            groups.setdefault((u, v), []).append(d)
        return [sorted(g) for _, g in sorted(groups.items()) if len(g) > 1]

    def is_simple(self):
        return not self.multiple_edges() and all(self.tail(d) != self.head(d) for d in self.darts)

    def mirror(self) -> "RotationGraph":
        """The reflected embedding: every rotation reversed, facets unchanged as sets"""
        return RotationGraph([tuple(reversed(r)) for r in self.rotations], self.twin_of)

    def relabel(self, vertex_order: Sequence[int]) -> "RotationGraph":
        """Renumber vertices so that new vertex i is old vertex vertex_order[i]; darts follow"""
        dart_map = self.dart_relabelling(vertex_order)
        twin = [0] * self.dart_count
        for d, nd in dart_map.items():
            twin[nd] = dart_map[self.twin_of[d]]
        rotations = [tuple(dart_map[d] for d in self.rotations[v]) for v in vertex_order]
        return RotationGraph(rotations, twin)

    # old dart -> new dart under relabel(vertex_order)
    def dart_relabelling(self, vertex_order: Sequence[int]) -> Dict[int, int]:
        dart_map = {}
        for v in vertex_order:
            for d in self.rotations[v]:
                dart_map[d] = len(dart_map)
        return dart_map

def build_rotation_graph(vertex_count: int, rotation_table: Sequence[Sequence[int]],
                         edges: Sequence[Sequence[int]]) -> RotationGraph:
    """Build and validate a sphere-embedded 3-valent graph

    Parameters
    ----------
        vertex_count : int
            number of vertices
        rotation_table : list of 3-element lists
            cyclic order of the darts leaving each vertex
        edges : list of pairs
            the dart involution, one pair per undirected edge
    Returns
    -------
    RotationGraph
    """
    if len(rotation_table) != vertex_count:
        raise InvalidInput("rotation table has %d rows for %d vertices" % (len(rotation_table), vertex_count))
    for v, rot in enumerate(rotation_table):
        if len(rot) != 3:
            raise NotTrivalent("vertex %d has %d darts" % (v, len(rot)))
    if vertex_count == 0 or vertex_count % 2:
        raise NotTrivalent("a 3-valent graph has a positive even number of vertices, got %d" % vertex_count)

    darts = sorted(d for rot in rotation_table for d in rot)
    if darts != list(range(3 * vertex_count)):
        raise InvalidInput("darts must be 0..%d, each used once" % (3 * vertex_count - 1))
    twin = [None] * (3 * vertex_count)
    for pair in edges:
        a, b = pair
        if a == b or not (0 <= a < len(twin) and 0 <= b < len(twin)) or twin[a] is not None or twin[b] is not None:
            raise InvalidInput("edge %r is not part of a dart involution" % (list(pair),))
        twin[a], twin[b] = b, a
    if any(t is None for t in twin):
        raise InvalidInput("dart %d belongs to no edge" % twin.index(None))

    g = RotationGraph(rotation_table, twin)
    if not nx.is_connected(g.to_networkx()):
        raise Disconnected("graph with %d vertices is not connected" % vertex_count)
    chi = g.euler_characteristic()
    if chi != 2:
        raise NotSphere("V - E + F = %d - %d + %d = %d, not 2" % (g.vertex_count, g.edge_count, len(g.faces), chi))
    logger.debug("built %r with %d facets", g, len(g.faces))
    return g

def facets(g: RotationGraph) -> List[Facet]:
    return list(g.faces)

def from_neighbor_rotations(neighbors: Sequence[Sequence[int]]) -> RotationGraph:
    """Build a simple graph from the cyclic order of neighbours at each vertex"""
    dart = {}
    rotations = []
    for v, nbrs in enumerate(neighbors):
        rotations.append([])
        for u in nbrs:
            dart[(v, u)] = len(dart)
            rotations[v].append(dart[(v, u)])
    edges = [(d, dart[(u, v)]) for (v, u), d in dart.items() if v < u]
    return build_rotation_graph(len(neighbors), rotations, edges)
