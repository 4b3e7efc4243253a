"""
Date: 261018

{Description: the manifold-with-faces conditions on a rotation graph and the face poset
of the orbit space it bounds: Q itself, facets, edges, vertices and the empty face}
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Tuple

from tgkit._errors_ import InvalidInput
from tgkit._report_ import Diagnostic
from tgkit.graph._rotation_ import RotationGraph

def validate_nice(g: RotationGraph) -> Tuple[bool, List[Diagnostic]]:
    """Check that every facet is an embedded disk meeting the others properly

    Returns (ok, diagnostics). Facets are allowed to share more than one edge.
    """
    diagnostics = []
    for i, f in enumerate(g.faces):
        seen = set()
        for v in f.vertices:
            if v in seen:
                diagnostics.append(Diagnostic('simple-boundary', 'facet %d' % i,
                                              'boundary walk visits vertex %d twice' % v))
                break
            seen.add(v)
        for d in f.darts:
            if g.face_of[g.twin(d)] == i and d < g.twin(d):
                diagnostics.append(Diagnostic('self-meeting', 'facet %d' % i,
                                              'facet lies on both sides of edge %d' % d))
    for v in g.vertices:
        at_v = g.facets_at(v)
        if len(set(at_v)) != 3:
            diagnostics.append(Diagnostic('vertex-facets', 'vertex %d' % v,
                                          'lies on %d distinct facets, not 3' % len(set(at_v))))
    return not diagnostics, diagnostics

@dataclass(frozen=True)
class Face:
    """A face of Q recorded by the vertices and edge ids it contains"""
    codim: int
    vertices: FrozenSet[int]
    edges: FrozenSet[int]

    def __le__(self, other):
        return self.vertices <= other.vertices and self.edges <= other.edges

@dataclass
class FacePoset:
    # codimension 0..3 for Q, facets, edges, vertices; 4 for the empty face
    levels: Dict[int, List[Face]] = field(default_factory=dict)

    @property
    def elements(self) -> List[Face]:
        return [x for k in sorted(self.levels) for x in self.levels[k]]

    def counts(self) -> Tuple[int, ...]:
        return tuple(len(self.levels.get(k, [])) for k in range(5))

    def below(self, x: Face) -> List[Face]:
        return [y for y in self.elements if y.codim > x.codim and y <= x]

    def level_sets(self):
        """Each level as a set of (vertex set, edge set) pairs, the data compared between posets"""
        return {k: frozenset((x.vertices, x.edges) for x in xs) for k, xs in self.levels.items()}

def face_poset(g: RotationGraph) -> FacePoset:
    ok, diagnostics = validate_nice(g)
    if not ok:
        raise InvalidInput("face poset of a graph that is not nice: %s" % diagnostics[0])
    everything = Face(0, frozenset(g.vertices), frozenset(d for d, _ in g.edges()))
    facets = [Face(1, f.vertex_set, frozenset(g.edge_id(d) for d in f.darts)) for f in g.faces]
    edges = [Face(2, frozenset((g.tail(d), g.tail(t))), frozenset([d])) for d, t in g.edges()]
    vertices = [Face(3, frozenset([v]), frozenset()) for v in g.vertices]
    empty = Face(4, frozenset(), frozenset())
    return FacePoset({0: [everything], 1: facets, 2: edges, 3: vertices, 4: [empty]})
