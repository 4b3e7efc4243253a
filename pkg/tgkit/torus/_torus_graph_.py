"""
Date: 261018

{Description: torus graphs. An axial function labels every dart of a nice rotation graph
by a covector; the labels at a vertex form a unimodular basis, reversed darts carry the
same label up to sign and a connection matches the stars of adjacent vertices.
An optional orientation sigma assigns +-1 to each vertex}
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from tgkit._errors_ import NoConnection, NotOrientable, NotUnimodular, InconsistentFacetVector, InvalidInput
from tgkit._report_ import Diagnostic
from tgkit.graph import RotationGraph, validate_nice
from tgkit.lattice import LatticeCovector, LatticeVector, det3, solve_dual, dual_basis, multiple_of, apply_matrix
from tgkit.torus._characteristic_ import CharacteristicData

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class Connection:
    """maps[d] sends each dart at tail(d) to a dart at head(d)"""
    maps: Dict[int, Dict[int, int]]

    def __call__(self, d, e):
        return self.maps[d][e]

class TorusGraph():

    def __init__(self, graph: RotationGraph, axial: Sequence[LatticeCovector], sigma: Optional[Sequence[int]] = None):
        assert len(axial) == graph.dart_count, "one label per dart"
        self.graph = graph
        self.axial = tuple(a if isinstance(a, LatticeCovector) else LatticeCovector(tuple(a)) for a in axial)
        self.sigma = None if sigma is None else tuple(int(s) for s in sigma)
        if self.sigma is not None:
            assert len(self.sigma) == graph.vertex_count and set(self.sigma) <= {1, -1}, "sigma is +-1 per vertex"

    def __eq__(self, other):
        return isinstance(other, TorusGraph) and (self.graph, self.axial, self.sigma) == (other.graph, other.axial, other.sigma)

    def __hash__(self):
        return hash((self.graph, self.axial, self.sigma))

    def __repr__(self):
        return "TorusGraph(V=%d, oriented=%s)" % (self.vertex_count, self.sigma is not None)

    @property
    def vertex_count(self):
        return self.graph.vertex_count

    @property
    def oriented(self):
        return self.sigma is not None

    def label(self, d) -> LatticeCovector:
        return self.axial[d]

    def labels_at(self, v) -> Tuple[LatticeCovector, ...]:
        return tuple(self.axial[d] for d in self.graph.darts_at(v))

    def label_set(self, v):
        return frozenset(self.labels_at(v))

    # computed once, on first use
    @cached_property
    def connection(self) -> Connection:
        return compute_connection(self)

    def with_sigma(self, sigma) -> "TorusGraph":
        return TorusGraph(self.graph, self.axial, sigma)

    def transform(self, matrix) -> "TorusGraph":
        """Apply an integer matrix to every label"""
        return TorusGraph(self.graph, [apply_matrix(matrix, a) for a in self.axial], self.sigma)

    def relabel(self, vertex_order: Sequence[int]) -> "TorusGraph":
        """Renumber vertices: new vertex i is old vertex vertex_order[i]"""
        dart_map = self.graph.dart_relabelling(vertex_order)
        axial = [None] * self.graph.dart_count
        for d, nd in dart_map.items():
            axial[nd] = self.axial[d]
        sigma = None if self.sigma is None else [self.sigma[v] for v in vertex_order]
        return TorusGraph(self.graph.relabel(vertex_order), axial, sigma)

def compute_connection(tg: TorusGraph) -> Connection:
    """The unique connection, or NoConnection

    For a directed edge d = pq and e at p, the image is the dart e' at q with
    A(e') - A(e) an integer multiple of A(d); d itself goes to the reversed dart.
    """
    g = tg.graph
    maps = {}
    for d in g.darts:
        td = g.twin(d)
        image = {d: td}
        for e in g.darts_at(g.tail(d)):
            if e == d:
                continue
            found = [x for x in g.darts_at(g.head(d))
                     if x != td and multiple_of(tg.axial[x] - tg.axial[e], tg.axial[d]) is not None]
            if len(found) != 1:
                raise NoConnection("dart %d: %d candidates for the image of dart %d" % (d, len(found), e))
            image[e] = found[0]
        if len(set(image.values())) != 3:
            raise NoConnection("dart %d: connection is not a bijection of stars" % d)
        maps[d] = image
    for d in g.darts:
        for e, x in maps[d].items():
            if maps[g.twin(d)][x] != e:
                raise NoConnection("connection along dart %d is not inverted by its reverse" % d)
    return Connection(maps)

def validate_torus_graph(tg: TorusGraph) -> Tuple[bool, List[Diagnostic]]:
    """Check the sign, basis and connection axioms, and the orientation rule when sigma is present"""
    g = tg.graph
    diagnostics = []
    for d, t in g.edges():
        if tg.axial[t] not in (tg.axial[d], -tg.axial[d]):
            diagnostics.append(Diagnostic('axiom-1', 'dart %d' % d,
                                          'labels %s and %s of the two directions differ by more than sign'
                                          % (tg.axial[d], tg.axial[t])))
    for v in g.vertices:
        a, b, c = tg.labels_at(v)
        det = det3(a, b, c)
        if det not in (1, -1):
            diagnostics.append(Diagnostic('axiom-2', 'vertex %d' % v,
                                          'labels %s %s %s have determinant %d' % (a, b, c, det)))
    if not diagnostics:
        try:
            compute_connection(tg)
        except NoConnection as err:
            diagnostics.append(Diagnostic('axiom-3', 'graph', str(err)))
    if tg.sigma is not None:
        for d in g.darts:
            p, q = g.tail(d), g.head(d)
            if tg.axial[d] * tg.sigma[p] + tg.axial[g.twin(d)] * tg.sigma[q] != LatticeCovector.of(0, 0, 0):
                diagnostics.append(Diagnostic('orientation', 'dart %d' % d,
                                              'sigma(%d)A(%d) != -sigma(%d)A(%d)' % (p, d, q, g.twin(d))))
    return not diagnostics, diagnostics

def _require_nice(g):
    ok, diagnostics = validate_nice(g)
    if not ok:
        raise InvalidInput("graph is not nice: %s" % diagnostics[0])

def orientation_from_embedding(g: RotationGraph, lam: CharacteristicData) -> Tuple[int, ...]:
    """sigma(p) = determinant of the facet vectors at p, taken in rotation order"""
    return tuple(det3(*(lam.vector(i) for i in g.facets_at(v))) for v in g.vertices)

def from_characteristic(g: RotationGraph, lam: CharacteristicData, oriented: bool = True) -> TorusGraph:
    """The torus graph of omnioriented characteristic data

    Parameters
    ----------
        g : RotationGraph
            a nice rotation graph
        lam : CharacteristicData
            one lattice vector per facet, unimodular around every vertex
        oriented : bool
            attach the orientation induced by the embedding
    Returns
    -------
    TorusGraph
    """
    _require_nice(g)
    if not lam.oriented:
        raise InvalidInput("characteristic data carries sign classes; lift the signs first")
    if len(lam) != len(g.faces):
        raise InvalidInput("%d facet vectors for %d facets" % (len(lam), len(g.faces)))
    axial = []
    for d in g.darts:
        f1, f2 = g.facets_of_edge(d)
        try:
            axial.append(solve_dual(lam[f1], lam[f2], lam[g.normal_facet(d)]))
        except NotUnimodular as err:
            raise NotUnimodular("vertex %d: %s" % (g.tail(d), err)) from err
    sigma = orientation_from_embedding(g, lam) if oriented else None
    return TorusGraph(g, axial, sigma)

def recover_characteristic(tg: TorusGraph) -> CharacteristicData:
    """Facet vectors from the dual bases at the vertices; all vertices of a facet must agree"""
    g = tg.graph
    _require_nice(g)
    found: Dict[int, Tuple[int, LatticeVector]] = {}
    for v in g.vertices:
        darts = g.darts_at(v)
        for d, w in zip(darts, dual_basis([tg.axial[x] for x in darts])):
            f = g.normal_facet(d)
            if f in found and found[f][1] != w:
                raise InconsistentFacetVector("facet %d: vertex %d gives %s, vertex %d gives %s"
                                              % (f, found[f][0], found[f][1], v, w))
            found.setdefault(f, (v, w))
    return CharacteristicData(tuple(found[f][1] for f in range(len(g.faces))))

def synthesize_orientation(tg: TorusGraph) -> TorusGraph:
    """Attach sigma by propagating sigma(0) = +1 along the orientation rule"""
    g = tg.graph
    sigma = {0: 1}
    queue = deque([0])
    while queue:
        p = queue.popleft()
        for d in g.darts_at(p):
            q, a, b = g.head(d), tg.axial[d], tg.axial[g.twin(d)]
            if b == -a:
                s = sigma[p]
            elif b == a:
                s = -sigma[p]
            else:
                raise NotOrientable("dart %d: labels %s and %s are not equal up to sign" % (d, a, b))
            if q not in sigma:
                sigma[q] = s
                queue.append(q)
            elif sigma[q] != s:
                raise NotOrientable("orientation rule gives both signs at vertex %d" % q)
    return tg.with_sigma([sigma[v] for v in g.vertices])

def flip_orientation(tg: TorusGraph) -> TorusGraph:
    assert tg.sigma is not None, "flip_orientation needs an oriented torus graph"
    return tg.with_sigma([-s for s in tg.sigma])
