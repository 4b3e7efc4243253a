"""
Date: 261018

{Description: the basic torus graphs a decomposition ends in. S6 is the 2-vertex sphere graph,
Simplex the tetrahedron, SB(eps, a, b) the 4-vertex double-edge family and QT any simple
3-connected torus graph}
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from tgkit._errors_ import NotSBShaped, InternalInvariantViolation
from tgkit.graph import is_k_connected
from tgkit.lattice import LatticeCovector, coordinates
from tgkit.torus import TorusGraph, is_equivalent, sb_torus_graph

logger = logging.getLogger(__name__)

LEAF_KINDS = ('S6', 'Simplex', 'SB', 'QT')

@dataclass(frozen=True)
class Leaf:
    kind: str
    witness: TorusGraph
    # (eps, a, b) in normal form for SB leaves
    params: Optional[Tuple[int, int, int]] = None
    # labels at vertex 0 for S6 leaves
    basis: Optional[Tuple[LatticeCovector, ...]] = None

    def __post_init__(self):
        assert self.kind in LEAF_KINDS, "unknown leaf kind %r" % (self.kind,)

    @property
    def vertex_count(self):
        return self.witness.vertex_count

    def __str__(self):
        if self.kind == 'SB':
            return "SB(%+d,%d,%d)" % self.params
        return self.kind

def sb_normal_form(eps: int, a: int, b: int) -> Tuple[int, int, int]:
    """Smallest (a, b) among the readings of one SB graph: swapping the double edges
    and reading from the other vertex pair"""
    orbit = [(a, b), (b, a), (-eps * a, -eps * b), (-eps * b, -eps * a)]
    a, b = min(orbit)
    return (eps, a, b)

def _sb_sides(g):
    classes = g.multiple_edges()
    if g.vertex_count != 4 or len(classes) != 2 or any(len(c) != 2 for c in classes):
        raise NotSBShaped("expected 4 vertices and two double edges, got %d vertices and classes %s"
                          % (g.vertex_count, classes))
    return classes

def normalize_sb_params(tg: TorusGraph, certify: bool = False) -> Tuple[int, int, int]:
    """Read (eps, a, b) off an SB-shaped torus graph, in normal form

    The labels at a vertex y are taken as the basis (single edge, first double edge,
    second double edge); the labels at the neighbour across the single edge then have
    coordinates (eps,0,0), (a,1,0), (b,0,1) after matching darts with the connection.
    Every choice of y and of the double-edge order is read and the normal form taken.

    Parameters
    ----------
        tg : TorusGraph
            4 vertices, two double edges
        certify : bool
            also check twisted equivalence with sb_torus_graph of the result
    Returns
    -------
    tuple (eps, a, b)
    """
    g = tg.graph
    classes = _sb_sides(g)
    double = {d for c in classes for e in c for d in (e, g.twin(e))}
    nabla = tg.connection
    readings = set()
    for y in g.vertices:
        base = next(d for d in g.darts_at(y) if d not in double)
        pair = [d for d in g.darts_at(y) if d in double]
        for dx, dy in (pair, pair[::-1]):
            basis = (tg.axial[base], tg.axial[dx], tg.axial[dy])
            c0 = coordinates(tg.axial[g.twin(base)], basis)
            cx = coordinates(tg.axial[nabla(base, dx)], basis)
            cy = coordinates(tg.axial[nabla(base, dy)], basis)
            if c0[1:] != (0, 0) or c0[0] not in (1, -1) or cx[1:] != (1, 0) or cy[1:] != (0, 1):
                raise NotSBShaped("labels across the single edge at vertex %d read %s %s %s" % (y, c0, cx, cy))
            readings.add(sb_normal_form(c0[0], cx[0], cy[0]))
    if len(readings) != 1:
        logger.debug("SB readings disagree: %s", sorted(readings))
    params = min(readings)
    if certify and is_equivalent(tg, sb_torus_graph(*params), twisted=True) is None:
        raise InternalInvariantViolation("SB graph is not twisted-equivalent to SB%s" % (params,))
    return params

def recognize_basic(tg: TorusGraph) -> Optional[Leaf]:
    """The leaf kind of a basic torus graph, or None"""
    g = tg.graph
    if g.vertex_count == 2:
        return Leaf('S6', tg, basis=tg.labels_at(0))
    if g.vertex_count == 4:
        if g.is_simple():
            return Leaf('Simplex', tg)
        if len(g.multiple_edges()) == 2:
            return Leaf('SB', tg, params=normalize_sb_params(tg))
        return None
    if g.is_simple() and is_k_connected(g, 3):
        return Leaf('QT', tg)
    return None
