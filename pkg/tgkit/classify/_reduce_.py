"""
Date: 261018

{Description: the two reduction steps of the classification. A double edge together with
its attached vertex is split off as an SB piece; a simple graph that is not 3-connected is
cut at a singular facet into two smaller pieces with an SB piece between them}
"""

from __future__ import annotations

import logging
from typing import List, Optional, Tuple

from tgkit._errors_ import (NoMultipleEdge, Already3Connected, InternalInvariantViolation, InvalidInput,
                            NotACut, InvalidCap)
from tgkit.classify._leaf_ import Leaf, normalize_sb_params
from tgkit.graph import components_without_edges, is_k_connected, two_edge_cuts
from tgkit.surgery import GluingRecord, split, find_splits
from tgkit.torus import TorusGraph

logger = logging.getLogger(__name__)

def _block_cut(g, p, q):
    """Cut around the block p = q - r, where r is the third neighbour of p"""
    dp = next(d for d in g.darts_at(p) if g.head(d) != q)
    dq = next(d for d in g.darts_at(q) if g.head(d) != p)
    r = g.head(dp)
    if r == g.head(dq):
        return None
    cut = {g.edge_id(dq)} | {g.edge_id(e) for e in g.darts_at(r) if e != g.twin(dp)}
    if len(cut) != 3:
        return None
    return r, sorted(cut)

def reduce_multi_edge(tg: TorusGraph, at: Optional[Tuple[int, int]] = None) -> Tuple[Leaf, TorusGraph, GluingRecord]:
    """Split off the SB block at a double edge

    Parameters
    ----------
        tg : TorusGraph
            oriented, at least 6 vertices, with a double edge
        at : pair of vertices, optional
            the double edge to use; defaults to the first admissible one by lowest vertex
    Returns
    -------
    (Leaf, TorusGraph, GluingRecord)
        the SB leaf, the remainder with two fewer vertices, and the split record with the
        remainder as first piece
    """
    g = tg.graph
    if g.vertex_count < 6:
        raise InvalidInput("reduce_multi_edge needs at least 6 vertices, got %d" % g.vertex_count)
    pairs = []
    for c in g.multiple_edges():
        u, v = sorted(g.endpoints(c[0]))
        if at is None or {u, v} == set(at):
            pairs.append((u, v))
    if not pairs:
        raise NoMultipleEdge("no double edge%s" % ("" if at is None else " between %d and %d" % tuple(at)))

    for u, v in pairs:
        for p, q in ((u, v), (v, u)):
            block = _block_cut(g, p, q)
            if block is None:
                continue
            r, cut = block
            sides = components_without_edges(g, cut)
            if frozenset((p, q, r)) not in sides or len(sides) != 2:
                continue
            rest = next(w for w in g.vertices if w not in (p, q, r))
            try:
                remainder, piece, record = split(tg, cut, first_side=rest)
            except (NotACut, InvalidCap) as err:
                logger.debug("block %d=%d-%d not admissible: %s", p, q, r, err)
                continue
            leaf = Leaf('SB', piece, params=normalize_sb_params(piece))
            logger.info("split off %s at double edge %d=%d, %d vertices remain", leaf, p, q, remainder.vertex_count)
            return leaf, remainder, record
    raise InternalInvariantViolation("no admissible cut around the double edges %s" % pairs)

def _facets_through(g, e1, e2):
    return [i for i, f in enumerate(g.faces)
            if {e1, e2} <= {g.edge_id(d) for d in f.darts}]

def _two_stage(tg, e1, e2, side, p, q):
    """Split along p's two edges inside side and q's cut edge, then peel the SB block at p"""
    g = tg.graph
    cut_p = next(e for e in (e1, e2) if p in g.endpoints(e))
    cut_q = next(e for e in (e1, e2) if q in g.endpoints(e))
    inner = [g.edge_id(d) for d in g.darts_at(p) if g.edge_id(d) != cut_p]
    first, middle, rec1 = split(tg, inner + [cut_q], first_side=next(w for w in side if w != p))
    p_mid = rec1.right_map.index(p)
    leaf, second, rec2 = reduce_multi_edge(middle, at=(p_mid, rec1.q))
    return first, leaf, second, [rec1, rec2]

def reduce_singular_facet(tg: TorusGraph) -> Tuple[TorusGraph, Optional[Leaf], TorusGraph, List[GluingRecord]]:
    """Cut a simple, not 3-connected torus graph at a singular facet

    A pair of edges pr, qs disconnecting the graph lies on exactly two facets; the larger
    one is the singular facet. With p, q on one side and not adjacent, the graph splits
    first along the two other edges at p and the edge qs, and the middle piece then
    sheds an SB block at its new double edge.

    If no two-edge cut has that shape, a plain admissible 3-edge split is used and no
    SB leaf is returned.

    Returns
    -------
    (first piece, SB leaf or None, second piece, records)
        records[0] splits tg into the first piece and the rest; with an SB leaf,
        records[1] splits the rest into the second piece and the SB leaf
    """
    g = tg.graph
    if not g.is_simple():
        raise InvalidInput("reduce_singular_facet needs a simple graph")
    if g.vertex_count < 6:
        raise InvalidInput("reduce_singular_facet needs at least 6 vertices, got %d" % g.vertex_count)
    if is_k_connected(g, 3):
        raise Already3Connected("graph with %d vertices is 3-connected" % g.vertex_count)

    for e1, e2 in two_edge_cuts(g):
        through = _facets_through(g, e1, e2)
        if len(through) != 2:
            raise InternalInvariantViolation("edges %d and %d of a 2-edge cut lie on %d common facets"
                                             % (e1, e2, len(through)))
        singular = max(through, key=lambda i: len(g.faces[i].vertex_set))
        if len(g.faces[singular].vertex_set) < 6:
            raise InternalInvariantViolation("singular facet %d has only %d vertices"
                                             % (singular, len(g.faces[singular].vertex_set)))
        for side in components_without_edges(g, [e1, e2]):
            a, b = (next(v for v in g.endpoints(e) if v in side) for e in (e1, e2))
            if b in g.neighbors(a):
                continue
            for p, q in ((a, b), (b, a)):
                try:
                    first, leaf, second, records = _two_stage(tg, e1, e2, side, p, q)
                except (NotACut, InvalidCap, InternalInvariantViolation) as err:
                    logger.debug("two-stage split at %d, %d failed: %s", p, q, err)
                    continue
                logger.info("singular facet %d: %d + SB + %d vertices", singular, first.vertex_count, second.vertex_count)
                return first, leaf, second, records

    cuts = find_splits(tg)
    if not cuts:
        raise InternalInvariantViolation("no admissible cut in a graph that is not 3-connected")
    first, second, record = split(tg, cuts[0])
    logger.info("plain split along %s: %d + %d vertices", cuts[0], first.vertex_count, second.vertex_count)
    return first, None, second, [record]
