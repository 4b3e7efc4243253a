"""
Date: 261018

{Description: the inverse of the connected sum. Cutting three edges that separate a torus
graph into two pieces and capping each piece with a new vertex gives two torus graphs whose
connected sum at the caps is the original graph}
"""

from __future__ import annotations

import logging
from collections import defaultdict
from itertools import combinations, product
from typing import Iterable, List, Optional, Tuple

from tgkit._errors_ import NotACut, InvalidCap, ValidationError
from tgkit.graph import build_rotation_graph, components_without_edges
from tgkit.surgery._sum_ import GluingRecord, _require_sigma
from tgkit.torus import TorusGraph, validate_torus_graph

logger = logging.getLogger(__name__)

def _cap_order(g, leaving, entering):
    """Cyclic order of the cut edges around the cap of the side that 'leaving' darts leave"""
    index = {d: i for i, d in enumerate(entering)}
    nxt = {}
    for i, x in enumerate(leaving):
        d = g.succ(g.twin(x))
        while d not in index:
            d = g.succ(g.twin(d))
        nxt[i] = index[d]
    order = [0]
    while len(order) < 3 and nxt[order[-1]] not in order:
        order.append(nxt[order[-1]])
    if len(order) != 3 or nxt[order[-1]] != 0:
        raise InvalidCap("cut edges do not bound a disk around the cap")
    return order

def _side(tg, sigma, vertices, outward, order, cap_sigma):
    """Piece spanned by the given vertices plus a cap joined by the outward darts"""
    g = tg.graph
    dmap = {}
    for v in vertices:
        for d in g.darts_at(v):
            dmap[d] = len(dmap)
    cap_darts = [len(dmap) + i for i in range(3)]
    n = len(dmap) + 3
    twin = [None] * n
    axial = [None] * n
    for d, nd in dmap.items():
        axial[nd] = tg.axial[d]
        if g.twin(d) in dmap:
            twin[nd] = dmap[g.twin(d)]
    for i, x in enumerate(outward):
        c = cap_darts[i]
        twin[dmap[x]], twin[c] = c, dmap[x]
        # sigma(cap) A(cap -> p) = -sigma(p) A(p -> cap)
        axial[c] = tg.axial[x] * (-cap_sigma * sigma[g.tail(x)])
    rotations = [[dmap[d] for d in g.darts_at(v)] for v in vertices] + [[cap_darts[i] for i in order]]
    try:
        piece = build_rotation_graph(len(rotations), rotations, [(a, b) for a, b in enumerate(twin) if a < b])
    except ValidationError as err:
        raise InvalidCap("capped side is not a sphere graph: %s" % err) from err
    return TorusGraph(piece, axial, [sigma[v] for v in vertices] + [cap_sigma])

def split(tg: TorusGraph, cut: Iterable[int], first_side: Optional[int] = None) -> Tuple[TorusGraph, TorusGraph, GluingRecord]:
    """Cut three edges and cap both sides

    Parameters
    ----------
        tg : TorusGraph
            oriented torus graph
        cut : iterable of 3 ints
            the edges to cut, as darts or edge ids
        first_side : int, optional
            a vertex that must end up in the first piece; defaults to the side of the smallest vertex
    Returns
    -------
    (TorusGraph, TorusGraph, GluingRecord)
        the pieces carry the orientation of tg on its vertices and caps of opposite sign;
        the record sends the vertices of both pieces to vertices of tg, with None for the caps
    """
    _require_sigma(tg)
    g = tg.graph
    edges = sorted({g.edge_id(d) for d in cut})
    if len(edges) != 3:
        raise NotACut("a cut has 3 distinct edges, got %d" % len(edges))
    sides = components_without_edges(g, edges)
    if len(sides) != 2:
        raise NotACut("removing edges %s leaves %d components" % (edges, len(sides)))
    one, two = sides
    if first_side is not None and first_side in two:
        one, two = two, one
    leaving, entering = [], []
    for e in edges:
        x = e if g.tail(e) in one else g.twin(e)
        if g.tail(x) not in one or g.head(x) not in two:
            raise NotACut("edge %d does not cross between the two sides" % e)
        leaving.append(x)
        entering.append(g.twin(x))
    order1 = _cap_order(g, leaving, entering)
    order2 = _cap_order(g, entering, leaving)
    vs1, vs2 = sorted(one), sorted(two)

    # the pieces keep the orientation of tg; only the sign of the caps is chosen
    problems = []
    for cap_sigma in (1, -1):
        piece1 = _side(tg, tg.sigma, vs1, leaving, order1, cap_sigma)
        piece2 = _side(tg, tg.sigma, vs2, entering, order2, -cap_sigma)
        ok1, diag1 = validate_torus_graph(piece1)
        ok2, diag2 = validate_torus_graph(piece2)
        if ok1 and ok2:
            break
        problems = diag1 + diag2
    else:
        raise InvalidCap("no cap orientation makes both capped sides torus graphs: %s" % problems[0])

    cap1, cap2 = len(vs1), len(vs2)
    record = GluingRecord(
        p=cap1, q=cap2,
        labels_p=piece1.labels_at(cap1), labels_q=piece2.labels_at(cap2),
        sigma_p=cap_sigma, sigma_q=-cap_sigma,
        new_edges=tuple(zip(leaving, entering)),
        new_labels=tuple((tg.axial[x], tg.axial[y]) for x, y in zip(leaving, entering)),
        left_map=tuple(vs1) + (None,), right_map=tuple(vs2) + (None,))
    logger.debug("split along %s: %d + %d vertices", edges, piece1.vertex_count, piece2.vertex_count)
    return piece1, piece2, record

def _facet_triangles(g) -> List[Tuple[int, int, int]]:
    """Edge triples joining three facets pairwise, as sorted edge ids

    Two connected sides are separated by three edges exactly when the edges form a
    triangle in the dual graph, so these are all candidate cuts.
    """
    shared = defaultdict(list)
    for d, _ in g.edges():
        shared[tuple(sorted(g.facets_of_edge(d)))].append(d)
    triangles = set()
    for f1, f2, f3 in combinations(range(len(g.faces)), 3):
        for a, b, c in product(shared[(f1, f2)], shared[(f2, f3)], shared[(f1, f3)]):
            triangles.add(tuple(sorted((a, b, c))))
    return sorted(triangles)

def find_splits(tg: TorusGraph) -> List[Tuple[int, int, int]]:
    """All proper admissible 3-edge cuts, as sorted edge ids

    Proper means both sides keep at least two vertices, so the self-split of a
    vertex star is left out.
    """
    _require_sigma(tg)
    g = tg.graph
    cuts = []
    for cut in _facet_triangles(g):
        sides = components_without_edges(g, cut)
        if len(sides) != 2 or min(len(s) for s in sides) < 2:
            continue
        try:
            split(tg, cut)
        except (NotACut, InvalidCap) as err:
            logger.debug("cut %s rejected: %s", cut, err)
            continue
        cuts.append(cut)
    return cuts
