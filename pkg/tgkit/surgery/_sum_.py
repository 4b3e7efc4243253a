"""
Date: 261018

{Description: connected sum of two oriented torus graphs at a pair of vertices with equal
label sets and opposite orientations. The two vertices are removed and the three dangling
edge pairs are joined}
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from tgkit._errors_ import InadmissibleSite, InternalInvariantViolation, InvalidInput, ValidationError
from tgkit.graph import RotationGraph, build_rotation_graph
from tgkit.lattice import LatticeCovector
from tgkit.torus import TorusGraph, validate_torus_graph

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class SumSite:
    p: int
    q: int
    # (dart at p, dart at q) with equal labels, in rotation order at p
    matching: Tuple[Tuple[int, int], ...]

@dataclass(frozen=True)
class GluingRecord:
    """Everything needed to undo or redo one connected sum

    left_map / right_map send the vertices of the two pieces to vertices of the
    combined graph (None for the removed vertex). new_edges holds the joining edges
    of the combined graph as (dart from the left piece, dart from the right piece).
    """
    p: int
    q: int
    labels_p: Tuple[LatticeCovector, ...]
    labels_q: Tuple[LatticeCovector, ...]
    sigma_p: int
    sigma_q: int
    new_edges: Tuple[Tuple[int, int], ...]
    new_labels: Tuple[Tuple[LatticeCovector, LatticeCovector], ...]
    left_map: Tuple[Optional[int], ...]
    right_map: Tuple[Optional[int], ...]

    @property
    def cut(self) -> Tuple[int, ...]:
        """Edge ids (smaller dart) of the joining edges in the combined graph"""
        return tuple(sorted(min(a, b) for a, b in self.new_edges))

def _require_sigma(*tgs):
    for tg in tgs:
        if tg.sigma is None:
            raise InvalidInput("surgery needs oriented torus graphs; attach sigma first")

def _matching(tg1, p, tg2, q):
    at_q = {tg2.axial[c]: c for c in tg2.graph.darts_at(q)}
    return tuple((d, at_q[tg1.axial[d]]) for d in tg1.graph.darts_at(p))

def make_site(tg1: TorusGraph, p: int, tg2: TorusGraph, q: int) -> SumSite:
    """The site at (p, q), or InadmissibleSite naming the failed condition"""
    _require_sigma(tg1, tg2)
    if tg1.label_set(p) != tg2.label_set(q):
        raise InadmissibleSite("labels at %d and %d differ: %s vs %s"
                               % (p, q, ' '.join(map(str, tg1.labels_at(p))), ' '.join(map(str, tg2.labels_at(q)))))
    if tg1.sigma[p] == tg2.sigma[q]:
        raise InadmissibleSite("sigma(%d) = sigma(%d) = %+d, orientations must clash" % (p, q, tg1.sigma[p]))
    return SumSite(p, q, _matching(tg1, p, tg2, q))

def find_sum_sites(tg1: TorusGraph, tg2: TorusGraph) -> List[SumSite]:
    """All vertex pairs with equal label sets and opposite sigma"""
    _require_sigma(tg1, tg2)
    sites = []
    for p in tg1.graph.vertices:
        for q in tg2.graph.vertices:
            if tg1.label_set(p) == tg2.label_set(q) and tg1.sigma[p] != tg2.sigma[q]:
                sites.append(SumSite(p, q, _matching(tg1, p, tg2, q)))
    logger.debug("%d admissible sum sites", len(sites))
    return sites

def _check_site(tg1, tg2, site):
    g1, g2 = tg1.graph, tg2.graph
    darts_p, darts_q = set(g1.darts_at(site.p)), set(g2.darts_at(site.q))
    if {d for d, _ in site.matching} != darts_p or {c for _, c in site.matching} != darts_q:
        raise InadmissibleSite("matching must pair the darts at %d with the darts at %d" % (site.p, site.q))
    for d, c in site.matching:
        if tg1.axial[d] != tg2.axial[c]:
            raise InadmissibleSite("matched darts %d and %d carry %s and %s" % (d, c, tg1.axial[d], tg2.axial[c]))
    if tg1.sigma[site.p] == tg2.sigma[site.q]:
        raise InadmissibleSite("sigma(%d) = sigma(%d), orientations must clash" % (site.p, site.q))

def connected_sum(tg1: TorusGraph, tg2: TorusGraph, site: SumSite) -> Tuple[TorusGraph, GluingRecord]:
    """Remove site.p from tg1 and site.q from tg2 and join the dangling edges

    Parameters
    ----------
        tg1, tg2 : TorusGraph
            oriented torus graphs
        site : SumSite
            vertices and the label matching between their stars
    Returns
    -------
    (TorusGraph, GluingRecord)
    """
    _require_sigma(tg1, tg2)
    _check_site(tg1, tg2, site)
    g1, g2 = tg1.graph, tg2.graph
    match = dict(site.matching)
    ds = g1.darts_at(site.p)
    # the gluing reverses the cyclic order around the removed vertices; mirror tg2 if it does not
    if g2.succ(match[ds[0]]) == match[ds[1]]:
        g2 = g2.mirror()

    left = [v for v in g1.vertices if v != site.p]
    right = [v for v in g2.vertices if v != site.q]
    dmap1, dmap2 = {}, {}
    for v in left:
        for d in g1.darts_at(v):
            dmap1[d] = len(dmap1)
    for v in right:
        for d in g2.darts_at(v):
            dmap2[d] = len(dmap1) + len(dmap2)
    n = len(dmap1) + len(dmap2)
    twin = [None] * n
    axial = [None] * n
    for d, nd in dmap1.items():
        axial[nd] = tg1.axial[d]
        if g1.twin(d) in dmap1:
            twin[nd] = dmap1[g1.twin(d)]
    for d, nd in dmap2.items():
        axial[nd] = tg2.axial[d]
        if g2.twin(d) in dmap2:
            twin[nd] = dmap2[g2.twin(d)]
    new_edges = []
    for d in ds:
        x, y = dmap1[g1.twin(d)], dmap2[g2.twin(match[d])]
        twin[x], twin[y] = y, x
        new_edges.append((x, y))
    rotations = [[dmap1[d] for d in g1.darts_at(v)] for v in left] + \
                [[dmap2[d] for d in g2.darts_at(v)] for v in right]
    sigma = [tg1.sigma[v] for v in left] + [tg2.sigma[v] for v in right]
    try:
        g = build_rotation_graph(len(rotations), rotations, [(a, b) for a, b in enumerate(twin) if a < b])
    except ValidationError as err:
        raise InternalInvariantViolation("connected sum is not a sphere graph: %s" % err) from err
    tg = TorusGraph(g, axial, sigma)
    ok, diagnostics = validate_torus_graph(tg)
    if not ok:
        raise InternalInvariantViolation("connected sum at (%d, %d) is not a torus graph: %s"
                                         % (site.p, site.q, diagnostics[0]))

    left_map = tuple(None if v == site.p else left.index(v) for v in g1.vertices)
    right_map = tuple(None if v == site.q else len(left) + right.index(v) for v in g2.vertices)
    record = GluingRecord(
        p=site.p, q=site.q,
        labels_p=tg1.labels_at(site.p), labels_q=tuple(tg2.axial[c] for c in tg2.graph.darts_at(site.q)),
        sigma_p=tg1.sigma[site.p], sigma_q=tg2.sigma[site.q],
        new_edges=tuple(new_edges),
        new_labels=tuple((axial[x], axial[y]) for x, y in new_edges),
        left_map=left_map, right_map=right_map)
    logger.debug("connected sum at (%d, %d): %d + %d -> %d vertices",
                 site.p, site.q, g1.vertex_count, g2.vertex_count, g.vertex_count)
    return tg, record
