"""
Date: 261018

{Description: vertex and edge connectivity of small rotation graphs by exhaustive removal.
Instances are classification inputs with a handful of vertices, so every subset is tried}
"""

from __future__ import annotations

from itertools import combinations
from typing import FrozenSet, List, Sequence, Tuple

import networkx as nx

from tgkit._errors_ import InternalInvariantViolation
from tgkit.graph._rotation_ import RotationGraph

def _connected_after_removing(G, removed):
    rest = [v for v in G.nodes if v not in removed]
    # removing everything, or all but one vertex, leaves nothing to disconnect
    if len(rest) <= 1:
        return True
    return nx.is_connected(G.subgraph(rest))

def is_k_connected(g: RotationGraph, k: int) -> bool:
    """True iff removing any fewer than k vertices leaves g connected"""
    assert k in (1, 2, 3), "k must be 1, 2 or 3, got %r" % (k,)
    G = g.to_networkx()
    return all(_connected_after_removing(G, set(S))
               for size in range(k) for S in combinations(g.vertices, size))

def separating_pairs(g: RotationGraph) -> List[Tuple[int, int]]:
    """All vertex pairs whose removal disconnects g; each must share a facet"""
    G = g.to_networkx()
    pairs = [(p, q) for p, q in combinations(g.vertices, 2) if not _connected_after_removing(G, {p, q})]
    for p, q in pairs:
        if not any(p in f.vertex_set and q in f.vertex_set for f in g.faces):
            raise InternalInvariantViolation("separating pair {%d, %d} lies on no common facet" % (p, q))
    return pairs

def components_without_edges(g: RotationGraph, edge_ids: Sequence[int]) -> List[FrozenSet[int]]:
    """Vertex sets of the components left after deleting the given edges, sorted by smallest vertex"""
    G = g.to_networkx()
    for e in edge_ids:
        G.remove_edge(g.tail(e), g.head(e), key=g.edge_id(e))
    return sorted((frozenset(c) for c in nx.connected_components(G)), key=min)

def two_edge_cuts(g: RotationGraph) -> List[Tuple[int, int]]:
    """Pairs of vertex-disjoint edges whose removal disconnects g, as edge ids

    For a 3-valent graph vertex and edge connectivity agree, so a simple graph with
    at least 4 vertices is 3-connected iff this list is empty.
    """
    cuts = []
    for (d1, t1), (d2, t2) in combinations(g.edges(), 2):
        if {g.tail(d1), g.tail(t1)} & {g.tail(d2), g.tail(t2)}:
            continue
        if len(components_without_edges(g, [d1, d2])) > 1:
            cuts.append((d1, d2))
    return cuts
