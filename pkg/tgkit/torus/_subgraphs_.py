"""
Date: 261018

{Description: k-valent face subgraphs of a torus graph, closed under the connection, and
their comparison with the face poset of the embedding}
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List

from tgkit.graph import face_poset
from tgkit.torus._torus_graph_ import TorusGraph

@dataclass(frozen=True)
class Subgraph:
    vertices: FrozenSet[int]
    edges: FrozenSet[int]

def _closure(tg: TorusGraph, v0, star):
    g, nabla = tg.graph, tg.connection
    stars = {v0: frozenset(star)}
    queue = deque([v0])
    while queue:
        v = queue.popleft()
        for d in stars[v]:
            q = g.head(d)
            image = frozenset(nabla(d, x) for x in stars[v])
            if q not in stars:
                stars[q] = image
                queue.append(q)
            elif stars[q] != image:
                # a connection of a torus graph never does this
                return None
    edges = frozenset(g.edge_id(d) for s in stars.values() for d in s)
    return Subgraph(frozenset(stars), edges)

def face_subgraphs(tg: TorusGraph, k: int) -> List[Subgraph]:
    """All connected k-valent subgraphs closed under the connection, k = 0..3"""
    assert k in (0, 1, 2, 3), "k must be between 0 and 3, got %r" % (k,)
    g = tg.graph
    if k == 0:
        return [Subgraph(frozenset([v]), frozenset()) for v in g.vertices]
    if k == 1:
        return [Subgraph(frozenset(g.endpoints(d)), frozenset([d])) for d, _ in g.edges()]
    if k == 3:
        return [Subgraph(frozenset(g.vertices), frozenset(d for d, _ in g.edges()))]
    found = {}
    for v in g.vertices:
        for pair in combinations(g.darts_at(v), 2):
            s = _closure(tg, v, pair)
            if s is not None:
                found.setdefault((min(s.vertices), s.edges), s)
    return [found[key] for key in sorted(found, key=lambda key: (key[0], sorted(key[1])))]

def poset_agrees(tg: TorusGraph) -> bool:
    """True iff the face subgraphs of each valence are exactly the faces of matching dimension"""
    levels = face_poset(tg.graph).level_sets()
    for k in range(4):
        mine = frozenset((s.vertices, s.edges) for s in face_subgraphs(tg, k))
        if mine != levels[3 - k]:
            return False
    return True
