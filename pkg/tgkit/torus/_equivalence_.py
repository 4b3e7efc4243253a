"""
Date: 261018

{Description: equivalence of torus graphs. Two torus graphs are equivalent when a graph
isomorphism carries every label to the same label; twisted equivalence allows an
automorphism of the lattice applied to all labels at once}
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Dict, Optional

from tgkit.lattice import LatticeCovector, change_of_basis
from tgkit.torus._torus_graph_ import TorusGraph

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class Isomorphism:
    vertex_map: Dict[int, int]
    dart_map: Dict[int, int]
    # integer matrix applied to the labels, None for the identity
    matrix: Optional[tuple] = None
    # +1 if sigma is preserved, -1 if reversed, None when orientations were ignored
    orientation: Optional[int] = None

def _as_rows(m):
    return tuple(tuple(int(m[i, j]) for j in range(3)) for i in range(3))

def _apply_rows(rows, a):
    return LatticeCovector(tuple(sum(r[j] * a[j] for j in range(3)) for r in rows))

def _propagate(tg1: TorusGraph, tg2: TorusGraph, v0: int, w0: int,
               label_map: Callable[[LatticeCovector], LatticeCovector]) -> Optional[Isomorphism]:
    g1, g2 = tg1.graph, tg2.graph
    vmap = {v0: w0}
    used = {w0}
    dmap = {}
    queue = deque([v0])
    while queue:
        v = queue.popleft()
        w = vmap[v]
        at_w = {tg2.axial[e]: e for e in g2.darts_at(w)}
        for d in g1.darts_at(v):
            e = at_w.get(label_map(tg1.axial[d]))
            if e is None:
                return None
            dmap[d] = e
            hv, hw = g1.head(d), g2.head(e)
            if hv in vmap:
                if vmap[hv] != hw:
                    return None
            elif hw in used:
                return None
            else:
                vmap[hv] = hw
                used.add(hw)
                queue.append(hv)
    if len(vmap) != g1.vertex_count:
        return None
    if any(dmap[g1.twin(d)] != g2.twin(dmap[d]) for d in g1.darts):
        return None
    return Isomorphism(vmap, dmap)

def _orientation_sign(tg1, tg2, iso):
    signs = {tg1.sigma[v] * tg2.sigma[w] for v, w in iso.vertex_map.items()}
    return signs.pop() if len(signs) == 1 else None

def is_equivalent(tg1: TorusGraph, tg2: TorusGraph, twisted: bool = False,
                  oriented: bool = False) -> Optional[Isomorphism]:
    """An isomorphism matching the labels, or None

    Parameters
    ----------
        tg1, tg2 : TorusGraph
        twisted : bool
            allow one lattice automorphism applied to all labels of tg1
        oriented : bool
            additionally require sigma to be preserved up to one global sign
    Returns
    -------
    Isomorphism or None
    """
    g1, g2 = tg1.graph, tg2.graph
    if (g1.vertex_count, len(g1.faces)) != (g2.vertex_count, len(g2.faces)):
        return None
    if oriented and (tg1.sigma is None or tg2.sigma is None):
        raise ValueError("oriented comparison needs sigma on both torus graphs")
    if not twisted and sorted(map(sorted, (tg1.labels_at(v) for v in g1.vertices))) != \
            sorted(map(sorted, (tg2.labels_at(v) for v in g2.vertices))):
        return None

    v0 = 0
    src = tg1.labels_at(v0)
    for w0 in g2.vertices:
        if twisted:
            candidates = []
            for perm in permutations(tg2.labels_at(w0)):
                rows = _as_rows(change_of_basis(src, perm))
                candidates.append((rows, lambda a, rows=rows: _apply_rows(rows, a)))
        else:
            if tg1.label_set(v0) != tg2.label_set(w0):
                continue
            candidates = [(None, lambda a: a)]
        for rows, label_map in candidates:
            iso = _propagate(tg1, tg2, v0, w0, label_map)
            if iso is None:
                continue
            sign = None
            if oriented:
                sign = _orientation_sign(tg1, tg2, iso)
                if sign is None:
                    continue
            logger.debug("torus graphs equivalent via %s, vertex 0 -> %d", "twist" if rows else "identity", w0)
            return Isomorphism(iso.vertex_map, iso.dart_map, rows, sign)
    return None
