"""
Date: 261018

{Description: exhaustive enumeration of omnioriented characteristic data with bounded
coordinates on a nice rotation graph, by backtracking over the facets}
"""

from __future__ import annotations

import logging
import warnings
from itertools import product
from typing import Dict, Iterator, List, Optional

import numpy as np

from tgkit._errors_ import InvalidInput
from tgkit.graph import RotationGraph, validate_nice
from tgkit.lattice import LatticeVector
from tgkit.torus import CharacteristicData, from_characteristic, is_equivalent

logger = logging.getLogger(__name__)

DEDUP_MODES = (None, 'exact', 'lifts')

# raw search space above which a warning is issued
_LARGE_SEARCH = 10 ** 12

def candidate_grid(bound: int) -> np.ndarray:
    """Primitive integer vectors with coordinates in [-bound, bound], one per row"""
    grid = np.array(list(product(range(-bound, bound + 1), repeat=3)), dtype=np.int64)
    return grid[np.gcd.reduce(np.abs(grid), axis=1) == 1]

def _facet_order(g: RotationGraph) -> List[int]:
    # breadth first over facets sharing an edge, so that vertices are closed early
    order, seen = [0], {0}
    i = 0
    while i < len(order):
        for d in g.faces[order[i]].darts:
            f = g.face_of[g.twin(d)]
            if f not in seen:
                seen.add(f)
                order.append(f)
        i += 1
    return order

def _dedup_key(tg):
    return tuple(sorted(tuple(sorted(tg.labels_at(v))) for v in tg.graph.vertices))

def enumerate_characteristic(g: RotationGraph, bound: int, dedup: Optional[str] = None,
                             shards: int = 1, shard: int = 0, limit: Optional[int] = None,
                             normalized: bool = False) -> Iterator[CharacteristicData]:
    """Stream all omnioriented characteristic data with coordinates in [-bound, bound]

    Parameters
    ----------
        g : RotationGraph
            a nice rotation graph
        bound : int
            largest absolute value of a coordinate
        dedup : None, 'exact' or 'lifts'
            skip data whose torus graph is equivalent to one already produced; 'lifts'
            compares the sign-normalized data, so all omniorientations of one
            unoriented function count once
        shards, shard : int
            produce only the part of the search whose first facet has candidate
            index congruent to shard modulo shards
        limit : int, optional
            stop after this many results
        normalized : bool
            pin the facets around vertex 0, in rotation order, to the standard basis;
            any characteristic data is the unimodular image of normalized data
    Returns
    -------
    iterator of CharacteristicData
    """
    assert bound >= 0, "bound must be non-negative, got %r" % (bound,)
    assert shards >= 1 and 0 <= shard < shards, "need 0 <= shard < shards"
    assert dedup in DEDUP_MODES, "dedup must be one of %s" % (DEDUP_MODES,)
    ok, diagnostics = validate_nice(g)
    if not ok:
        raise InvalidInput("characteristic data needs a nice graph: %s" % diagnostics[0])
    if bound == 0:
        return

    grid = candidate_grid(bound)
    order = _facet_order(g)
    position = {f: k for k, f in enumerate(order)}
    # vertices whose last facet in the order is order[k], with their two earlier facets
    closing: Dict[int, List] = {k: [] for k in range(len(order))}
    for v in g.vertices:
        fs = sorted(g.facets_at(v), key=position.get)
        closing[position[fs[2]]].append((fs[0], fs[1]))
    pinned: Dict[int, int] = {}
    if normalized:
        for f, e in zip(g.facets_at(0), np.eye(3, dtype=np.int64)):
            pinned[f] = int(np.nonzero((grid == e).all(axis=1))[0][0])
    free = [k for k, f in enumerate(order) if f not in pinned]
    # the shard filter applies to the first facet that is searched at all
    sharded = free[0] if free else 0
    space = float(len(grid)) ** len(free)
    if space > _LARGE_SEARCH:
        warnings.warn("enumerating up to %.3g assignments; consider a smaller bound or sharding" % space, UserWarning)
    logger.debug("%d candidates per facet, %d facets, shard %d of %d", len(grid), len(order), shard, shards)

    assigned: Dict[int, np.ndarray] = {}
    seen: Dict[tuple, list] = {}
    produced = 0

    def admissible(k):
        mask = np.ones(len(grid), dtype=bool)
        if order[k] in pinned:
            mask &= np.arange(len(grid)) == pinned[order[k]]
        if k == sharded:
            mask &= np.arange(len(grid)) % shards == shard
        for f1, f2 in closing[k]:
            c = np.cross(assigned[f1], assigned[f2])
            mask &= np.abs(grid @ c) == 1
        return np.nonzero(mask)[0]

    def accept(lam):
        if dedup is None:
            return True
        key_lam = lam if dedup == 'exact' else lam.canonical_lift()
        tg = from_characteristic(g, key_lam, oriented=False)
        bucket = seen.setdefault(_dedup_key(tg), [])
        if any(is_equivalent(tg, other) is not None for other in bucket):
            return False
        bucket.append(tg)
        return True

    def search(k):
        nonlocal produced
        if k == len(order):
            lam = CharacteristicData(tuple(LatticeVector(tuple(int(x) for x in assigned[f])) for f in range(len(order))))
            if accept(lam):
                produced += 1
                yield lam
            return
        f = order[k]
        for i in admissible(k):
            assigned[f] = grid[i]
            yield from search(k + 1)
            if limit is not None and produced >= limit:
                return
        assigned.pop(f, None)

    yield from search(0)
