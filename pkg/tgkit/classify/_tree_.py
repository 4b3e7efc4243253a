"""
Date: 261018

{Description: classification of oriented torus graphs into a tree of connected sums of
basic pieces, and the way back: folding a tree with connected_sum}
"""

from __future__ import annotations

import logging
import warnings
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import pandas as pd

from tgkit._errors_ import InvalidInput
from tgkit.classify._leaf_ import Leaf, recognize_basic
from tgkit.classify._reduce_ import reduce_multi_edge, reduce_singular_facet
from tgkit.surgery import GluingRecord, connected_sum, make_site
from tgkit.torus import TorusGraph, validate_torus_graph, synthesize_orientation
from tgkit.torus import from_characteristic, recover_characteristic, is_equivalent

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class DecompositionTree:
    """Either a leaf, or a node whose record splits its graph into left and right"""
    leaf: Optional[Leaf] = None
    left: Optional["DecompositionTree"] = None
    right: Optional["DecompositionTree"] = None
    record: Optional[GluingRecord] = None

    def __post_init__(self):
        assert (self.leaf is None) != (self.record is None), "a tree is a leaf or a node, not both"

    @property
    def is_leaf(self):
        return self.leaf is not None

    @property
    def internal_count(self):
        return 0 if self.is_leaf else 1 + self.left.internal_count + self.right.internal_count

def _node(left, right, record):
    return DecompositionTree(left=left, right=right, record=record)

def _classify(tg: TorusGraph) -> DecompositionTree:
    leaf = recognize_basic(tg)
    if leaf is not None:
        logger.debug("%d vertices: %s", tg.vertex_count, leaf)
        return DecompositionTree(leaf=leaf)
    if tg.graph.multiple_edges():
        sb, rest, record = reduce_multi_edge(tg)
        return _node(_classify(rest), DecompositionTree(leaf=sb), record)
    first, sb, second, records = reduce_singular_facet(tg)
    if sb is None:
        return _node(_classify(first), _classify(second), records[0])
    middle = _node(_classify(second), DecompositionTree(leaf=sb), records[1])
    return _node(_classify(first), middle, records[0])

def classify(tg: TorusGraph) -> DecompositionTree:
    """Decompose a torus graph into connected sums of S6, Simplex, SB and QT pieces

    Double edges are split off first, then singular facets, recursing on the pieces
    until every piece is basic. A missing orientation is synthesized with a warning.

    Parameters
    ----------
        tg : TorusGraph
    Returns
    -------
    DecompositionTree
    """
    if tg.sigma is None:
        warnings.warn("torus graph has no orientation; synthesizing one from the labels", UserWarning)
        tg = synthesize_orientation(tg)
    ok, diagnostics = validate_torus_graph(tg)
    if not ok:
        raise InvalidInput("not a valid oriented torus graph: %s" % diagnostics[0])
    tree = _classify(tg)
    logger.info("classified %d vertices: %s", tg.vertex_count, tree_summary(tree))
    return tree

def _pull_back(record: GluingRecord, sum_record: GluingRecord, left_map, right_map, n) -> Dict[int, int]:
    """Vertices of the split graph -> vertices of the re-summed graph"""
    out = {}
    for u, w in enumerate(record.left_map):
        if w is not None:
            out[w] = sum_record.left_map[left_map[u]]
    for u, w in enumerate(record.right_map):
        if w is not None:
            out[w] = sum_record.right_map[right_map[u]]
    assert len(out) == n, "fold lost vertices"
    return out

def fold_tree(tree: DecompositionTree) -> Tuple[TorusGraph, Dict[int, int]]:
    """Re-assemble a tree with connected_sum

    Returns the folded torus graph and the map from vertices of the classified graph to
    vertices of the folded one.
    """
    if tree.is_leaf:
        tg = tree.leaf.witness
        return tg, {v: v for v in tg.graph.vertices}
    rec = tree.record
    left, left_map = fold_tree(tree.left)
    right, right_map = fold_tree(tree.right)
    site = make_site(left, left_map[rec.p], right, right_map[rec.q])
    tg, sum_record = connected_sum(left, right, site)
    n = len(rec.left_map) + len(rec.right_map) - 2
    return tg, _pull_back(rec, sum_record, left_map, right_map, n)

def tree_leaves(tree: DecompositionTree) -> List[Leaf]:
    if tree.is_leaf:
        return [tree.leaf]
    return tree_leaves(tree.left) + tree_leaves(tree.right)

def tree_summary(tree: DecompositionTree) -> str:
    """'S6' for the sphere, otherwise 'QTxk SBxl' (Simplex leaves count as QT)"""
    counts = Counter('QT' if leaf.kind == 'Simplex' else leaf.kind for leaf in tree_leaves(tree))
    if set(counts) == {'S6'}:
        return 'S6'
    summary = "QT×%d SB×%d" % (counts['QT'], counts['SB'])
    if counts['S6']:
        summary += " S6×%d" % counts['S6']
    return summary

def leaf_frame(tree: DecompositionTree) -> pd.DataFrame:
    """One row per leaf: kind, eps, a, b and vertex count"""
    rows = []
    for leaf in tree_leaves(tree):
        eps, a, b = leaf.params if leaf.params is not None else (None, None, None)
        rows.append({'kind': leaf.kind, 'eps': eps, 'a': a, 'b': b, 'vertices': leaf.vertex_count})
    return pd.DataFrame(rows, columns=['kind', 'eps', 'a', 'b', 'vertices'])

def distinct_leaves(tree: DecompositionTree, dedup: str = 'exact') -> List[Leaf]:
    """Leaves up to equivalence of their torus graphs

    'exact' compares labels as they are, 'lifts' first normalizes the signs of the
    facet vectors, so leaves differing only in omniorientation count once.
    """
    assert dedup in ('exact', 'lifts'), "dedup must be 'exact' or 'lifts', got %r" % (dedup,)
    kept, keys = [], []
    for leaf in tree_leaves(tree):
        tg = leaf.witness
        if dedup == 'lifts':
            tg = from_characteristic(tg.graph, recover_characteristic(tg).canonical_lift(), oriented=False)
        if not any(is_equivalent(tg, other) is not None for other in keys):
            kept.append(leaf)
            keys.append(tg)
    return kept
