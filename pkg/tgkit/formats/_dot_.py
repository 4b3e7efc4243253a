"""
Date: 261018

{Description: Graphviz DOT drawings of rotation graphs, torus graphs and decomposition
trees. Drawings only: DOT output is never read back}
"""

from __future__ import annotations

from typing import List

from tgkit.classify import DecompositionTree
from tgkit.graph import RotationGraph
from tgkit.torus import TorusGraph

def graph_to_dot(g: RotationGraph, name: str = "G") -> str:
    lines = ["graph %s {" % name]
    lines += ['  %d;' % v for v in g.vertices]
    lines += ['  %d -- %d [label="e%d"];' % (g.tail(d), g.tail(t), d) for d, t in g.edges()]
    lines.append("}")
    return "\n".join(lines)

def torus_graph_to_dot(tg: TorusGraph, name: str = "G") -> str:
    """Edges labelled by the labels at both ends, vertices by their orientation sign"""
    g = tg.graph
    lines = ["graph %s {" % name]
    for v in g.vertices:
        sign = "" if tg.sigma is None else " (%+d)" % tg.sigma[v]
        lines.append('  %d [label="%d%s"];' % (v, v, sign))
    for d, t in g.edges():
        lines.append('  %d -- %d [taillabel="%s", headlabel="%s"];' % (g.tail(d), g.tail(t), tg.axial[d], tg.axial[t]))
    lines.append("}")
    return "\n".join(lines)

def tree_to_dot(tree: DecompositionTree, name: str = "T") -> str:
    lines: List[str] = ["digraph %s {" % name]

    def walk(node) -> str:
        key = "n%d" % len(lines)
        if node.is_leaf:
            lines.append('  %s [shape=box, label="%s\\n%d vertices"];' % (key, node.leaf, node.leaf.vertex_count))
            return key
        lines.append('  %s [label="#"];' % key)
        for child in (node.left, node.right):
            lines.append("  %s -> %s;" % (key, walk(child)))
        return key

    walk(tree)
    lines.append("}")
    return "\n".join(lines)
