"""
Date: 261018

{Description: the basic torus graphs: the 2-vertex sphere graph, the tetrahedral simplex graph,
the 4-vertex double-edge family SB(eps, a, b), the cube product graph and the 8-vertex
sum simplex # SB # simplex}
"""

from __future__ import annotations

from typing import Sequence

from tgkit.graph import theta_graph, k4_graph, sb_graph, cube_graph
from tgkit.lattice import LatticeCovector, LatticeVector, DUAL_E1, DUAL_E2, DUAL_E3, E1, E2, E3, dual_basis
from tgkit.torus._characteristic_ import CharacteristicData
from tgkit.torus._torus_graph_ import TorusGraph, from_characteristic, flip_orientation

def sphere_graph(alpha: LatticeCovector = DUAL_E1, beta: LatticeCovector = DUAL_E2,
                 gamma: LatticeCovector = DUAL_E3) -> TorusGraph:
    """Theta graph with the labels alpha, beta, gamma on both ends of the three edges

    The labels are not checked, so degenerate triples give an invalid torus graph.
    """
    g = theta_graph()
    axial = [None] * 6
    for d, label in zip(g.darts_at(0), (alpha, beta, gamma)):
        axial[d] = axial[g.twin(d)] = label
    return TorusGraph(g, axial, (1, -1))

def simplex_graph(basis: Sequence[LatticeCovector] = (DUAL_E1, DUAL_E2, DUAL_E3)) -> TorusGraph:
    """The tetrahedron torus graph whose vertex 0 carries the given basis, in rotation order"""
    g = k4_graph()
    w = dual_basis(basis)
    lam = [None] * len(g.faces)
    for d, vec in zip(g.darts_at(0), w):
        lam[g.normal_facet(d)] = vec
    lam[lam.index(None)] = -(w[0] + w[1] + w[2])
    return from_characteristic(g, CharacteristicData(tuple(lam)))

def sb_torus_graph(eps: int = 1, a: int = 0, b: int = 0) -> TorusGraph:
    """The double-edge torus graph SB(eps, a, b)

    Vertices 0 1 carry eps*alpha, a*alpha + beta, b*alpha + gamma and vertices 2 3
    carry alpha, beta, gamma, where alpha beta gamma is the standard dual basis.
    """
    assert eps in (1, -1), "eps must be +1 or -1, got %r" % (eps,)
    g = sb_graph()
    lam = [None] * len(g.faces)
    lam[g.face_of[9]] = E1
    lam[g.face_of[3]] = E2
    lam[g.face_of[0]] = E3
    lam[g.face_of[1]] = LatticeVector.of(eps, -eps * a, -eps * b)
    return from_characteristic(g, CharacteristicData(tuple(lam)))

def cube_torus_graph() -> TorusGraph:
    """(CP^1)^3: the cube with e1, e2, e3 on the opposite facet pairs"""
    g = cube_graph()
    axis = (E1, E2, E3)
    lam = []
    for f in g.faces:
        bit = next(i for i in range(3) if len({(v >> i) & 1 for v in f.vertices}) == 1)
        lam.append(axis[bit])
    return from_characteristic(g, CharacteristicData(tuple(lam)))

def _clash(tg, v, other, w):
    return other if tg.sigma[v] != other.sigma[w] else flip_orientation(other)

def simplex_sb_simplex_graph(eps: int = 1, a: int = 0, b: int = 0) -> TorusGraph:
    """simplex # SB(eps, a, b) # simplex, summed at one vertex of each double-edge pair of SB"""
    from tgkit.surgery import connected_sum, make_site

    sb = sb_torus_graph(eps, a, b)
    first = _clash(sb, 0, simplex_graph(sb.labels_at(0)), 0)
    partial, record = connected_sum(first, sb, make_site(first, 0, sb, 0))
    v = record.right_map[2]
    second = _clash(partial, v, simplex_graph(partial.labels_at(v)), 0)
    out, _ = connected_sum(partial, second, make_site(partial, v, second, 0))
    return out
