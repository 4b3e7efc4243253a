"""
Date: 261018

{Description: unit tests for characteristic data, torus graphs, the connection and
orientations in tgkit/torus}
"""

import pytest

from tgkit._errors_ import InvalidInput, NotUnimodular, InconsistentFacetVector, NotOrientable
from tgkit.graph import theta_graph, k4_graph, cube_graph
from tgkit.lattice import LatticeVector, LatticeCovector, SignClass, E1, E2, E3, DUAL_E1, DUAL_E2, DUAL_E3, multiple_of
from tgkit.torus import CharacteristicData, is_characteristic, lift_signs, omniorientations
from tgkit.torus import TorusGraph, validate_torus_graph, from_characteristic, recover_characteristic
from tgkit.torus import synthesize_orientation, orientation_from_embedding, flip_orientation
from tgkit.torus import sphere_graph, simplex_graph, sb_torus_graph, cube_torus_graph

STANDARD = CharacteristicData.of([E1, E2, E3])

def test_characteristic_pos(): # positive control test
    ok, diagnostics = is_characteristic(theta_graph(), STANDARD)
    assert ok and diagnostics == []
    assert STANDARD.oriented
    assert not STANDARD.unoriented().oriented
    assert STANDARD.unoriented().vector(0) == E1
    assert CharacteristicData.of([-E1, E2, LatticeVector.of(0, -1, 1)]).canonical_lift() == \
        CharacteristicData.of([E1, E2, LatticeVector.of(0, 1, -1)])

def test_characteristic_neg(): # negative control test
    ok, diagnostics = is_characteristic(theta_graph(), CharacteristicData.of([E1, E2, E1 + E2]))
    assert not ok
    assert [d.where for d in diagnostics] == ['vertex 0', 'vertex 1']
    ok, diagnostics = is_characteristic(theta_graph(), CharacteristicData.of([E1, E2]))
    assert not ok and diagnostics[0].check == 'facet-count'

def test_lift_signs_pos(): # positive control test
    assert lift_signs(STANDARD, [-1, 1, -1]) == CharacteristicData.of([-E1, E2, -E3])
    lifts = list(omniorientations(STANDARD.unoriented()))
    assert len(lifts) == 8
    assert len(set(lifts)) == 8
    assert all(is_characteristic(theta_graph(), lam)[0] for lam in lifts)

def test_lift_signs_neg(): # negative control test
    with pytest.raises(AssertionError): # one sign per facet
        lift_signs(STANDARD, [1, 1])

def test_from_characteristic_pos(): # positive control test
    tg = from_characteristic(theta_graph(), STANDARD)
    assert validate_torus_graph(tg)[0]
    # dart 0 lies on facets 0 and 1, its normal facet is 2
    assert tg.label(0) == DUAL_E3
    assert tg.sigma == orientation_from_embedding(theta_graph(), STANDARD)
    assert from_characteristic(theta_graph(), STANDARD, oriented=False).sigma is None

def test_from_characteristic_neg(): # negative control test
    with pytest.raises(InvalidInput): # sign classes must be lifted first
        from_characteristic(theta_graph(), STANDARD.unoriented())
    with pytest.raises(InvalidInput): # wrong number of facet vectors
        from_characteristic(theta_graph(), CharacteristicData.of([E1, E2]))
    with pytest.raises(NotUnimodular):
        from_characteristic(theta_graph(), CharacteristicData.of([E1, E2, E1 + E2]))

def test_duality_round_trip_pos(cube): # positive control test
    lam = recover_characteristic(cube)
    assert is_characteristic(cube_graph(), lam)[0]
    assert from_characteristic(cube_graph(), lam) == cube
    lam = CharacteristicData.of([E1, E2, E3, LatticeVector.of(-1, -1, -1)])
    assert recover_characteristic(from_characteristic(k4_graph(), lam)) == lam

def test_recover_characteristic_neg(sphere): # negative control test
    g = sphere.graph
    axial = list(sphere.axial)
    # change the labels at vertex 1 only: its dual basis no longer matches vertex 0
    for d in g.darts_at(1):
        axial[d] = axial[d] + DUAL_E1 if axial[d] != DUAL_E1 else axial[d]
    with pytest.raises(InconsistentFacetVector):
        recover_characteristic(TorusGraph(g, axial))

@pytest.mark.parametrize("make", [sphere_graph, simplex_graph, sb_torus_graph, cube_torus_graph])
def test_basic_graphs_valid_pos(make): # positive control test
    ok, diagnostics = validate_torus_graph(make())
    assert ok, diagnostics

def test_simplex_basis_pos(): # positive control test
    basis = (LatticeCovector.of(1, 1, 0), DUAL_E2, LatticeCovector.of(0, 1, 1))
    tg = simplex_graph(basis)
    assert tg.labels_at(0) == basis
    assert validate_torus_graph(tg)[0]

def test_degenerate_sphere_neg(): # negative control test
    tg = sphere_graph(DUAL_E1, DUAL_E2, DUAL_E1 + DUAL_E2)
    ok, diagnostics = validate_torus_graph(tg)
    assert not ok
    assert [(d.check, d.where) for d in diagnostics] == [('axiom-2', 'vertex 0'), ('axiom-2', 'vertex 1')]

def test_validate_neg(sphere, simplex): # negative control test
    ok, diagnostics = validate_torus_graph(flip_orientation(sphere).with_sigma((1, 1)))
    assert not ok and {d.check for d in diagnostics} == {'orientation'}
    axial = list(simplex.axial)
    axial[0] = axial[0] + axial[1]
    ok, diagnostics = validate_torus_graph(TorusGraph(simplex.graph, axial, simplex.sigma))
    assert not ok and diagnostics[0].check == 'axiom-1'

def test_connection_pos(simplex, cube): # positive control test
    for tg in (simplex, cube):
        g, nabla = tg.graph, tg.connection
        for d in g.darts:
            assert nabla(d, d) == g.twin(d)
            for e in g.darts_at(g.tail(d)):
                x = nabla(d, e)
                assert g.tail(x) == g.head(d)
                assert nabla(g.twin(d), x) == e
                assert multiple_of(tg.axial[x] - tg.axial[e], tg.axial[d]) is not None

def test_synthesize_orientation_pos(simplex, sb): # positive control test
    for tg in (simplex, sb):
        found = synthesize_orientation(tg.with_sigma(None))
        assert found.sigma[0] == 1
        assert found.sigma in (tg.sigma, tuple(-s for s in tg.sigma))
        assert validate_torus_graph(found)[0]

def test_synthesize_orientation_neg(sphere): # negative control test
    g = sphere.graph
    axial = list(sphere.axial)
    d = g.darts_at(0)[0]
    axial[g.twin(d)] = axial[d] + DUAL_E2
    with pytest.raises(NotOrientable):
        synthesize_orientation(TorusGraph(g, axial))

def test_flip_orientation_pos(simplex): # positive control test
    flipped = flip_orientation(simplex)
    assert flipped.sigma == tuple(-s for s in simplex.sigma)
    assert validate_torus_graph(flipped)[0]
    assert flip_orientation(flipped) == simplex

def test_flip_orientation_neg(simplex): # negative control test
    with pytest.raises(AssertionError):
        flip_orientation(simplex.with_sigma(None))

def test_sign_class_data_pos(): # positive control test
    lam = CharacteristicData.of([SignClass(E1), SignClass(-E2), SignClass(E3)])
    assert not lam.oriented
    assert is_characteristic(theta_graph(), lam)[0]
    assert lam.vector(1) == E2
