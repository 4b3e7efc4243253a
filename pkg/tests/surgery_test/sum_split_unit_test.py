"""
Date: 261018

{Description: unit tests for the connected sum and its inverse in tgkit/surgery}
"""

from itertools import combinations

import pytest

from tgkit._errors_ import InadmissibleSite, InvalidInput, NotACut, InvalidCap
from tgkit.graph import is_k_connected, components_without_edges
from tgkit.torus import validate_torus_graph, is_equivalent, flip_orientation
from tgkit.surgery import SumSite, make_site, find_sum_sites, connected_sum, split, find_splits
from tests.random_sums import attach

@pytest.fixture
def prism(simplex):
    # simplex # simplex is the triangular prism
    tg, _ = connected_sum(simplex, flip_orientation(simplex), make_site(simplex, 0, flip_orientation(simplex), 0))
    return tg

def test_make_site_pos(simplex): # positive control test
    other = flip_orientation(simplex)
    site = make_site(simplex, 0, other, 0)
    assert (site.p, site.q) == (0, 0)
    assert [d for d, _ in site.matching] == list(simplex.graph.darts_at(0))
    assert all(simplex.axial[d] == other.axial[c] for d, c in site.matching)

def test_make_site_neg(simplex): # negative control test
    with pytest.raises(InadmissibleSite): # orientations agree
        make_site(simplex, 0, simplex, 0)
    with pytest.raises(InadmissibleSite): # label sets differ
        make_site(simplex, 1, flip_orientation(simplex), 0)
    with pytest.raises(InvalidInput): # no orientation
        make_site(simplex.with_sigma(None), 0, simplex, 0)

def test_find_sum_sites_pos(simplex, sphere): # positive control test
    other = flip_orientation(simplex)
    sites = find_sum_sites(simplex, other)
    assert len(sites) == 4
    assert all(simplex.label_set(s.p) == other.label_set(s.q) for s in sites)
    assert find_sum_sites(simplex, simplex) == []
    # the sphere graph has a vertex of each sign, so it sums with itself
    assert [(s.p, s.q) for s in find_sum_sites(sphere, sphere)] == [(0, 1), (1, 0)]

def test_connected_sum_pos(simplex, prism): # positive control test
    assert prism.vertex_count == 6
    assert prism.graph.is_simple() and is_k_connected(prism.graph, 3)
    assert validate_torus_graph(prism)[0]
    other = flip_orientation(simplex)
    _, record = connected_sum(simplex, other, make_site(simplex, 0, other, 0))
    assert record.left_map[0] is None and record.right_map[0] is None
    assert sorted(v for v in record.left_map + record.right_map if v is not None) == list(range(6))
    assert record.sigma_p == -record.sigma_q
    assert len(record.cut) == 3
    assert all(a == b or a == -b for a, b in record.new_labels)

def test_sphere_sum_pos(sphere): # positive control test
    tg, _ = connected_sum(sphere, sphere, make_site(sphere, 0, sphere, 1))
    assert tg.vertex_count == 2
    assert validate_torus_graph(tg)[0]
    assert is_equivalent(tg, sphere) is not None

def test_connected_sum_neg(simplex): # negative control test
    other = flip_orientation(simplex)
    site = make_site(simplex, 0, other, 0)
    broken = SumSite(site.p, site.q, site.matching[:2])
    with pytest.raises(InadmissibleSite): # matching must cover the stars
        connected_sum(simplex, other, broken)

def test_split_round_trip_pos(simplex): # positive control test
    other = flip_orientation(simplex)
    tg, record = connected_sum(simplex, other, make_site(simplex, 0, other, 0))
    first, second, back = split(tg, record.cut)
    assert (first.vertex_count, second.vertex_count) == (4, 4)
    assert validate_torus_graph(first)[0] and validate_torus_graph(second)[0]
    assert first.sigma[back.p] == back.sigma_p == -second.sigma[back.q]
    assert first.label_set(back.p) == second.label_set(back.q)
    assert back.left_map[-1] is None and back.right_map[-1] is None
    again, _ = connected_sum(first, second, make_site(first, back.p, second, back.q))
    assert is_equivalent(again, tg) is not None

def test_split_first_side_pos(prism): # positive control test
    cut = find_splits(prism)[0]
    _, _, record = split(prism, cut, first_side=5)
    assert 5 in record.left_map and 5 not in record.right_map
    _, _, record = split(prism, cut)
    assert 0 in record.left_map

def _keeps_sigma(tg, piece, vertex_map):
    return all(w is None or piece.sigma[u] == tg.sigma[w] for u, w in enumerate(vertex_map))

def test_split_keeps_orientation_pos(prism): # positive control test
    cut = find_splits(prism)[0]
    caps = set()
    _, _, record = split(prism, cut)
    other_side = record.right_map[0]
    for side in (None, other_side):
        first, second, record = split(prism, cut, first_side=side)
        assert _keeps_sigma(prism, first, record.left_map)
        assert _keeps_sigma(prism, second, record.right_map)
        assert first.sigma[record.p] == record.sigma_p == -second.sigma[record.q]
        caps.add(record.sigma_p)
    # the same cap is first in one split and second in the other
    assert caps == {1, -1}

def test_find_splits_pos(prism, simplex, sb, cube): # positive control test
    assert find_splits(simplex) == []
    assert find_splits(sb) == []
    assert find_splits(cube) == []
    assert len(find_splits(prism)) == 1

def _all_splits(tg):
    # every triple of edges, tried one by one
    g = tg.graph
    cuts = []
    for cut in combinations([d for d, _ in g.edges()], 3):
        sides = components_without_edges(g, cut)
        if len(sides) != 2 or min(len(s) for s in sides) < 2:
            continue
        try:
            split(tg, cut)
        except (NotACut, InvalidCap):
            continue
        cuts.append(cut)
    return cuts

def test_find_splits_exhaustive_pos(prism, cube, simplex, simplex_sb_simplex): # positive control test
    chain, _ = attach(simplex, 0, 'SB', 1, 2, -1)
    chain, _ = attach(chain, 3, 'Simplex')
    chain, _ = attach(chain, 1, 'SB', -1, 0, 1)
    for tg in (prism, cube, simplex_sb_simplex, chain):
        assert find_splits(tg) == _all_splits(tg)
    # the cuts around both simplex ends
    assert len(find_splits(simplex_sb_simplex)) >= 2

def _triangle(tg):
    # the three edges of one facet of the tetrahedron
    g = tg.graph
    return [g.edge_id(d) for d in g.faces[0].darts]

def test_split_neg(prism, simplex): # negative control test
    with pytest.raises(NotACut): # fewer than three distinct edges
        split(prism, [0, 0, 0])
    with pytest.raises(NotACut): # the tetrahedron stays connected without a triangle
        split(simplex, _triangle(simplex))
    with pytest.raises(InvalidInput): # no orientation
        split(prism.with_sigma(None), find_splits(prism)[0])
