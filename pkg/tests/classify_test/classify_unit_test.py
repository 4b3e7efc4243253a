"""
Date: 261018

{Description: unit tests for basic pieces, the reduction steps and the decomposition tree
in tgkit/classify}
"""

import random

import pytest

from tgkit._errors_ import InvalidInput, NoMultipleEdge, Already3Connected, NotSBShaped
from tgkit.classify import Leaf, recognize_basic, normalize_sb_params, sb_normal_form
from tgkit.classify import reduce_multi_edge, reduce_singular_facet
from tgkit.classify import classify, fold_tree, tree_leaves, tree_summary, leaf_frame, distinct_leaves
from tgkit.lattice import DUAL_E1, DUAL_E2, random_unimodular
from tgkit.surgery import connected_sum, make_site
from tgkit.torus import sphere_graph, simplex_graph, sb_torus_graph, flip_orientation, is_equivalent

@pytest.fixture(scope="module")
def simplex_sb():
    # simplex # SB(1, 0, 0): 6 vertices, one double edge left
    sb = sb_torus_graph(1, 0, 0)
    other = simplex_graph(sb.labels_at(0))
    if other.sigma[0] == sb.sigma[0]:
        other = flip_orientation(other)
    tg, _ = connected_sum(other, sb, make_site(other, 0, sb, 0))
    return tg

@pytest.fixture(scope="module")
def chain_tree(simplex_sb_simplex):
    return classify(simplex_sb_simplex)

@pytest.mark.parametrize("params, expected", [
    ((1, 0, 0), (1, 0, 0)),
    ((1, 2, 3), (1, -3, -2)),
    ((-1, 2, 3), (-1, 2, 3)),
    ((-1, -4, 1), (-1, -4, 1)),
])
def test_sb_normal_form_pos(params, expected): # positive control test
    assert sb_normal_form(*params) == expected

@pytest.mark.parametrize("eps", [1, -1])
def test_normalize_sb_params_pos(eps): # positive control test
    for a in range(-3, 4):
        for b in range(-3, 4):
            assert normalize_sb_params(sb_torus_graph(eps, a, b)) == sb_normal_form(eps, a, b)

def test_normalize_sb_params_twisted_pos(sb): # positive control test
    expected = normalize_sb_params(sb, certify=True)
    assert expected == sb_normal_form(1, 2, -1)
    rng = random.Random(3)
    for _ in range(5):
        assert normalize_sb_params(sb.transform(random_unimodular(rng))) == expected

def test_normalize_sb_params_neg(simplex): # negative control test
    with pytest.raises(NotSBShaped):
        normalize_sb_params(simplex)

def test_recognize_basic_pos(sphere, simplex, sb, cube): # positive control test
    assert recognize_basic(sphere).kind == 'S6'
    assert recognize_basic(sphere).basis == sphere.labels_at(0)
    assert recognize_basic(simplex).kind == 'Simplex'
    leaf = recognize_basic(sb)
    assert leaf.kind == 'SB' and leaf.params == (1, -2, 1)
    assert str(leaf) == "SB(+1,-2,1)"
    assert recognize_basic(cube).kind == 'QT'

def test_recognize_basic_neg(simplex_sb, simplex_sb_simplex): # negative control test
    assert recognize_basic(simplex_sb) is None
    assert recognize_basic(simplex_sb_simplex) is None
    with pytest.raises(AssertionError): # unknown kind
        Leaf('T3', simplex_sb)

def test_reduce_multi_edge_pos(simplex_sb): # positive control test
    leaf, rest, record = reduce_multi_edge(simplex_sb)
    assert leaf.kind == 'SB' and leaf.vertex_count == 4
    assert rest.vertex_count == 4 and rest.graph.is_simple()
    assert len(record.left_map) == rest.vertex_count

def test_reduce_multi_edge_neg(sb, cube): # negative control test
    with pytest.raises(InvalidInput): # fewer than 6 vertices
        reduce_multi_edge(sb)
    with pytest.raises(NoMultipleEdge):
        reduce_multi_edge(cube)

def test_reduce_singular_facet_pos(simplex_sb_simplex): # positive control test
    first, leaf, second, records = reduce_singular_facet(simplex_sb_simplex)
    assert leaf is not None and leaf.kind == 'SB'
    assert (first.vertex_count, second.vertex_count) == (4, 4)
    assert len(records) == 2

def test_reduce_singular_facet_neg(sb, cube): # negative control test
    with pytest.raises(InvalidInput): # double edges are handled by reduce_multi_edge
        reduce_singular_facet(sb)
    with pytest.raises(Already3Connected):
        reduce_singular_facet(cube)

@pytest.mark.parametrize("fixture, summary", [
    ("sphere", "S6"),
    ("simplex", "QT×1 SB×0"),
    ("sb", "QT×0 SB×1"),
    ("cube", "QT×1 SB×0"),
    ("simplex_sb", "QT×1 SB×1"),
])
def test_classify_basic_pos(request, fixture, summary): # positive control test
    tree = classify(request.getfixturevalue(fixture))
    assert tree_summary(tree) == summary

def test_classify_pos(chain_tree, simplex_sb_simplex): # positive control test
    assert tree_summary(chain_tree) == "QT×2 SB×1"
    assert chain_tree.internal_count == 2
    leaves = tree_leaves(chain_tree)
    assert sorted(leaf.kind for leaf in leaves) == ['SB', 'Simplex', 'Simplex']
    assert sum(leaf.vertex_count for leaf in leaves) - 2 * chain_tree.internal_count == simplex_sb_simplex.vertex_count

def test_fold_tree_pos(chain_tree, simplex_sb_simplex): # positive control test
    folded, vertex_map = fold_tree(chain_tree)
    assert folded.vertex_count == 8
    assert sorted(vertex_map) == list(range(8))
    assert sorted(vertex_map.values()) == list(range(8))
    assert is_equivalent(folded, simplex_sb_simplex) is not None

def test_leaf_frame_pos(chain_tree): # positive control test
    frame = leaf_frame(chain_tree)
    assert list(frame.columns) == ['kind', 'eps', 'a', 'b', 'vertices']
    assert len(frame) == 3
    assert (frame['vertices'] == 4).all()

def test_distinct_leaves_pos(chain_tree): # positive control test
    kinds = {leaf.kind for leaf in distinct_leaves(chain_tree, 'exact')}
    assert kinds == {'SB', 'Simplex'}

def test_distinct_leaves_neg(chain_tree): # negative control test
    with pytest.raises(AssertionError):
        distinct_leaves(chain_tree, 'twisted')

def test_classify_unoriented_pos(simplex): # positive control test
    with pytest.warns(UserWarning, match="no orientation"):
        tree = classify(simplex.with_sigma(None))
    assert tree.is_leaf and tree.leaf.kind == 'Simplex'

def test_classify_neg(): # negative control test
    with pytest.raises(InvalidInput): # determinant 0 at both vertices
        classify(sphere_graph(DUAL_E1, DUAL_E2, DUAL_E1 + DUAL_E2))
