"""
Date: 261018

{Description: unit tests for rotation graphs, face walks and the face poset in tgkit/graph}
"""

import pytest

from tgkit._errors_ import NotTrivalent, Disconnected, NotSphere, InvalidInput
from tgkit.graph import build_rotation_graph, from_neighbor_rotations, validate_nice, face_poset
from tgkit.graph import theta_graph, k4_graph, prism_graph, cube_graph, sb_graph

def dumbbell_graph():
    # two loops joined by a bridge
    return build_rotation_graph(2, [[0, 1, 2], [3, 4, 5]], [[0, 1], [3, 4], [2, 5]])

def test_theta_faces_pos(): # positive control test
    g = theta_graph()
    assert [f.darts for f in g.faces] == [(0, 5), (1, 3), (2, 4)]
    assert g.euler_characteristic() == 2
    assert g.facets_at(0) == (0, 1, 2)
    assert g.facets_of_edge(0) == (0, 1)
    assert g.normal_facet(0) == 2
    assert g.multiple_edges() == [[0, 1, 2]]
    assert not g.is_simple()

@pytest.mark.parametrize("make, counts", [
    (theta_graph, (2, 3, 3)),
    (k4_graph, (4, 6, 4)),
    (prism_graph, (6, 9, 5)),
    (cube_graph, (8, 12, 6)),
    (sb_graph, (4, 6, 4)),
])
def test_named_graphs_pos(make, counts): # positive control test
    g = make()
    assert (g.vertex_count, g.edge_count, len(g.faces)) == counts
    assert validate_nice(g)[0]

def test_named_graphs_simple_pos(): # positive control test
    assert k4_graph().is_simple()
    assert cube_graph().is_simple()
    assert sb_graph().multiple_edges() == [[0, 2], [8, 10]]

def test_build_neg(): # negative control test
    with pytest.raises(NotTrivalent): # odd number of vertices
        build_rotation_graph(3, [[0, 1, 2], [3, 4, 5], [6, 7, 8]], [[0, 3], [1, 4], [2, 5]])
    with pytest.raises(NotTrivalent): # vertex with two darts
        build_rotation_graph(2, [[0, 1], [2, 3, 4]], [[0, 2], [1, 3]])
    with pytest.raises(InvalidInput): # rotation table does not match the vertex count
        build_rotation_graph(4, [[0, 1, 2], [3, 5, 4]], [[0, 3], [1, 4], [2, 5]])
    with pytest.raises(InvalidInput): # a dart paired with itself
        build_rotation_graph(2, [[0, 1, 2], [3, 5, 4]], [[0, 0], [1, 4], [2, 5]])
    with pytest.raises(InvalidInput): # dart 5 in no edge
        build_rotation_graph(2, [[0, 1, 2], [3, 5, 4]], [[0, 3], [1, 4]])
    with pytest.raises(Disconnected): # two disjoint theta graphs
        build_rotation_graph(4, [[0, 1, 2], [3, 5, 4], [6, 7, 8], [9, 11, 10]],
                             [[0, 3], [1, 4], [2, 5], [6, 9], [7, 10], [8, 11]])
    with pytest.raises(NotSphere): # theta with equal cyclic orders lies on the torus
        build_rotation_graph(2, [[0, 1, 2], [3, 4, 5]], [[0, 3], [1, 4], [2, 5]])

def test_validate_nice_neg(): # negative control test
    ok, diagnostics = validate_nice(dumbbell_graph())
    assert not ok
    assert {d.check for d in diagnostics} == {'simple-boundary', 'self-meeting', 'vertex-facets'}

def test_face_poset_pos(): # positive control test
    assert face_poset(theta_graph()).counts() == (1, 3, 3, 2, 1)
    poset = face_poset(k4_graph())
    assert poset.counts() == (1, 4, 6, 4, 1)
    facet = poset.levels[1][0]
    assert len(poset.below(facet)) == 3 + 3 + 1
    assert len(poset.below(poset.levels[0][0])) == 4 + 6 + 4 + 1

def test_face_poset_neg(): # negative control test
    with pytest.raises(InvalidInput):
        face_poset(dumbbell_graph())

def test_mirror_relabel_pos(): # positive control test
    g = k4_graph()
    m = g.mirror()
    assert sorted(f.vertex_set for f in m.faces) == sorted(f.vertex_set for f in g.faces)
    r = g.relabel([3, 2, 1, 0])
    assert r.vertex_count == 4 and validate_nice(r)[0]
    assert sorted(map(sorted, (r.neighbors(v) for v in r.vertices))) == \
        sorted(map(sorted, (g.neighbors(v) for v in g.vertices)))

def test_from_neighbor_rotations_neg(): # negative control test
    with pytest.raises(NotSphere): # K4 with every rotation in the same cyclic order is not planar
        from_neighbor_rotations([[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]])
