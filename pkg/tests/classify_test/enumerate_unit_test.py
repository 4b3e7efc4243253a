"""
Date: 261018

{Description: unit tests for the enumeration of characteristic data}
"""

import pytest

from tgkit._errors_ import InvalidInput
from tgkit.classify import enumerate_characteristic, candidate_grid
from tgkit.graph import theta_graph, k4_graph, cube_graph, build_rotation_graph
from tgkit.lattice import E1, E2, E3
from tgkit.torus import CharacteristicData, is_characteristic

@pytest.fixture(scope="module")
def theta_all():
    return list(enumerate_characteristic(theta_graph(), 1))

def test_candidate_grid_pos(): # positive control test
    assert len(candidate_grid(1)) == 26
    assert len(candidate_grid(2)) == 98
    assert [0, 0, 0] not in candidate_grid(1).tolist()
    assert [2, 0, 0] not in candidate_grid(2).tolist()

def test_enumerate_pos(theta_all): # positive control test
    assert list(enumerate_characteristic(theta_graph(), 0)) == []
    assert CharacteristicData.of([E1, E2, E3]) in theta_all
    assert len(set(theta_all)) == len(theta_all)
    assert all(is_characteristic(theta_graph(), lam)[0] for lam in theta_all)

def test_enumerate_k4_pos(): # positive control test
    found = {frozenset(map(tuple, lam.values)) for lam in enumerate_characteristic(k4_graph(), 1)}
    assert frozenset([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]) in found

def test_enumerate_limit_shards_pos(theta_all): # positive control test
    assert len(list(enumerate_characteristic(theta_graph(), 1, limit=5))) == 5
    parts = [list(enumerate_characteristic(theta_graph(), 1, shards=3, shard=k)) for k in range(3)]
    assert sum(len(p) for p in parts) == len(theta_all)
    assert set().union(*map(set, parts)) == set(theta_all)

def test_enumerate_dedup_pos(theta_all): # positive control test
    exact = list(enumerate_characteristic(theta_graph(), 1, dedup='exact'))
    lifts = list(enumerate_characteristic(theta_graph(), 1, dedup='lifts'))
    assert 1 <= len(lifts) <= len(exact) < len(theta_all)

def test_enumerate_neg(): # negative control test
    dumbbell = build_rotation_graph(2, [[0, 1, 2], [3, 4, 5]], [[0, 1], [3, 4], [2, 5]])
    with pytest.raises(InvalidInput): # facets of a graph with loops are not disks
        list(enumerate_characteristic(dumbbell, 1))
    with pytest.raises(AssertionError): # negative bound
        list(enumerate_characteristic(theta_graph(), -1))
    with pytest.raises(AssertionError): # shard out of range
        list(enumerate_characteristic(theta_graph(), 1, shards=2, shard=2))

def test_enumerate_large_search_pos(): # positive control test
    with pytest.warns(UserWarning, match="enumerating"):
        found = list(enumerate_characteristic(cube_graph(), 3, limit=1))
    assert len(found) == 1

def test_enumerate_normalized_pos(theta_all): # positive control test
    theta = list(enumerate_characteristic(theta_graph(), 1, normalized=True))
    assert len(theta) == 1 and theta[0] in theta_all
    assert [theta[0].vector(f) for f in theta_graph().facets_at(0)] == [E1, E2, E3]
    # the fourth facet of K4 is any of the eight (+-1, +-1, +-1)
    k4 = list(enumerate_characteristic(k4_graph(), 1, normalized=True))
    assert len(k4) == 8
    assert all(is_characteristic(k4_graph(), lam)[0] for lam in k4)
