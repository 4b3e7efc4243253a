import pytest

from tgkit.torus import sphere_graph, simplex_graph, sb_torus_graph, cube_torus_graph, simplex_sb_simplex_graph

@pytest.fixture
def sphere():
    return sphere_graph()

@pytest.fixture
def simplex():
    return simplex_graph()

@pytest.fixture
def sb():
    return sb_torus_graph(1, 2, -1)

@pytest.fixture
def cube():
    return cube_torus_graph()

@pytest.fixture(scope="session")
def simplex_sb_simplex():
    # 8 vertices, simple, not 3-connected
    return simplex_sb_simplex_graph()
