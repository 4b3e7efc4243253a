"""
Date: 261018

{Description: splitting a random connected sum at its recorded cut and summing the pieces
again gives back an equivalent torus graph}
"""

from hypothesis import given, settings, strategies as st

from tgkit.surgery import connected_sum, make_site, split
from tgkit.torus import simplex_graph, validate_torus_graph, is_equivalent
from tests.random_sums import attach, steps

@settings(max_examples=30, deadline=None)
@given(st.lists(steps, min_size=1, max_size=4))
def test_split_resum(chain):
    tg = simplex_graph()
    for kind, seed, eps, a, b in chain:
        tg, record = attach(tg, seed % tg.vertex_count, kind, eps, a, b)
    assert validate_torus_graph(tg)[0]
    first, second, back = split(tg, record.cut)
    assert first.vertex_count + second.vertex_count == tg.vertex_count + 2
    again, _ = connected_sum(first, second, make_site(first, back.p, second, back.q))
    assert is_equivalent(again, tg) is not None
