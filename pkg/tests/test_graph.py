import pytest
from hypothesis import given, strategies as st

from circbook.errors import DuplicateJump, InvalidJump, PreconditionViolated
from circbook.graph import (build, circ, components, cycle_decomposition, is_bipartite, max_degree,
                            normalize_jump, predicted_mbt, two_colorable, wrap)
from circbook.numth import gcd


def test_wrap_uses_labels_1_to_n():
    assert wrap(0, 7) == 7 and wrap(8, 7) == 1 and wrap(-6, 7) == 1


def test_edges_counts():
    g = build(14, [5])
    assert len(g.edges()) == 14 and all(len(g.neighbors(v)) == 2 for v in g.vertices)
    c = circ(14, 5)
    assert len(c.edges()) == 28 and max_degree(c) == 4
    h = circ(14, 7)
    assert len(h.edges()) == 21 and max_degree(h) == 3


def test_normalization():
    assert circ(67, 47).jumps == (1, 20)
    assert build(10, [9, 3]).jumps == (1, 3)
    with pytest.raises(DuplicateJump):
        build(10, [3, 7])
    with pytest.raises(InvalidJump):
        normalize_jump(10, 10)
    with pytest.raises(InvalidJump):
        build(2, [1])
    with pytest.raises(PreconditionViolated):
        _ = build(12, [2, 3]).k


def test_edge_order_canonical():
    es = circ(9, 3).edges()
    assert all(u < v for u, v in es) and list(es) == sorted(es)


def test_adjacency_definition():
    g = circ(11, 3)
    for u in g.vertices:
        for v in g.vertices:
            expect = (u - v) % 11 in (1, 10, 3, 8)
            assert g.adjacent(u, v) == expect == ((min(u, v), max(u, v)) in g.edge_set)


def test_cycles_examples():
    dec = cycle_decomposition(circ(14, 5))
    assert dec.d == 1
    assert dec.cycles[1] == (1, 6, 11, 2, 7, 12, 3, 8, 13, 4, 9, 14, 5, 10)
    dec = cycle_decomposition(circ(27, 9))
    assert len(dec.cycles) == 10 and dec.cycles[1] == (1, 10, 19)
    dec = cycle_decomposition(circ(24, 4))
    assert len(dec.cycles) == 5 and all(len(c) == 6 for c in dec.cycles[1:])


def test_half_jump_matching_record():
    dec = cycle_decomposition(circ(12, 6))
    assert len(dec.cycles) == 1 and len(dec.matching) == 6


def test_cycle_cover_sweep():
    for n in range(3, 301):
        for k in range(2, n // 2 + 1):
            g = circ(n, k)
            dec = cycle_decomposition(g)
            es = dec.edges()
            assert len(es) == len(set(es)) and set(es) == g.edge_set
            if 2 * k != n:
                assert len(dec.cycles) == gcd(n, k) + 1


def test_bipartite_examples():
    assert is_bipartite(circ(14, 5)) and not is_bipartite(circ(12, 6))
    assert max_degree(circ(14, 7)) == 3 and max_degree(circ(14, 5)) == 4
    assert predicted_mbt(circ(14, 5)) == 4 and predicted_mbt(circ(14, 7)) == 3
    assert predicted_mbt(circ(12, 6)) == 4 and predicted_mbt(circ(9, 3)) == 5


def test_bipartite_closed_form_sweep():
    for n in range(3, 301):
        for k in range(1, n // 2 + 1):
            g = circ(n, k)
            assert is_bipartite(g) == two_colorable(g)


@given(st.integers(3, 300), st.data())
def test_predicted_vs_degree(n, data):
    k = data.draw(st.integers(1, n // 2))
    g = circ(n, k)
    assert predicted_mbt(g) >= max_degree(g)
    assert (predicted_mbt(g) == max_degree(g)) == (n % 2 == 0 and k % 2 == 1)


def test_components_connected():
    assert len(components(circ(10, 4))) == 1
    assert len(components(build(12, [4]))) == 4
