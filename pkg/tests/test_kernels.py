import random

import pytest

from circbook import _pykernels as py
from circbook import kernels
from circbook.graph import circ, max_degree

try:
    from circbook import _ckernels as cy
except ImportError:  # pragma: no cover
    cy = None

needs_c = pytest.mark.skipif(cy is None, reason="compiled kernels not built")


def layout_adj(mod, n, k, seed):
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    pos = {v: i for i, v in enumerate(order)}
    es = circ(n, k).edges()
    return mod.conflict_adjacency([pos[u] for u, _ in es], [pos[v] for _, v in es])


def is_proper(adj, colors, k):
    return all(0 <= colors[v] < k and all(colors[v] != colors[w] for w in adj[v]) for v in range(len(adj)))


def test_backend_name():
    assert kernels.BACKEND in ("python", "cython")


def test_conflict_adjacency_small():
    # positions 0..3: chord (0,2) crosses (1,3); (0,1) shares with (0,2)
    adj = py.conflict_adjacency([0, 1, 0], [2, 3, 1])
    assert adj == [[1, 2], [0, 2], [0, 1]]


@needs_c
@pytest.mark.parametrize("n,k,seed", [(9, 3, 0), (12, 5, 1), (15, 4, 2), (20, 7, 3)])
def test_adjacency_parity(n, k, seed):
    assert [sorted(a) for a in layout_adj(py, n, k, seed)] == [sorted(a) for a in layout_adj(cy, n, k, seed)]


@pytest.mark.parametrize("mod", [py, pytest.param(cy, marks=needs_c)])
def test_kcolor_found_and_infeasible(mod):
    tri = [[1, 2], [0, 2], [0, 1]]
    st, cols = mod.kcolor(tri, 3)
    assert st == py.FOUND and is_proper(tri, cols, 3)
    st, _ = mod.kcolor(tri, 2)
    assert st == py.INFEASIBLE


@pytest.mark.parametrize("mod", [py, pytest.param(cy, marks=needs_c)])
def test_kcolor_precolor_and_allowed(mod):
    path = [[1], [0, 2], [1]]
    st, cols = mod.kcolor(path, 3, precolor=[2, -1, -1], allowed=[7, 0b011, 0b101])
    assert st == py.FOUND and cols[0] == 2 and cols[1] in (0, 1) and cols[2] in (0, 2)
    assert is_proper(path, cols, 3)
    st, _ = mod.kcolor(path, 3, precolor=[1, 1, -1])
    assert st == py.INFEASIBLE
    st, _ = mod.kcolor(path, 2, allowed=[1, 1, 3])
    assert st == py.INFEASIBLE


@needs_c
@pytest.mark.parametrize("n,k,seed", [(10, 3, 5), (13, 4, 6), (16, 6, 7), (21, 8, 8)])
def test_kcolor_parity(n, k, seed):
    adj = layout_adj(py, n, k, seed)
    for colors in range(max_degree(circ(n, k)), 7):
        sp, cp = py.kcolor(adj, colors, node_limit=200000)
        sc, cc = cy.kcolor(adj, colors, node_limit=200000)
        if py.LIMIT in (sp, sc):
            continue
        assert sp == sc
        if sp == py.FOUND:
            assert is_proper(adj, cp, colors) and is_proper(adj, cc, colors)


@pytest.mark.parametrize("mod", [py, pytest.param(cy, marks=needs_c)])
def test_node_limit(mod):
    adj = layout_adj(py, 40, 13, 9)
    st, _ = mod.kcolor(adj, 5, node_limit=1)
    assert st in (py.LIMIT, py.FOUND)


@needs_c
@pytest.mark.parametrize("n,k", [(5, 2), (6, 2), (7, 3), (8, 3)])
def test_oracle_parity(n, k):
    es = circ(n, k).edges()
    eu, ev = [u for u, _ in es], [v for _, v in es]
    lower = max_degree(circ(n, k))
    assert py.oracle_min_pages(n, eu, ev, 6, lower) == cy.oracle_min_pages(n, eu, ev, 6, lower)
