import pytest
from hypothesis import given, settings, strategies as st

from circbook.errors import InvalidRange, NoSolution, NotCoprime
from circbook.numth import ext_gcd, gcd, position_in_progression, reduction_trace, solve_diophantine


def scan_progression(a, b, c):
    seq = [(i * a) % b + 1 for i in range(b)]
    return seq.index(1 + c) + 1


def test_gcd_examples():
    assert gcd(60, 28) == 4
    assert gcd(7, 7) == 7
    assert gcd(56, 9) == 1


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_ext_gcd_bezout(a, b):
    g, s, t = ext_gcd(a, b)
    assert g >= 0 and s * a + t * b == g
    if a or b:
        assert a % g == 0 and b % g == 0


def test_solve_bundle_shift_equation():
    sol = solve_diophantine(7, -15, 35)
    assert (sol.x0, sol.y0) == (5, 0)


def test_solve_zero_rhs():
    for b in (2, 9, 31):
        sol = solve_diophantine(1, -b, 0)
        assert (sol.x0, sol.y0) == (0, 0)


def test_solve_by_scan():
    # 5x = 7 (mod 14) by enumeration
    xs = [x for x in range(14) if (5 * x - 7) % 14 == 0]
    sol = solve_diophantine(5, -14, 7)
    assert [sol.x0] == xs and (sol.x0, sol.y0) == (7, 2)


def test_no_solution():
    with pytest.raises(NoSolution):
        solve_diophantine(4, -6, 3)


@settings(max_examples=300)
@given(st.integers(1, 500), st.integers(2, 500), st.integers(-5000, 5000))
def test_solve_roundtrip_and_uniqueness(a, b, c):
    if gcd(a, b) != 1:
        return
    sol = solve_diophantine(a, -b, c)
    assert a * sol.x0 - b * sol.y0 == c
    assert 0 <= sol.x0 <= b - 1
    assert [x for x in range(b) if (a * x - c) % b == 0] == [sol.x0]


def test_position_examples():
    assert position_in_progression(1, 5, 3) == 4
    # 1, 6, 11, 2, 7, 12, 3, 8 (mod 14): 7 is 5th, 8 is 8th
    assert scan_progression(5, 14, 6) == 5
    assert position_in_progression(5, 14, 6) == 5
    assert position_in_progression(5, 14, 7) == 8
    assert position_in_progression(7, 15, 5) == 1 + solve_diophantine(7, -15, 5).x0 == scan_progression(7, 15, 5)


@settings(max_examples=200)
@given(st.integers(1, 200), st.integers(2, 200), st.data())
def test_position_matches_scan(a, b, data):
    if gcd(a, b) != 1:
        return
    c = data.draw(st.integers(0, b - 1))
    assert position_in_progression(a, b, c) == scan_progression(a, b, c)


def test_position_errors():
    with pytest.raises(InvalidRange):
        position_in_progression(5, 14, 14)
    with pytest.raises(NotCoprime):
        position_in_progression(4, 14, 3)


def test_trace_56_9():
    tr = reduction_trace(56, 9)
    assert (tr.a, tr.r) == (6, 2)
    assert tr.ks[1:] == [7, 5, 3, 1]
    assert tr.r_at(4) == 0
    assert tr.s is None and tr.m == 3 and tr.t == tr.k_at(tr.m) == 3


def test_trace_87_20():
    tr = reduction_trace(87, 20)
    assert (tr.a, tr.r, tr.k_at(1), tr.k_at(2), tr.r_at(2)) == (4, 7, 13, 6, 1)
    assert tr.s == 2 and tr.t == 7


def test_trace_77_10():
    tr = reduction_trace(77, 10)
    assert (tr.a, tr.r, tr.k_at(1), tr.r_at(1)) == (7, 7, 3, 1)
    assert tr.s == 1 and tr.t == 4


def test_trace_errors():
    with pytest.raises(NotCoprime):
        reduction_trace(60, 28)
    with pytest.raises(InvalidRange):
        reduction_trace(5, 1)


def check_trace(n, k):
    tr = reduction_trace(n, k)
    assert n == tr.a * k + tr.r and 0 <= tr.r < k
    for i, (a_i, k_i, r_i) in enumerate(tr.steps, start=1):
        assert k_i == tr.k_at(i - 1) - tr.r_at(i - 1)
        assert tr.k_at(i - 1) == a_i * k_i + r_i
    rs = tr.rs
    assert all(x >= y for x, y in zip(rs, rs[1:]))
    assert (tr.ks[-1], rs[-1]) == (1, 0)
    if tr.r in (1, k - 1):
        assert tr.t == k
    elif tr.s is not None:
        assert tr.t == tr.k_at(tr.s) + 1
        assert tr.k_at(tr.s) >= 3 and tr.r_at(tr.s) == 1 and tr.s < tr.m
    else:
        assert tr.t == tr.k_at(tr.m)


def test_trace_all_small():
    for n in range(5, 400, 2):
        for k in range(2, n // 2 + 1):
            if gcd(n, k) == 1:
                check_trace(n, k)


@given(st.integers(2, 1000).map(lambda x: 2 * x + 1), st.data())
def test_trace_property(n, data):
    k = data.draw(st.integers(2, n // 2))
    if gcd(n, k) == 1:
        check_trace(n, k)
