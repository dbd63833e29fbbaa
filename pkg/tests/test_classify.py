import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from circbook.classify import (BundleGraph, BundleUnion, HalfJumpUnion, IsoCertificate, PrismUnion,
                               SingleJumpUnion, bundle_decompose, certificate, classify, component_of,
                               verify_certificate)
from circbook.errors import JumpCoincidence, PreconditionViolated, SizeMismatch
from circbook.graph import build, circ, components
from circbook.numth import gcd, position_in_progression


def test_bundle_example():
    cls = classify(60, 28, 35)
    fam = cls.family
    assert isinstance(fam, BundleUnion)
    assert (fam.copies, fam.base_len, fam.fiber_len, fam.shift, fam.trivial_shift) == (1, 4, 15, 5, False)
    assert cls.describe() == "bundle: 1 × C_4 □^5 C_15"


def test_bundle_steps():
    bd = bundle_decompose(60, 28, 35)
    assert [c[0] for c in bd.cycles] == [1, 2, 3, 4]
    assert bd.row_order == (1, 4, 3, 2)
    assert bd.first_column() == (1, 36, 11, 46)
    assert bd.shift == 5
    for i in range(60):
        head = (i * 35) % 60 + 1
        assert sum(head in row for row in bd.rows) == 1


def test_bundle_decompose_precondition():
    with pytest.raises(PreconditionViolated):
        bundle_decompose(14, 5, 7)


def test_bundle_reconstruction_matches_graph():
    comp, cert = certificate(classify(60, 28, 35))
    assert isinstance(cert.target, BundleGraph) and cert.target.shift == 5
    assert verify_certificate(comp, cert)
    assert comp.n == 60 and len(comp.edge_set) == 120


def test_single_jump_example():
    cls = classify(14, 5, 7)
    assert cls.family == SingleJumpUnion(1, 14, 7)
    assert [x for x in range(14) if (5 * x - 7) % 14 == 0] == [7]


def test_prism_example():
    assert classify(20, 4, 10).family == PrismUnion(2, 5)


def test_half_jump_example():
    cls = classify(24, 4, 12)
    assert cls.family == HalfJumpUnion(4, 6)
    assert cls.describe() == "union: 4 × C(6,3)"


def brute_isomorphic(edges_a, n_a, edges_b, n_b):
    if n_a != n_b or len(edges_a) != len(edges_b):
        return False
    target = {frozenset(e) for e in edges_b}
    va = sorted({v for e in edges_a for v in e})
    for perm in permutations(range(1, n_b + 1)):
        m = dict(zip(va, perm))
        if all(frozenset((m[u], m[v])) in target for u, v in edges_a):
            return True
    return False


@pytest.mark.parametrize("n,k1,k2,target", [(20, 4, 10, BundleGraph(2, 5, 0)), (24, 4, 12, circ(6, 3))])
def test_components_brute_force_isomorphic(n, k1, k2, target):
    comp = component_of(build(n, [k1, k2]))
    assert brute_isomorphic(comp.edges(), comp.n, target.edges(), target.n)


def test_jump_coincidence():
    with pytest.raises(JumpCoincidence):
        classify(10, 3, 7)


def test_identity_certificate():
    g = circ(14, 5)
    assert verify_certificate(g, IsoCertificate({v: v for v in g.vertices}, g))


def test_position_map_certificate():
    src = build(14, [5, 7])
    theta = {v: position_in_progression(5, 14, v - 1) for v in src.vertices}
    assert verify_certificate(src, IsoCertificate(theta, circ(14, 7)))


def test_transposition_breaks_certificate():
    src = build(14, [5, 7])
    comp, cert = certificate(classify(14, 5, 7))
    theta = dict(cert.theta)
    theta[1], theta[2] = theta[2], theta[1]
    assert not verify_certificate(comp, IsoCertificate(theta, cert.target))
    assert verify_certificate(src, cert)


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        verify_certificate(circ(10, 3), IsoCertificate({}, circ(12, 3)))


def triples(n_max):
    for n in range(5, n_max + 1):
        for k1 in range(1, n // 2 + 1):
            for k2 in range(k1 + 1, n // 2 + 1):
                yield n, k1, k2


def test_all_certificates_small():
    for n, k1, k2 in triples(60):
        cls = classify(n, k1, k2)
        comp, cert = certificate(cls)
        assert verify_certificate(comp, cert), (n, k1, k2)
        fam = cls.family
        if isinstance(fam, BundleUnion):
            assert fam.base_len == cls.d1 // cls.d and fam.fiber_len == n // cls.d1
            assert 0 <= fam.shift < fam.fiber_len
            assert fam.trivial_shift == (fam.shift == 0)
            if cls.d == 1:
                assert fam.trivial_shift == ((cls.d1 * cls.d2) % n == 0)


@pytest.mark.slow
def test_component_count_sweep():
    for n, k1, k2 in triples(120):
        cls = classify(n, k1, k2)
        assert cls.copies == gcd(gcd(k1, k2), n) == len(components(build(n, [k1, k2])))


def test_trivial_shift_witness():
    found = None
    for n, k1, k2 in triples(200):
        d1, d2 = gcd(n, k1), gcd(n, k2)
        if 1 < min(d1, d2) and max(d1, d2) * 2 < n and gcd(d1, d2) == 1 and (d1 * d2) % n == 0:
            found = (n, k1, k2)
            break
    assert found is not None
    fam = classify(*found).family
    assert isinstance(fam, BundleUnion) and fam.shift == 0 and fam.trivial_shift


@settings(max_examples=150, deadline=None)
@given(st.integers(5, 80), st.data())
def test_classify_property(n, data):
    k1 = data.draw(st.integers(1, n - 1))
    k2 = data.draw(st.integers(1, n - 1))
    if k1 in (k2, n - k2):
        return
    cls = classify(n, k1, k2)
    assert cls.copies == len(components(build(n, [k1, k2])))
    comp, cert = certificate(cls)
    assert verify_certificate(comp, cert)


def test_seeded_sample():
    rng = random.Random(2024)
    for _ in range(100):
        n = rng.randint(5, 40)
        k1, k2 = sorted(rng.sample(range(1, n // 2 + 1), 2)) if n >= 6 else (1, 2)
        cls = classify(n, k1, k2)
        assert cls.copies == len(components(build(n, [k1, k2])))
        assert verify_certificate(*certificate(cls))
