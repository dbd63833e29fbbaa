"""Structural classification of two-jump circulants ``C(Z_n, {k1, k2})``.

Every instance falls into exactly one family: a union of ``C(n', k')``
copies, a union of cycle bundles ``C_b □^x C_f`` with a cyclic x-shift on the
wrap edge, a union of prisms ``K_2 □ C_f``, or a union of ``C(n', n'/2)``.
Each result can produce a vertex bijection onto one component's model graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple, Union

from .errors import JumpCoincidence, PreconditionViolated, SizeMismatch
from .graph import CirculantSpec, Edge, build, circ, normalize_jump, wrap
from .numth import gcd, solve_diophantine

__all__ = [
    "SingleJumpUnion",
    "BundleUnion",
    "PrismUnion",
    "HalfJumpUnion",
    "Classification",
    "BundleGraph",
    "BundleDecomposition",
    "IsoCertificate",
    "ComponentGraph",
    "classify",
    "bundle_decompose",
    "certificate",
    "component_of",
    "verify_certificate",
]


@dataclass(frozen=True)
class SingleJumpUnion:
    copies: int
    n1: int
    k: int

    def describe(self) -> str:
        return f"union: {self.copies} × C({self.n1},{self.k})"


@dataclass(frozen=True)
class BundleUnion:
    copies: int
    base_len: int
    fiber_len: int
    shift: int
    trivial_shift: bool

    def describe(self) -> str:
        return f"bundle: {self.copies} × C_{self.base_len} □^{self.shift} C_{self.fiber_len}"


@dataclass(frozen=True)
class PrismUnion:
    copies: int
    fiber_len: int

    def describe(self) -> str:
        return f"prism: {self.copies} × K_2 □ C_{self.fiber_len}"


@dataclass(frozen=True)
class HalfJumpUnion:
    copies: int
    n1: int

    def describe(self) -> str:
        return f"union: {self.copies} × C({self.n1},{self.n1 // 2})"


Family = Union[SingleJumpUnion, BundleUnion, PrismUnion, HalfJumpUnion]


@dataclass(frozen=True)
class Classification:
    n: int
    k1: int
    k2: int
    d1: int
    d2: int
    d: int
    family: Family

    @property
    def copies(self) -> int:
        return self.family.copies

    def describe(self) -> str:
        return self.family.describe()


def _normalized_pair(n: int, k1: int, k2: int) -> Tuple[int, int]:
    j1, j2 = normalize_jump(k1, n), normalize_jump(k2, n)
    if j1 == j2:
        raise JumpCoincidence(f"jumps {k1}, {k2} coincide mod {n}")
    j1, j2 = sorted((j1, j2))
    if gcd(n, j1) > gcd(n, j2):
        j1, j2 = j2, j1
    return j1, j2


def _reduced_jump(n: int, j1: int, j2: int) -> int:
    """``k'`` with ``C(Z_n, {j1, j2}) ≅ C(n, k')`` for ``gcd(n, j1) == 1``."""
    x0 = solve_diophantine(j1, -n, j2).x0
    return normalize_jump(x0, n)


def classify(n: int, k1: int, k2: int) -> Classification:
    k1, k2 = _normalized_pair(n, k1, k2)
    d1, d2 = gcd(n, k1), gcd(n, k2)
    d = gcd(d1, d2)
    if d1 == 1 or d1 == d2:
        n1 = n // d1
        fam: Family = SingleJumpUnion(d, n1, _reduced_jump(n1, k1 // d1, k2 // d1))
    elif 2 * d2 < n:
        bd = _oriented_rows(n // d, k1 // d, k2 // d)
        # per-component form of d1*d2 == 0 (mod n); identical when d == 1
        trivial = (d1 * d2) % (n * d) == 0
        assert trivial == (bd.shift == 0)
        fam = BundleUnion(d, d1 // d, n // d1, bd.shift, trivial)
    else:
        n1 = n // d1
        if n1 % 2:
            if 2 * d != d1:
                raise AssertionError(f"prism case with d={d} != d1/2={d1 / 2}")
            fam = PrismUnion(d, n1)
        else:
            fam = HalfJumpUnion(d, n1)
    return Classification(n, k1, k2, d1, d2, d, fam)


@dataclass(frozen=True)
class BundleDecomposition:
    """Rows of a bundle ``C_{d1} □^shift C_{n/d1}``.

    ``cycles`` are the k1-orbits ``C_1..C_{d1}`` (``C_i`` starts at ``i``);
    ``row_order[r]`` is the 1-based index of the orbit placed in row ``r``;
    ``rows[r]`` is that orbit rotated to start at ``1 + r*k2``.
    """

    n: int
    k1: int
    k2: int
    cycles: Tuple[Tuple[int, ...], ...]
    row_order: Tuple[int, ...]
    rows: Tuple[Tuple[int, ...], ...]
    shift: int

    def first_column(self) -> Tuple[int, ...]:
        return tuple(r[0] for r in self.rows)


def bundle_decompose(n: int, k1: int, k2: int) -> BundleDecomposition:
    """Orbit rows of ``C(Z_n, {k1, k2})`` and the wrap-edge shift.

    ``k2`` is used as given (not folded), so ``(60, 28, 35)`` and
    ``(60, 28, 25)`` report mirror shifts 5 and 10.
    """
    d1, d2 = gcd(n, k1), gcd(n, k2)
    if not (1 < d1 < d2 and 2 * d2 < n):
        raise PreconditionViolated(f"need 1 < d1 < d2 < n/2, got d1={d1}, d2={d2}, n={n}")
    if gcd(d1, d2) != 1:
        raise PreconditionViolated(f"gcd(d1, d2) = {gcd(d1, d2)} != 1; reduce to one component first")
    return _bundle_rows(n, k1, k2)


def _oriented_rows(n: int, k1: int, k2: int) -> BundleDecomposition:
    """Rows for whichever orientation of ``k2`` yields the smaller shift."""
    fwd = _bundle_rows(n, k1, k2)
    back = _bundle_rows(n, k1, n - k2)
    return back if back.shift < fwd.shift else fwd


def _bundle_rows(n: int, k1: int, k2: int) -> BundleDecomposition:
    d1 = gcd(n, k1)
    fib = n // d1
    cycles = tuple(tuple(wrap(i + j * k1, n) for j in range(fib)) for i in range(1, d1 + 1))
    where: Dict[int, Tuple[int, int]] = {}
    for ci, cyc in enumerate(cycles):
        for pos, v in enumerate(cyc):
            where[v] = (ci, pos)
    row_order = []
    rows = []
    for r in range(d1):
        head = wrap(1 + r * k2, n)
        ci, pos = where[head]
        row_order.append(ci + 1)
        rows.append(cycles[ci][pos:] + cycles[ci][:pos])
    if len(set(row_order)) != d1:
        raise AssertionError("row heads do not hit every orbit exactly once")
    shift = solve_diophantine(k1 // d1, -fib, k2).x0
    assert where[wrap(1 + d1 * k2, n)] == (0, shift)
    return BundleDecomposition(n, k1, k2, cycles, tuple(row_order), tuple(rows), shift)


# --- certificates -----------------------------------------------------------


@dataclass(frozen=True)
class BundleGraph:
    """``C_base □^shift C_fiber`` on labels ``b*fiber + f + 1``.

    Base edges join equal fiber positions of consecutive rows; the single wrap
    edge from the last row to row 0 applies the cyclic shift.  ``base_len == 2``
    with shift 0 is the prism ``K_2 □ C_fiber``.
    """

    base_len: int
    fiber_len: int
    shift: int

    @property
    def n(self) -> int:
        return self.base_len * self.fiber_len

    def label(self, b: int, f: int) -> int:
        return b * self.fiber_len + f % self.fiber_len + 1

    def edges(self) -> Tuple[Edge, ...]:
        out = set()
        L, F = self.base_len, self.fiber_len
        for b in range(L):
            for f in range(F):
                out.add(_e(self.label(b, f), self.label(b, f + 1)))
                if b + 1 < L:
                    out.add(_e(self.label(b, f), self.label(b + 1, f)))
        if L >= 2 or self.shift:
            for f in range(F):
                out.add(_e(self.label(L - 1, f), self.label(0, f + self.shift)))
        out.discard(None)
        return tuple(sorted(out))


def _e(u: int, v: int):
    if u == v:
        return None
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ComponentGraph:
    """One connected component, relabelled by ``vertices`` order to ``1..m``."""

    vertices: Tuple[int, ...]
    edge_set: FrozenSet[Edge]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edge_set))


@dataclass(frozen=True)
class IsoCertificate:
    """``theta[v]`` is the image of source vertex ``v``."""

    theta: Dict[int, int]
    target: Union[CirculantSpec, BundleGraph]


def component_of(spec: CirculantSpec, root: int = 1) -> ComponentGraph:
    seen = {root}
    stack = [root]
    while stack:
        v = stack.pop()
        for w in spec.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    edges = frozenset(e for e in spec.edges() if e[0] in seen)
    return ComponentGraph(tuple(sorted(seen)), edges)


def _position_map(n: int, j1: int) -> Dict[int, int]:
    """Vertex ``1 + i*j1 (mod n)`` maps to ``1 + i``."""
    return {wrap(1 + i * j1, n): i + 1 for i in range(n)}


def certificate(cls: Classification) -> Tuple[ComponentGraph, IsoCertificate]:
    """Isomorphism from the component of vertex 1 onto the family's model graph."""
    n, k1, k2, d = cls.n, cls.k1, cls.k2, cls.d
    comp = component_of(build(n, [k1, k2]), 1)
    m = n // d
    to_reduced = {wrap(1 + i * d, n): i + 1 for i in range(m)}
    j1, j2 = k1 // d, k2 // d
    fam = cls.family

    if isinstance(fam, (SingleJumpUnion, HalfJumpUnion)):
        pos = _position_map(m, j1)
        theta = {v: pos[to_reduced[v]] for v in comp.vertices}
        k_target = fam.k if isinstance(fam, SingleJumpUnion) else fam.n1 // 2
        return comp, IsoCertificate(theta, circ(m, k_target))

    if isinstance(fam, BundleUnion):
        bd = _oriented_rows(m, j1, j2)
        target = BundleGraph(fam.base_len, fam.fiber_len, bd.shift)
        rows = bd.rows
    else:
        fib = fam.fiber_len
        rows = tuple(tuple(wrap(h + f * j1, m) for f in range(fib)) for h in (1, 1 + m // 2))
        target = BundleGraph(2, fib, 0)
    from_reduced = {r: v for v, r in to_reduced.items()}
    theta = {}
    for b, row in enumerate(rows):
        for f, u in enumerate(row):
            theta[from_reduced[u]] = target.label(b, f)
    return comp, IsoCertificate(theta, target)


def verify_certificate(source, cert: IsoCertificate) -> bool:
    """True iff ``cert.theta`` maps the source edge set bijectively onto the target's."""
    src_vertices = list(source.vertices)
    if len(src_vertices) != cert.target.n:
        raise SizeMismatch(f"{len(src_vertices)} source vertices vs {cert.target.n} target vertices")
    theta = cert.theta
    if sorted(theta) != sorted(src_vertices):
        return False
    if sorted(theta.values()) != list(range(1, cert.target.n + 1)):
        return False
    target_edges = set(cert.target.edges())
    mapped = set()
    for u, v in source.edges():
        a, b = theta[u], theta[v]
        mapped.add((a, b) if a < b else (b, a))
    return len(mapped) == len(source.edges()) and mapped == target_edges
