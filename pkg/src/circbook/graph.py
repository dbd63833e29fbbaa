"""Circulant graphs on the labels ``1..n``.

Residues are always reported in ``1..n`` (0 maps to ``n``) so vertex sets can
be compared verbatim against hand-written examples.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .errors import DuplicateJump, InvalidJump, PreconditionViolated
from .numth import gcd

Edge = Tuple[int, int]

__all__ = [
    "Edge",
    "CirculantSpec",
    "CycleDecomposition",
    "build",
    "circ",
    "wrap",
    "cycle_decomposition",
    "is_bipartite",
    "two_colorable",
    "max_degree",
    "predicted_mbt",
    "components",
]


def wrap(x: int, n: int) -> int:
    """Reduce ``x`` into ``1..n``."""
    return (x - 1) % n + 1


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    jumps: Tuple[int, ...]

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def _edge_list(self) -> Tuple[Edge, ...]:
        out = set()
        for j in self.jumps:
            for v in self.vertices:
                out.add(_edge(v, wrap(v + j, self.n)))
        return tuple(sorted(out))

    def edges(self) -> Tuple[Edge, ...]:
        """Edges as ``(min, max)`` pairs sorted lexicographically."""
        return self._edge_list

    @cached_property
    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self._edge_list)

    def adjacent(self, u: int, v: int) -> bool:
        diff = (u - v) % self.n
        return any(diff == j or diff == self.n - j for j in self.jumps)

    def neighbors(self, v: int) -> List[int]:
        out = []
        for j in self.jumps:
            for w in (wrap(v + j, self.n), wrap(v - j, self.n)):
                if w not in out:
                    out.append(w)
        return out

    @property
    def k(self) -> int:
        """Non-unit jump of ``C(n, k)``; 1 for the plain cycle."""
        if self.jumps[0] != 1 or len(self.jumps) > 2:
            raise PreconditionViolated(f"{self} is not of the form C(n, k)")
        return self.jumps[-1]

    def __str__(self) -> str:
        return f"C(Z_{self.n}, {{{', '.join(map(str, self.jumps))}}})"


def normalize_jump(j: int, n: int) -> int:
    if j % n == 0:
        raise InvalidJump(f"jump {j} is 0 mod {n}")
    if not 1 <= j <= n - 1:
        raise InvalidJump(f"jump {j} outside [1, {n - 1}]")
    return min(j, n - j)


def build(n: int, jumps: Iterable[int]) -> CirculantSpec:
    if n < 3:
        raise InvalidJump(f"need n >= 3, got {n}")
    raw = list(jumps)
    if not raw:
        raise InvalidJump("empty jump set")
    folded = sorted({normalize_jump(j, n) for j in raw})
    if len(folded) < len(raw):
        raise DuplicateJump(f"jumps {raw} collapse to {folded} mod {n}")
    return CirculantSpec(n, tuple(folded))


def circ(n: int, k: int) -> CirculantSpec:
    """``C(n, k)``, the circulant with jump set ``{1, k}``."""
    k = normalize_jump(k, n)
    return build(n, [1] if k == 1 else [1, k])


@dataclass(frozen=True)
class CycleDecomposition:
    """``cycles[0]`` is the unit-jump cycle; ``cycles[i]`` starts at ``i``.

    For ``k == n/2`` the k-edges form a perfect matching and are kept in
    ``matching`` instead of being listed as length-2 cycles.
    """

    cycles: Tuple[Tuple[int, ...], ...]
    matching: Optional[Tuple[Edge, ...]] = None

    @property
    def d(self) -> int:
        return len(self.cycles) - 1

    def edges(self) -> List[Edge]:
        out = []
        for cyc in self.cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                out.append(_edge(a, b))
        if self.matching:
            out.extend(self.matching)
        return out


def cycle_decomposition(spec: CirculantSpec) -> CycleDecomposition:
    n, k = spec.n, spec.k
    c0 = tuple(range(1, n + 1))
    if k == 1:
        return CycleDecomposition((c0,))
    if 2 * k == n:
        matching = tuple(_edge(i, i + k) for i in range(1, k + 1))
        return CycleDecomposition((c0,), matching)
    d = gcd(n, k)
    cycles = [c0]
    for i in range(1, d + 1):
        cycles.append(tuple(wrap(i + j * k, n) for j in range(n // d)))
    return CycleDecomposition(tuple(cycles))


def is_bipartite(spec: CirculantSpec) -> bool:
    return spec.n % 2 == 0 and spec.k % 2 == 1


def two_colorable(spec: CirculantSpec) -> bool:
    """BFS 2-colouring; independent check of :func:`is_bipartite`."""
    side: Dict[int, int] = {}
    for root in spec.vertices:
        if root in side:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in spec.neighbors(v):
                if w not in side:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def max_degree(spec: CirculantSpec) -> int:
    return sum(1 if 2 * j == spec.n else 2 for j in spec.jumps)


def predicted_mbt(spec: CirculantSpec) -> int:
    """Matching book thickness of ``C(n, k)``: Δ when bipartite, else Δ + 1."""
    delta = max_degree(spec)
    return delta if is_bipartite(spec) else delta + 1


def components(spec: CirculantSpec) -> List[List[int]]:
    """Connected components via union-find on the explicit edge list."""
    parent = list(range(spec.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in spec.edges():
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: Dict[int, List[int]] = {}
    for v in spec.vertices:
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())
