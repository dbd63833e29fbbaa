"""Integer machinery: gcd, canonical linear Diophantine solutions, progression
positions and the remainder-reduction trace used to build ordered partitions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .errors import InvalidRange, NoSolution, NotCoprime

__all__ = [
    "DioSolution",
    "ReductionTrace",
    "gcd",
    "ext_gcd",
    "solve_diophantine",
    "position_in_progression",
    "reduction_trace",
]


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class DioSolution:
    x0: int
    y0: int


def solve_diophantine(a: int, b: int, c: int) -> DioSolution:
    """Solve ``a*x + b*y == c`` and return the solution with ``0 <= x0 < |b|``.

    Coefficients are signed, so ``k1*x - n*y == c`` is posed as
    ``solve_diophantine(k1, -n, c)``.  When ``gcd(a, b) > 1`` the smallest
    nonnegative ``x0`` is returned (it is then no longer the only one in range).
    """
    if b == 0:
        raise NoSolution("coefficient b must be nonzero")
    g, s, _ = ext_gcd(a, b)
    if g == 0 or c % g:
        raise NoSolution(f"gcd({a}, {b}) = {g} does not divide {c}")
    period = abs(b) // g
    x0 = (s * (c // g)) % period
    rest = c - a * x0
    assert rest % b == 0
    return DioSolution(x0, rest // b)


def position_in_progression(a: int, b: int, c: int) -> int:
    """1-based position of ``1 + c`` in ``1, 1+a, 1+2a, ...`` taken mod ``b``."""
    if not 0 <= c <= b - 1:
        raise InvalidRange(f"c={c} outside [0, {b - 1}]")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    return 1 + solve_diophantine(a, -b, c).x0


@dataclass(frozen=True)
class ReductionTrace:
    """Trace of the remainder-reduction algorithm for coprime ``(n, k)``.

    ``steps[i-1] == (a_i, k_i, r_i)`` for ``i = 1..m+1``; ``k_0 = k`` and
    ``r_0 = r``.  ``m`` is the index with ``r_{m+1} == 0``.
    """

    n: int
    k: int
    a: int
    r: int
    steps: Tuple[Tuple[int, int, int], ...]
    m: int
    s: Optional[int]
    t: int

    def k_at(self, i: int) -> int:
        return self.k if i == 0 else self.steps[i - 1][1]

    def r_at(self, i: int) -> int:
        return self.r if i == 0 else self.steps[i - 1][2]

    @property
    def ks(self) -> List[int]:
        return [self.k_at(i) for i in range(len(self.steps) + 1)]

    @property
    def rs(self) -> List[int]:
        return [self.r_at(i) for i in range(len(self.steps) + 1)]


def reduction_trace(n: int, k: int) -> ReductionTrace:
    if not n > k >= 2:
        raise InvalidRange(f"need n > k >= 2, got n={n}, k={k}")
    if gcd(n, k) != 1:
        raise NotCoprime(f"gcd({n}, {k}) != 1")
    a, r = divmod(n, k)
    steps = []
    k_prev, r_prev = k, r
    while True:
        k_i = k_prev - r_prev
        a_i, r_i = divmod(k_prev, k_i)
        steps.append((a_i, k_i, r_i))
        if r_i == 0:
            break
        k_prev, r_prev = k_i, r_i
    m = len(steps) - 1
    trace_ks = [k] + [st[1] for st in steps]
    trace_rs = [r] + [st[2] for st in steps]

    s = None
    for i in range(1, m):
        if trace_ks[i] >= 3 and trace_rs[i] == 1:
            s = i
            break

    if r in (1, k - 1):
        t = k
    elif s is not None:
        t = trace_ks[s] + 1
    else:
        t = trace_ks[m]
    return ReductionTrace(n, k, a, r, tuple(steps), m, s, t)
