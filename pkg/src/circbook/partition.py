"""Ordered vertex partitions ``P_1..P_t`` of ``C(n, k)`` for coprime ``(n, k)``.

Each set is a run along one jump orbit; consecutive elements differ by the
walking step (``k``, or ``n - k`` for the descending scheme).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from .errors import KOutOfRange, NotCoprime
from .graph import wrap
from .numth import ReductionTrace, gcd, reduction_trace

__all__ = ["Scheme", "OrderedPartition", "build_partition", "read_fixture", "write_fixture"]


class Scheme(str, enum.Enum):
    R1 = "R1"
    RK1 = "RK1"
    DESCENDING_WITH_S = "DescendingWithS"
    ASCENDING_NO_S = "AscendingNoS"


@dataclass(frozen=True)
class OrderedPartition:
    n: int
    k: int
    scheme: Scheme
    sets: Tuple[Tuple[int, ...], ...]
    trace: ReductionTrace

    @property
    def t(self) -> int:
        return len(self.sets)

    @property
    def step(self) -> int:
        """Difference between consecutive elements of a set."""
        return self.n - self.k if self.scheme is Scheme.DESCENDING_WITH_S else self.k

    def __getitem__(self, i: int) -> Tuple[int, ...]:
        """1-based access: ``part[1]`` is ``P_1``."""
        return self.sets[i - 1]


def _walk(start: int, stop: int, step: int, n: int) -> Tuple[int, ...]:
    out = [start]
    v = start
    while v != stop:
        v = wrap(v + step, n)
        out.append(v)
        if len(out) > n:
            raise AssertionError(f"walk from {start} never reaches {stop}")
    return tuple(out)


def build_partition(n: int, k: int) -> OrderedPartition:
    if not 2 <= k <= n // 2:
        raise KOutOfRange(f"k={k} outside [2, {n // 2}]")
    if gcd(n, k) != 1:
        raise NotCoprime(f"gcd({n}, {k}) != 1")
    tr = reduction_trace(n, k)
    a, r = tr.a, tr.r

    if r == 1:
        scheme = Scheme.R1
        sets = [tuple(i + j * k for j in range(a + (i == 1))) for i in range(1, k + 1)]
    elif r == k - 1:
        scheme = Scheme.RK1
        sets = [tuple(i + j * k for j in range(a + (i < k))) for i in range(1, k + 1)]
    else:
        if tr.s is not None:
            scheme, step = Scheme.DESCENDING_WITH_S, n - k
        else:
            scheme, step = Scheme.ASCENDING_NO_S, k
        t = tr.t
        sets = [_walk(i, wrap(i + 1 - step, n), step, n) for i in range(1, t)]
        sets.append(_walk(t, wrap(1 - step, n), step, n))

    flat = [v for s in sets for v in s]
    if sorted(flat) != list(range(1, n + 1)):
        raise AssertionError(f"sets for C({n},{k}) do not partition the vertices")
    if scheme in (Scheme.DESCENDING_WITH_S, Scheme.ASCENDING_NO_S):
        sizes = {len(s) for s in sets[:-1]}
        if len(sizes) != 1 or len(sets[-1]) >= len(sets[0]):
            raise AssertionError(f"unequal set sizes for C({n},{k}): {[len(s) for s in sets]}")
    return OrderedPartition(n, k, scheme, tuple(sets), tr)


def write_fixture(path: Union[str, Path], sets: Sequence[Sequence[int]]) -> None:
    Path(path).write_text("".join(",".join(map(str, s)) + "\n" for s in sets))


def read_fixture(path: Union[str, Path]) -> List[Tuple[int, ...]]:
    lines = Path(path).read_text().splitlines()
    return [tuple(int(x) for x in ln.split(",")) for ln in lines if ln.strip()]
