"""Even ``n``: zigzag order for odd ``k``, cycle blocks for even ``k``."""
from __future__ import annotations

from ..book import BLUE, GREEN, PURPLE, RED, YELLOW, BookEmbedding
from ..errors import PreconditionViolated
from ..numth import gcd
from .painter import Painter, rev


def cycle(n: int, k: int, i: int) -> list:
    """``V_i``: the k-cycle through ``i`` listed from ``i``."""
    return [(i + j * k - 1) % n + 1 for j in range(n // gcd(n, k))]


def embed_even_k_odd(n: int, k: int) -> BookEmbedding:
    if n % 2 or k % 2 == 0 or not 1 <= k <= n // 2:
        raise PreconditionViolated(f"need n even and k odd, got C({n},{k})")
    order = [v for i in range(n // 2) for v in (2 * i + 1, n - 2 * i)]
    half = 2 * k == n
    pages = 2 if k == 1 else 3 if half else 4
    pt = Painter(n, k, order, pages, "even-n/odd-k/half-jump" if half else "even-n/odd-k")
    for i in range(1, n + 1):
        pt.paint(i, i + 1, YELLOW if i % 2 else PURPLE)
        if k == 1:
            continue
        if half:
            if i % 2 == 0:
                pt.paint(i, i + k, GREEN)
        else:
            pt.paint(i, i + k, GREEN if i % 2 == 0 else RED)
    return pt.finish()


def embed_even_k_even(n: int, k: int) -> BookEmbedding:
    if n % 2 or k % 2 or not 2 <= k <= n // 2:
        raise PreconditionViolated(f"need n and k even, got C({n},{k})")
    if 2 * k == n:
        order = list(range(1, n // 2 + 1)) + list(range(n, n // 2, -1))
        pt = Painter(n, k, order, 4, "even-n/even-k/half-jump")
        pt.paint(1, n, PURPLE)
        for i in range(1, n):
            pt.paint(i, i + 1, RED if i % 2 else GREEN)
        for i in range(1, n // 2 + 1):
            pt.paint(i, i + k, YELLOW)
        return pt.finish()

    d = gcd(n, k)
    order = []
    for i in range(1, d + 1):
        order += rev(cycle(n, k, i)) if i % 2 else cycle(n, k, i)
    pt = Painter(n, k, order, 5, "even-n/even-k")
    last = cycle(n, k, d)
    cut = last.index(n)
    for i in range(1, d):
        pt.paint_all(((j, j + 1) for j in cycle(n, k, i)), PURPLE if i % 2 else GREEN)
    pt.paint_all(((j, j + 1) for j in last[:cut]), GREEN)
    pt.paint_all(((j, j + 1) for j in last[cut:]), BLUE)
    for i in range(1, d + 1):
        path = cycle(n, k, i)
        pt.paint(path[-1], path[0], RED)
        pt.restrict(zip(path, path[1:]), (RED, BLUE, YELLOW))
    return pt.finish()
