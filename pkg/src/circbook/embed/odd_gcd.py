"""Odd ``n`` with ``d = gcd(n, k) > 1``: layouts over the k-cycles ``V_1..V_d``."""
from __future__ import annotations

from ..book import BLUE, GREEN, PURPLE, RED, YELLOW, BookEmbedding
from ..errors import PreconditionViolated
from ..numth import gcd
from .even import cycle
from .painter import Painter, interleave, rev, rotate


def merged_tail(n: int, k: int) -> list:
    """``V_{d-1}`` and ``V_d`` woven pair by pair."""
    d = gcd(n, k)
    return interleave(cycle(n, k, d - 1), cycle(n, k, d), lambda j: j == 0 or j % 2 == 1)


def embed_odd_gcd(n: int, k: int) -> BookEmbedding:
    d = gcd(n, k)
    if n % 2 == 0 or d < 3 or not 1 <= k <= n // 2:
        raise PreconditionViolated(f"need n odd and gcd(n,k) >= 3, got C({n},{k})")
    if n == 3 * k:
        return _three_k(n, k)
    if d == 3:
        return _gcd_three(n, k)
    return _gcd_large(n, k)


def _three_k(n: int, k: int) -> BookEmbedding:
    d = k
    order = list(cycle(n, k, 1))
    for i in range(2, d + 1):
        order += cycle(n, k, i) if i % 2 == 0 else rev(cycle(n, k, i))
    pt = Painter(n, k, order, 5, "odd-n/gcd>1/n=3k")
    for i in range(2, d, 2):
        pt.paint_all(((j, j + 1) for j in cycle(n, k, i)), YELLOW)
    pt.paint(1, 1 + 2 * k, YELLOW)
    for i in range(3, d - 1, 2):
        pt.paint_all(((j, j + 1) for j in cycle(n, k, i)), RED)
    pt.paint_all([(1, 1 + k), (2, 2 + k), (1 + 2 * k, 2 + 2 * k), (d, d + 2 * k)], RED)
    pt.paint(1, 2, PURPLE)
    pt.paint_all(((i + k, i + 2 * k) for i in (1, 2, d)), PURPLE)
    pt.paint_all(((i, i + k) for i in range(3, d)), PURPLE)
    pt.paint_all([(1, n), (1 + k, 2 + k), (d, d + k)], BLUE)
    pt.paint_all(((i, i + 2 * k) for i in range(3, d)), BLUE)
    pt.paint_all([(1 + k, k), (1 + 2 * k, 2 * k), (2, 2 + 2 * k)], GREEN)
    pt.paint_all(((i + k, i + 2 * k) for i in range(3, d)), GREEN)
    return pt.finish()


def _gcd_three(n: int, k: int) -> BookEmbedding:
    m = n // 3
    v1, v3 = cycle(n, k, 1), cycle(n, k, 3)
    pt = Painter(n, k, v1 + rev(merged_tail(n, k)), 5, "odd-n/gcd=3")
    at4, at4k = v1.index(4), v1.index((3 + k) % n + 1)

    # links from C_1 to its neighbours on C_0
    pt.paint_all([(1, 2), (3, 4)], GREEN)
    pt.paint_all([(1 + k, 2 + k), (3 + k, 4 + k)], BLUE)
    pt.paint_all(((i, i - 1) for i in v1[:at4]), PURPLE)
    pt.paint_all(((i, i - 1) for i in v1[at4k + 1:]), GREEN)
    pt.paint_all(((i, i + 1) for i in v1 if i not in (1, 1 + k)), YELLOW)

    # links from C_2 to C_3
    pt.paint(2, 3, BLUE)
    pt.paint(2 + k, 3 + k, GREEN)
    pt.paint(2 + (m - 2) * k, 3 + (m - 2) * k, RED)
    if d_is_k := (k == 3):
        pt.paint(2 + (m - 3) * k, 3 + (m - 3) * k, BLUE)
        pt.paint(2 + (m - 1) * k, 3 + (m - 1) * k, GREEN)
        pt.paint_all(((j, j + 1) for j in cycle(n, k, 2)), PURPLE, soft=True)
    else:
        pt.paint(2 + (m - 1) * k, 3 + (m - 1) * k, BLUE)
        cut = v3.index(n)
        pt.paint_all(((j - 1, j) for j in v3[:cut]), PURPLE, soft=True)
        pt.paint_all(((j - 1, j) for j in v3[cut:]), GREEN, soft=True)

    # cycles C_2 and C_3
    def pair(j):
        i = 3 + j * k
        return [(i - 1, i - 1 + k), (i, i + k)]

    pt.paint(2, 2 + k, PURPLE)
    pt.paint(3, 3 + k, YELLOW)
    for j in range(2, m - 4, 2):
        pt.paint_all(pair(j), BLUE)
    for j in list(range(1, m - 3, 2)) + [m - 1]:
        pt.paint_all(pair(j), RED)
    pt.paint_all(pair(m - 3), PURPLE if d_is_k else BLUE)
    pt.paint_all(pair(m - 2), BLUE if d_is_k else GREEN)

    # cycle C_1
    pt.paint(1, 1 + k, YELLOW)
    pt.paint(1, 1 - k, RED)
    ring = v1 + [1]
    if d_is_k:
        pt.paint(n - 2 - k, n - 2, BLUE)
        pt.alternate(ring, RED, PURPLE)
    elif (4 + 2 * k) % n == 1:
        pt.paint(4, 4 + k, PURPLE)
        pt.alternate(ring, RED, GREEN, anchor=(4 - k, 4))
    else:
        pt.paint(4, 4 + k, RED)
        pt.paint(4, 4 - k, BLUE)
        pt.alternate(v1[1:at4], RED, GREEN)
        pt.alternate(v1[at4 + 1:] + [1], PURPLE, BLUE, anchor=(4 + k, 4 + 2 * k))
    return pt.finish()


def _gcd_large(n: int, k: int) -> BookEmbedding:
    d = gcd(n, k)
    m = n // d
    order = []
    for i in range(1, d - 1, 2):
        order += cycle(n, k, i)
    order += rev(merged_tail(n, k))
    for i in range(d - 3, 1, -2):
        order += rev(cycle(n, k, i))
    pt = Painter(n, k, order, 5, "odd-n/gcd>=5")
    vd = cycle(n, k, d)
    cut = vd.index(n)

    # links from C_{d-1} to C_d
    pt.paint(d - 1 + (m - 2) * k, d + (m - 2) * k, RED)
    pt.paint(d - 1 + (m - 3) * k, d + (m - 3) * k, BLUE)
    pt.paint_all(((j - 1, j) for j in vd[:cut]), PURPLE, soft=True)
    pt.paint_all(((j - 1, j) for j in vd[cut:]), GREEN, soft=True)

    # the rest of C_0
    for i in range(2, d - 2, 2):
        pt.paint_all(((j, j + 1) for j in cycle(n, k, i)), RED)
    for i in range(1, d - 1, 2):
        pt.paint_all(((j, j + 1) for j in cycle(n, k, i) if j != d - 2 + k), YELLOW)
    pt.paint_all([(d - 2 + k, d - 1 + k), (d, d + 1)], BLUE)
    pt.paint_all(((j, j + 1) for j in vd[:cut] if j != d), GREEN)
    pt.paint_all(((j, j + 1) for j in vd[cut:]), PURPLE)

    # cycles C_{d-1} and C_d
    def pair(j):
        i = d + j * k
        return [(i - 1, i - 1 + k), (i, i + k)]

    pt.paint(d - 1, d - 1 + k, GREEN)
    pt.paint(d, d + k, YELLOW)
    for j in list(range(1, m - 3, 2)) + [m - 1]:
        pt.paint_all(pair(j), RED)
    for j in list(range(2, m - 4, 2)) + [m - 2]:
        pt.paint_all(pair(j), BLUE)
    pivot = (d + (m - 3) * k - 1) % n + 1
    pt.paint_all(pair(m - 3), PURPLE if vd.index(pivot) < cut else GREEN)

    # cycles C_1 .. C_{d-2}
    pt.paint(d + 1 - k, d + 1, GREEN)
    pt.paint(d + 1, d + 1 + k, PURPLE)
    ring = rotate(cycle(n, k, 1), d + 1)
    pt.alternate(ring[1:-1], RED, BLUE, anchor=(1, 1 - k))
    pt.paint_all(((i, i - k) for i in range(2, d - 1)), PURPLE)
    for j in range(2, d - 2):
        pt.alternate(cycle(n, k, j), BLUE, GREEN)
    pt.paint(d - 2, d - 2 + k, GREEN)
    pt.paint(d - 2 + k, d - 2 + 2 * k, PURPLE)
    pt.alternate(cycle(n, k, d - 2), GREEN, BLUE)
    return pt.finish()
