"""Odd ``n`` with ``gcd(n, k) = 1``: layouts over the ordered partition ``P_1..P_t``.

Inside the mid-remainder constructions ``k`` denotes the partition's walking
step, which is ``n - k`` when the trace carries an ``s`` index.
"""
from __future__ import annotations

from ..book import BLUE, GREEN, PURPLE, RED, YELLOW, BookEmbedding
from ..errors import PreconditionViolated
from ..numth import gcd
from ..partition import build_partition
from .painter import ConstructionFailed, Painter, interleave, rev


def _coprime_odd(n: int, k: int) -> None:
    if n % 2 == 0 or not 2 <= k <= n // 2 or gcd(n, k) != 1:
        raise PreconditionViolated(f"need n odd, gcd(n,k) = 1, 2 <= k <= n/2, got C({n},{k})")


def _links(path):
    return list(zip(path, path[1:]))


# -- remainder 1 ------------------------------------------------------------

def embed_odd_r1(n: int, k: int) -> BookEmbedding:
    _coprime_odd(n, k)
    a, r = divmod(n, k)
    if r != 1:
        raise PreconditionViolated(f"need n mod k = 1, got C({n},{k})")
    if a == 2:
        return _r1_pair(n, k)
    if k % 2 == 0:
        return _r1_even(n, k, a)
    return _r1_odd(n, k, a)


def _r1_pair(n: int, k: int) -> BookEmbedding:
    q1, q2 = list(range(1, k + 2)), list(range(k + 2, n + 1))
    pt = Painter(n, k, q1 + rev(q2), 5, "odd-n/coprime/r=1/a=2")
    pt.paint(1, 1 + k, PURPLE)
    pt.paint_all(((i, i + k) for i in q1[1:]), GREEN)
    pt.paint_all(((i, i + k) for i in q2), RED)
    pt.paint_all([(1, 2), (1 + k, 2 + k)], YELLOW)
    pt.paint(1, n, BLUE)
    pt.alternate(q1[1:], BLUE, PURPLE, anchor=(k, k + 1))
    pt.alternate(q2, PURPLE, BLUE, anchor=(n, n - 1))
    return pt.finish()


def _r1_even(n: int, k: int, a: int) -> BookEmbedding:
    P = [None] + [list(s) for s in build_partition(n, k).sets]
    order = []
    for i in range(1, k + 1):
        order += rev(P[i]) if i % 2 else P[i]
    pt = Painter(n, k, order, 5, "odd-n/coprime/r=1/k-even")
    pt.paint(1, n, YELLOW)
    for j in range(2, k + 1, 2):
        pt.paint_all(((i, i - 1) for i in P[j]), GREEN)
        pt.paint_all(((i, i + 1) for i in P[j]), RED)
    evens, odds = range(2, k + 1, 2), range(1, k, 2)
    pt.paint_all(((i, i - k) for i in evens), BLUE)
    pt.paint_all(((i, i + k) for i in odds), BLUE)
    pt.paint_all(((i + (a - 1) * k, i + (a - 2) * k) for i in evens), BLUE)
    pt.paint_all(((i, i - k) for i in odds), PURPLE)
    pt.paint_all(((i, i + k) for i in evens), PURPLE)
    pt.paint_all(((i + (a - 1) * k, i + (a - 2) * k) for i in range(3, k, 2)), PURPLE)
    pt.paint(n, n - k, PURPLE)
    for i in range(1, k + 1):
        pt.alternate(P[i], BLUE, YELLOW)
    return pt.finish()


def _r1_odd(n: int, k: int, a: int) -> BookEmbedding:
    P = [None] + [list(s) for s in build_partition(n, k).sets]
    Q = [None, [1]] + [P[i] for i in range(2, k + 1)] + [P[1][1:]]
    qc = interleave(Q[k + 1], Q[k], lambda j: j % 2 == 0)
    order = Q[1] + rev(qc)
    for i in range(2, k):
        order += Q[i] if i % 2 == 0 else rev(Q[i])
    pt = Painter(n, k, order, 5, "odd-n/coprime/r=1/k-odd")

    def hop(i, j):
        return (i + j * k, i + (j + 1) * k)

    for j in range(2, k, 2):
        pt.paint_all(((i, i + 1) for i in Q[j]), GREEN)
    pt.paint(1, n, GREEN)
    for j in range(1, k - 1, 2):
        pt.paint_all(((i, i + 1) for i in Q[j]), BLUE)
    pt.paint_all([(k, k + 1), (n - 1, n)], BLUE)
    pt.paint_all((hop(i, j) for i in (2, k, k + 1) for j in range(1, a - 2, 2)), BLUE)
    pt.paint_all(((i, i + 1) for i in Q[k + 1] if i != n), PURPLE)
    pt.paint_all(((i, i - k) for i in range(4, k, 2)), PURPLE)
    pt.paint_all((hop(3, j) for j in range(0, a - 1, 2)), PURPLE)
    pt.paint_all((hop(i, j) for i in range(4, k) for j in range(1, a - 2, 2)), PURPLE)
    pt.paint_all(((i, i + 1) for i in Q[k] if i not in (k, n - 1)), YELLOW)
    pt.paint_all([(1, 1 + k), (k, n), (2, 2 - k)], YELLOW)
    pt.paint_all((hop(2, j) for j in range(2, a - 1, 2)), YELLOW)
    pt.paint_all((hop(3, j) for j in range(1, a - 2, 2)), YELLOW)
    pt.paint_all((hop(i, j) for i in range(4, k) for j in range(0, a - 1, 2)), YELLOW)
    pt.paint(2, 2 + k, RED)
    pt.paint_all((hop(i, j) for i in (k, k + 1) for j in range(0, a - 1, 2)), RED)
    pt.paint_all(((i, i - k) for i in range(1, k - 1, 2)), RED)
    return pt.finish()


# -- remainder k - 1 -------------------------------------------------------

def embed_odd_rk1(n: int, k: int) -> BookEmbedding:
    _coprime_odd(n, k)
    a, r = divmod(n, k)
    if k < 3 or r != k - 1:
        raise PreconditionViolated(f"need n mod k = k - 1 with k >= 3, got C({n},{k})")
    if k % 2 == 0:
        P = [None] + [list(s) for s in build_partition(n, k).sets]
        order = []
        for i in range(1, k + 1):
            order += P[i] if i % 2 else rev(P[i])
        pt = Painter(n, k, order, 5, "odd-n/coprime/r=k-1/k-even")
        pt.paint(1, n, RED)
        for j in range(1, k + 1):
            pt.paint_all(((i, i + 1) for i in P[j] if j % 2 == 0 or i != n),
                         GREEN if j % 2 == 0 else YELLOW)
        pt.paint_all(((i, i - k) for i in range(1, k, 2)), BLUE)
        pt.paint_all(((i, i - k) for i in range(2, k + 1, 2)), PURPLE)
        for j in range(1, k + 1):
            pt.restrict(_links(P[j]), (RED, BLUE, PURPLE))
        return pt.finish()

    Q = [None] + [list(range(1 + (i - 1) * k, i * k + 1)) for i in range(1, a + 1)]
    Q.append(list(range(a * k + 1, n + 1)))
    order = []
    for i in range(1, a + 2):
        order += Q[i] if i % 2 else rev(Q[i])
    pt = Painter(n, k, order, 5, "odd-n/coprime/r=k-1/k-odd")
    pt.paint(1, 1 - k, RED)
    for j in range(1, a + 2):
        pt.paint_all(((i, i + k) for i in Q[j] if j % 2 == 0 or i != n + 1 - k),
                     GREEN if j % 2 == 0 else YELLOW)
    pt.paint_all(((1 + (i - 1) * k, (i - 1) * k) for i in range(1, a + 1, 2)), BLUE)
    pt.paint_all(((1 + (i - 1) * k, (i - 1) * k) for i in range(2, a + 2, 2)), PURPLE)
    for j in range(1, a + 2):
        pt.restrict(_links(Q[j]), (RED, BLUE, PURPLE))
    return pt.finish()


# -- remainder in [2, k - 2] -----------------------------------------------

def embed_odd_mid_r(n: int, k: int) -> BookEmbedding:
    _coprime_odd(n, k)
    r = n % k
    if not 2 <= r <= k - 2:
        raise PreconditionViolated(f"need 2 <= n mod k <= k - 2, got C({n},{k})")
    part = build_partition(n, k)
    P = [None] + [list(s) for s in part.sets]
    t, s = part.t, part.step
    if t % 2:
        if t == 3:
            return _odd_t3(n, k, s, P)
        return _odd_t_large(n, k, s, t, P)
    if t == 2:
        return _even_t2(n, k, s, P)
    return _even_t_large(n, k, s, t, P)


def _odd_t3(n: int, k0: int, k: int, P) -> BookEmbedding:
    pt_len = len(P[3])
    big = pt_len > len(P[1]) // 2
    p1a, p1b = P[1][:pt_len], P[1][pt_len:]
    p2a, p2b = P[2][:pt_len], P[2][pt_len:]
    p3w = interleave(p2a, P[3], lambda j: j % 2 == 0)
    route = "odd-n/coprime/t-odd/t=3/" + ("|Pt|>half" if big else "|Pt|<=half")
    pt = Painter(n, k0, p1a + rev(p3w) + p1b + rev(p2b), 5, route)

    pt.paint(2, 3, RED)
    pt.paint(2 + k, 3 + k, BLUE)
    pt.paint_all(((i, i - 1) for i in P[2]), PURPLE)
    if big:
        tail = len(p1a) - len(p1b)
        pt.paint_all(((i, i - 1) for i in (p1a[len(p1a) - tail:] if tail > 0 else [])), YELLOW)
        pt.paint_all(((i - 1, i - 2) for i in p1b), YELLOW)
        pt.paint_all(((i, i - 1) for i in p1b), GREEN)
        pt.paint_all(((i + 1, i + 2) for i in p1b), GREEN)
        pt.paint_all(((3 + j * k, 2 + j * k) for j in range(2, len(P[3]) - len(p2b))), GREEN)
    else:
        pt.paint_all(((j, j - 1) for j in P[3][2:]), GREEN)
        pt.paint_all(((i, i - 1) for i in P[1][:len(P[1]) - len(P[3])]), GREEN)
        pt.paint_all(((i, i - 1) for i in P[1][len(P[1]) - len(P[3]):]), YELLOW)

    pt.paint(n - 1 - k, n - 1, RED)
    pt.paint_all(((i, i - k) for i in (1, 2, 3, n)), BLUE)
    if big:
        pt.alternate(p1a, RED, BLUE, anchor=(1, 1 + k))
        pt.alternate(p1b, YELLOW, BLUE, anchor=(2 - 2 * k, 2 - k))
    else:
        pt.paint(2 - k, 2 - 2 * k, GREEN)
        pt.alternate(p1a, RED, BLUE, anchor=(1, 1 + k))
        pt.alternate(p1b[:-1], RED, BLUE, anchor=(n - 1, k - 1), anchor_color=BLUE)
    pt.alternate(p2b, YELLOW, RED)
    for i, path in ((2, p2a), (3, P[3])):
        pt.paint(i, i + k, GREEN)
        pt.alternate(path, RED, BLUE, anchor=(i + k, i + 2 * k))
    return pt.finish()


def _odd_t_large(n: int, k0: int, k: int, t: int, P) -> BookEmbedding:
    pt_len = len(P[t])
    pa, pb = P[t - 1][:pt_len], P[t - 1][pt_len:]
    ptw = interleave(pa, P[t], lambda j: j % 2 == 0)
    order = []
    for i in range(1, t - 2):
        order += rev(P[i]) if i % 2 else P[i]
    order += pb + rev(P[t - 2]) + ptw
    pt = Painter(n, k0, order, 5, "odd-n/coprime/t-odd/t>3")

    pt.paint(t - 1, t, RED)
    for i in range(1, t - 1, 2):
        pt.paint_all(((j, j + 1) for j in P[i]), YELLOW)
    for i in list(range(2, t - 2, 2)) + [t]:
        pt.paint_all(((j, j + 1) for j in P[i]), GREEN)
    pt.paint(n - k, 1 - k, PURPLE)
    pt.paint_all(((j, j + 1) for j in pb), PURPLE)
    stop = (1 - k - 1) % n + 1
    pt.paint_all(((i, i - 1) for i in P[t] if i not in (t, stop)), BLUE)

    pt.paint_all(((i, i - k) for i in list(range(2, t - 2, 2)) + [t - 2]), RED)
    pt.paint_all(((i, i - k) for i in list(range(1, t - 3, 2)) + [t - 1, t]), BLUE)

    for i in P[t][1::2]:
        pt.paint_all([(i - 1, i - 1 - k), (i, i - k)], PURPLE)
        pt.paint_all([(i, i + k), (i - 1, i - 1 + k)], RED)

    for i in range(2, t - 1):
        pt.alternate(P[i], PURPLE, BLUE)
    m = len(P[1])
    pt.paint(1 + (m - 2) * k, 1 + (m - 1) * k, PURPLE)
    pt.alternate(P[1], RED, BLUE, anchor=(1, 1 + k))
    pt.paint(n - k, n, BLUE)
    pt.alternate(pb, GREEN, RED)
    return pt.finish()


def _even_t2(n: int, k0: int, k: int, P) -> BookEmbedding:
    c1, c2 = P[1].index(n), P[2].index(n - 1)
    p1a, p1b = P[1][:c1], P[1][c1:]
    p2a, p2b = P[2][:c2], P[2][c2:]
    lane = interleave(p1b, p2b, lambda j: j % 2 == 0)
    pt = Painter(n, k0, p1a + rev(lane) + rev(p2a), 5, "odd-n/coprime/t-even/t=2")

    pt.paint_all(((i - 1, i) for i in p2a), PURPLE)
    pt.paint_all(((i, i + 1) for i in p2b if i != n - 1), PURPLE)
    pt.paint(1, n, RED)
    pt.paint_all(((i, i - 1) for i in p2b), RED)
    pt.paint(n - 1, n, GREEN)
    pt.paint_all(((i, i + 1) for i in p2a), GREEN)
    pt.paint_all(((i, i + 1) for i in p1b if i != n), YELLOW)

    pt.paint(n - k, n, PURPLE)
    pt.paint(n - 1, n - 1 - k, YELLOW)
    for pos, i in enumerate(p1b, 1):
        pt.paint_all([(i, i + k), (i - 1, i - 1 + k)], GREEN if pos % 2 == 0 else BLUE)

    pt.alternate(p2a, YELLOW, RED, anchor=(n - 1 - 2 * k, n - 1 - k), anchor_color=RED)
    shadow = [(i - 3) % n + 1 for i in p1b]
    pt.alternate(shadow, PURPLE, BLUE, anchor=(k - 2, n - 2))
    pt.paint(n - k - 2, n - 2, BLUE)
    pt.alternate(p1a, GREEN, RED, anchor=(1, 1 + k))
    return pt.finish()


def _even_t_large(n: int, k0: int, k: int, t: int, P) -> BookEmbedding:
    # The printed weave of L fits some instances only; the strictly
    # alternating weave is the fallback that fits the rest.
    try:
        return _even_t_large_with(n, k0, k, t, P, lambda j: j == 0 or j % 2 == 1, False)
    except ConstructionFailed:
        return _even_t_large_with(n, k0, k, t, P, lambda j: j % 2 == 0, True)


def _even_t_large_with(n, k0, k, t, P, weave, rescue) -> BookEmbedding:
    c1, c2 = P[1].index(t + 1), P[t - 1].index(n)
    p1a, p1b = P[1][:c1], P[1][c1:]
    qa, qb = P[t - 1][:c2], P[t - 1][c2:]
    lane = interleave(qb, p1a, weave)
    order = []
    for i in range(2, t - 1):
        order += rev(P[i]) if i % 2 == 0 else P[i]
    order += qa + lane + rev(P[t]) + p1b
    pt = Painter(n, k0, order, 5, "odd-n/coprime/t-even/t>=4")

    for i in list(range(2, t - 1, 2)) + [t]:
        pt.paint_all(((j, j + 1) for j in P[i] if j != n - 1), YELLOW)
    pt.paint(1, n, YELLOW)
    for i in range(1, t - 2, 2):
        pt.paint_all(((j, j + 1) for j in P[i] if j != 1), GREEN)
    pt.paint_all([(1, 2), (n - 1, n), (k, k + 1)], PURPLE)
    kk = (k - 1) % n + 1
    pt.paint_all(((j + 1, j) for j in P[t - 1] if j not in (n, kk)), RED)

    pt.paint(k, n, GREEN)
    for j in p1a[1::2]:
        pt.paint_all([(j - 1, j + k - 1), (j, j + k)], BLUE)
    pt.paint(n - k, n, BLUE)
    for j in p1a[2::2]:
        pt.paint_all([(j - 1, j + k - 1), (j, j + k)], PURPLE)
    pt.paint(1, 1 + k, RED)

    pt.paint_all(((i, i - k) for i in range(1, t, 2)), BLUE)
    pt.paint_all(((i, i - k) for i in range(2, t - 1, 2)), RED)

    pt.alternate(p1b, BLUE, PURPLE, anchor=(t + 1, t + 1 + k))
    pt.alternate(qa, GREEN, PURPLE)
    pt.alternate(P[t], GREEN, PURPLE, anchor=(t, t + k))
    for i in range(3, t - 2):
        pt.alternate(P[i], BLUE, PURPLE)
    pt.paint(2, 2 + k, BLUE)
    pt.alternate(P[2], RED, PURPLE)
    pt.paint(n - 1 - k, n - 1, BLUE)
    pt.paint(k - 1, n - 1, RED)
    pt.alternate(P[t - 2], PURPLE, BLUE)
    emb = pt.finish(rescue)
    emb.stats["alternating_weave"] = int(rescue)
    return emb
