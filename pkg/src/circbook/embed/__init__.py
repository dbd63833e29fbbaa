"""Optimal matching book embeddings of ``C(n, k)``.

``embed`` routes each instance to a family construction, verifies the result,
and falls back to exhaustive search over circular orders when a construction
cannot complete on a tiny instance.
"""
from __future__ import annotations

from itertools import permutations

from ..book import BookEmbedding, make_embedding
from ..errors import InvalidRange, Unsupported
from ..graph import circ, max_degree, predicted_mbt
from ..numth import gcd
from ..verify import min_pages_for_layout, verify_embedding
from .coprime import embed_odd_mid_r, embed_odd_r1, embed_odd_rk1
from .even import embed_even_k_even, embed_even_k_odd
from .odd_gcd import embed_odd_gcd
from .painter import Painter

__all__ = [
    "embed",
    "route_for",
    "embed_cycle",
    "embed_even_k_odd",
    "embed_even_k_even",
    "embed_odd_gcd",
    "embed_odd_r1",
    "embed_odd_rk1",
    "embed_odd_mid_r",
    "embed_exhaustive",
]

FALLBACK_MAX_N = 10


def embed_cycle(n: int) -> BookEmbedding:
    """``C(n, 1)``: the plain cycle, 2 pages when even, 3 when odd."""
    pt = Painter(n, 1, range(1, n + 1), 2 if n % 2 == 0 else 3, "cycle")
    return pt.finish()


def route_for(n: int, k: int):
    """The construction responsible for ``C(n, k)``."""
    if n < 3 or not 1 <= k <= n // 2:
        raise InvalidRange(f"need n >= 3 and 1 <= k <= n/2, got C({n},{k})")
    if k == 1:
        return lambda n, k: embed_cycle(n)
    if n % 2 == 0:
        return embed_even_k_odd if k % 2 else embed_even_k_even
    if gcd(n, k) > 1:
        return embed_odd_gcd
    r = n % k
    if r == 1:
        return embed_odd_r1
    if r == k - 1:
        return embed_odd_rk1
    return embed_odd_mid_r


def embed(n: int, k: int) -> BookEmbedding:
    build = route_for(n, k)
    spec = circ(n, k)
    target = predicted_mbt(spec)
    try:
        emb = build(n, k)
    except Exception:
        if n > FALLBACK_MAX_N:
            raise
        emb = None
    if emb is not None and emb.pages == target and verify_embedding(spec, emb).valid:
        return emb
    if n <= FALLBACK_MAX_N:
        return embed_exhaustive(n, k)
    raise AssertionError(f"construction for C({n},{k}) failed verification")


def embed_exhaustive(n: int, k: int) -> BookEmbedding:
    """First circular order (vertex 1 anchored) admitting ``predicted_mbt`` pages."""
    spec = circ(n, k)
    if n > FALLBACK_MAX_N:
        raise Unsupported(f"exhaustive search is limited to n <= {FALLBACK_MAX_N}")
    target = max(predicted_mbt(spec), max_degree(spec))
    for tail in permutations(range(2, n + 1)):
        order = (1,) + tail
        got, colors = min_pages_for_layout(spec, order, cap=target)
        if got <= target:
            assign = dict(zip(spec.edges(), colors))
            return make_embedding(order, assign, "fallback", target)
    raise Unsupported(f"no {target}-page embedding of C({n},{k}) found")
