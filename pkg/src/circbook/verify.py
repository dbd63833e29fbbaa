"""Ground truth for matching book embeddings.

:func:`verify_embedding` checks an embedding against the definition, and
:func:`brute_force_mbt` computes the exact matching book thickness of a small
graph by enumerating circular orders.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from . import kernels
from .book import BookEmbedding, Layout
from .errors import TooLarge, UnknownVertex
from .graph import CirculantSpec, Edge, max_degree

MAX_ORACLE_N = 10


@dataclass(frozen=True)
class VerificationReport:
    proper_matching_per_page: bool
    noncrossing_per_page: bool
    complete_cover: bool
    pages_used: int
    first_violation: Optional[Tuple[Edge, Optional[Edge], str]] = None

    @property
    def valid(self) -> bool:
        return self.proper_matching_per_page and self.noncrossing_per_page and self.complete_cover


def _positions(order) -> dict:
    if isinstance(order, Layout):
        order = order.order
    return {v: i for i, v in enumerate(order)}


def crosses(order, e1: Edge, e2: Edge) -> bool:
    """True iff the chords ``e1`` and ``e2`` strictly interleave on the circle."""
    pos = _positions(order)
    try:
        a, b = sorted((pos[e1[0]], pos[e1[1]]))
        c, d = sorted((pos[e2[0]], pos[e2[1]]))
    except KeyError as exc:
        raise UnknownVertex(f"vertex {exc.args[0]} not in layout") from None
    return a < c < b < d or c < a < d < b


def verify_embedding(spec: CirculantSpec, emb: BookEmbedding) -> VerificationReport:
    pos = emb.layout.positions()
    edges = spec.edge_set
    violation = None
    cover = True
    for e in edges:
        if e not in emb.assignment:
            cover = False
            violation = violation or (e, None, "edge not assigned to any page")
    for e, p in emb.assignment.items():
        if e not in edges:
            cover = False
            violation = violation or (e, None, "assigned edge is not in the graph")
        elif not 0 <= p < emb.pages:
            cover = False
            violation = violation or (e, None, f"page {p} outside [0, {emb.pages - 1}]")

    matching = True
    noncross = True
    for page, es in emb.page_edges().items():
        seen = {}
        for e in es:
            for v in e:
                if v in seen:
                    matching = False
                    violation = violation or (seen[v], e, f"edges share vertex {v} on page {page}")
                seen[v] = e
        spans = [(min(pos[u], pos[v]), max(pos[u], pos[v]), (u, v)) for u, v in es]
        for i, (a, b, e) in enumerate(spans):
            for c, d, f in spans[i + 1:]:
                if a < c < b < d or c < a < d < b:
                    noncross = False
                    violation = violation or (e, f, f"chords cross on page {page}")
    used = len({p for p in emb.assignment.values()})
    return VerificationReport(matching, noncross, cover, used, violation)


def _edge_arrays(spec: CirculantSpec):
    es = spec.edges()
    return [u for u, _ in es], [v for _, v in es]


def _oracle_chunk(args):
    n, eu, ev, cap, lower, firsts = args
    return kernels.oracle_min_pages(n, eu, ev, cap, lower, firsts)


def brute_force_mbt(spec: CirculantSpec, page_cap: int = 6, workers: int | None = None) -> int:
    """Exact matching book thickness; returns ``page_cap + 1`` if it exceeds the cap.

    Work is split over the vertex placed second when ``workers > 1``
    (default from ``CIRC_THREADS``); the result is the min over all chunks.
    """
    n = spec.n
    if n > MAX_ORACLE_N:
        raise TooLarge(f"n={n} exceeds the exhaustive-search guard {MAX_ORACLE_N}")
    eu, ev = _edge_arrays(spec)
    lower = max_degree(spec)
    if workers is None:
        workers = int(os.environ.get("CIRC_THREADS", "1") or 1)
    if workers <= 1 or n <= 4:
        return kernels.oracle_min_pages(n, eu, ev, page_cap, lower)
    chunks = [(n, eu, ev, page_cap, lower, [p]) for p in range(2, n + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return min(pool.map(_oracle_chunk, chunks))


def min_pages_for_layout(spec: CirculantSpec, order: Sequence[int], cap: int = 8) -> Tuple[int, list]:
    """Exact page count for one fixed layout: chromatic number of the conflict graph."""
    pos = _positions(order)
    es = spec.edges()
    adj = kernels.conflict_adjacency([pos[u] for u, _ in es], [pos[v] for _, v in es])
    for k in range(max_degree(spec), cap + 1):
        status, colors = kernels.kcolor(adj, k)
        if status == kernels.FOUND:
            return k, colors
    return cap + 1, []
