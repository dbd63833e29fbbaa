"""Rule-driven edge colouring over a fixed circular layout.

A construction paints edges with explicit colours and marks other edges as
"alternating over two colours, start unknown".  ``finish`` turns those into a
full page assignment: explicit paints become pinned colours, unknown
alternations become per-edge colour restrictions, and an exact colouring of
the layout's conflict graph fills whatever is left.  Restrictions on a path
force alternation because consecutive path edges share a vertex.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .. import kernels
from ..book import BookEmbedding, canonical, make_embedding
from ..graph import Edge, circ, wrap

NODE_LIMIT = 200_000
RESCUE_LIMIT = 20_000_000


class ConstructionFailed(RuntimeError):
    pass


def interleave(a: Sequence[int], b: Sequence[int], a_first) -> List[int]:
    """Merge equal-length lists pairwise; ``a_first(j)`` picks the pair order."""
    out: List[int] = []
    for j, (x, y) in enumerate(zip(a, b)):
        out += [x, y] if a_first(j) else [y, x]
    return out


def rev(xs: Sequence[int]) -> List[int]:
    return list(reversed(xs))


def rotate(cyc: Sequence[int], v: int) -> List[int]:
    """``cyc`` read cyclically from ``v``, closed back at ``v``."""
    i = list(cyc).index(v)
    return list(cyc[i:]) + list(cyc[:i]) + [v]


class Painter:
    def __init__(self, n: int, k: int, order: Sequence[int], pages: int, route: str):
        self.n, self.k = n, k
        self.spec = circ(n, k)
        self.order = [wrap(v, n) for v in order]
        self.pages = pages
        self.route = route
        self.rules: Dict[Edge, int] = {}
        self.allowed: Dict[Edge, int] = {}
        self.clashes = 0
        self.strays = 0
        self.notes: List[Tuple[str, Tuple[int, int], int]] = []

    # -- rule entry -------------------------------------------------------

    def edge(self, u: int, v: int) -> Optional[Edge]:
        e = canonical(wrap(u, self.n), wrap(v, self.n))
        return e if e in self.spec.edge_set else None

    def paint(self, u: int, v: int, color: int, soft: bool = False) -> None:
        """Pin ``(u, v)``; ``soft`` only fills an unpainted edge."""
        e = self.edge(u, v)
        if e is None:
            self.strays += 1
            self.notes.append(("stray", (u, v), color))
            return
        prev = self.rules.get(e)
        if prev is None:
            self.rules[e] = color
        elif prev != color and not soft:
            self.clashes += 1
            self.notes.append(("clash", e, color))

    def paint_all(self, pairs: Iterable[Tuple[int, int]], color: int, soft: bool = False) -> None:
        for u, v in pairs:
            self.paint(u, v, color, soft)

    def restrict(self, pairs: Iterable[Tuple[int, int]], colors: Iterable[int]) -> None:
        mask = 0
        for c in colors:
            mask |= 1 << c
        for u, v in pairs:
            e = self.edge(u, v)
            if e is not None and e not in self.rules:
                old = self.allowed.get(e, mask)
                self.allowed[e] = old & mask or old

    def alternate(self, path: Sequence[int], c1: int, c2: int,
                  anchor: Optional[Tuple[int, int]] = None, anchor_color: Optional[int] = None) -> None:
        """Colour the still-unpainted edges of ``path`` with ``c1``/``c2`` alternately.

        Painted edges split the path into runs.  The run holding ``anchor``
        gets explicit colours (``anchor`` takes ``anchor_color``, default
        ``c1``); every other run is only restricted to ``{c1, c2}``.
        """
        pairs = list(zip(path, path[1:]))
        keys = [self.edge(u, v) for u, v in pairs]
        runs: List[List[int]] = [[]]
        for i, e in enumerate(keys):
            if e is None or e in self.rules:
                if runs[-1]:
                    runs.append([])
                continue
            runs[-1].append(i)
        target = self.edge(*anchor) if anchor is not None else None
        ac = c1 if anchor_color is None else anchor_color
        other = c2 if ac == c1 else c1
        for run in runs:
            hit = [i for i in run if keys[i] == target]
            if hit:
                for i in run:
                    self.rules[keys[i]] = ac if (i - hit[0]) % 2 == 0 else other
            else:
                self.restrict([pairs[i] for i in run], (c1, c2))

    # -- completion -------------------------------------------------------

    def finish(self, rescue: bool = True) -> BookEmbedding:
        """Complete the colouring; without ``rescue`` the rules must survive."""
        edges = self.spec.edges()
        index = {e: i for i, e in enumerate(edges)}
        pos = {v: i for i, v in enumerate(self.order)}
        pu = np.array([pos[u] for u, _ in edges])
        pv = np.array([pos[v] for _, v in edges])
        adj = kernels.conflict_adjacency(pu, pv)

        pre = [-1] * len(edges)
        for e, c in self.rules.items():
            if c < self.pages:
                pre[index[e]] = c
        dropped = _drop_conflicts(adj, pre)
        painted = sum(c >= 0 for c in pre)
        allowed = None
        if self.allowed:
            full = (1 << self.pages) - 1
            allowed = [full] * len(edges)
            for e, mask in self.allowed.items():
                allowed[index[e]] = mask & full or full

        stats = dict(painted=painted, dropped=dropped, clashes=self.clashes, strays=self.strays)
        attempts = [(pre, allowed, NODE_LIMIT, 0)]
        if allowed is not None:
            attempts.append((pre, None, NODE_LIMIT, 1))
        if rescue:
            attempts.append((None, None, RESCUE_LIMIT, 2))
        for pin, mask, limit, level in attempts:
            status, colors = kernels.kcolor(adj, self.pages, pin, limit, mask)
            if status == kernels.FOUND:
                stats["relaxed"] = level
                stats["completed"] = len(edges) - (painted if level < 2 else 0)
                assign = {e: colors[i] for i, e in enumerate(edges)}
                return make_embedding(self.order, assign, self.route, self.pages, **stats)
        raise ConstructionFailed(f"no {self.pages}-page colouring for C({self.n},{self.k}) on route {self.route}")


def _drop_conflicts(adj, pre) -> int:
    """Unpin edges until no two pinned edges in conflict share a colour."""
    dropped = 0
    while True:
        worst, score = -1, 0
        for v, c in enumerate(pre):
            if c < 0:
                continue
            s = sum(1 for w in adj[v] if pre[w] == c)
            if s > score or (s == score and s and v > worst):
                worst, score = v, s
        if score == 0:
            return dropped
        pre[worst] = -1
        dropped += 1
