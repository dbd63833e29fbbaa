"""Pure-Python kernels; reference twin of ``_ckernels.pyx``.

Conflict graphs are over edges of a circular layout: two edges conflict when
they share an endpoint or their chords strictly interleave.
"""
from itertools import permutations

import numpy as np

FOUND, INFEASIBLE, LIMIT = 1, 0, -1


def conflict_adjacency(pu, pv):
    """Adjacency lists of the conflict graph for edges at positions ``(pu[i], pv[i])``."""
    a = np.minimum(pu, pv).astype(np.int64)
    b = np.maximum(pu, pv).astype(np.int64)
    if a.size == 0:
        return []
    A, B = a[:, None], b[:, None]
    C, D = a[None, :], b[None, :]
    cross = ((A < C) & (C < B) & (B < D)) | ((C < A) & (A < D) & (D < B))
    share = (A == C) | (A == D) | (B == C) | (B == D)
    conf = cross | share
    np.fill_diagonal(conf, False)
    return [np.flatnonzero(row).tolist() for row in conf]


def kcolor(adj, k, precolor=None, node_limit=0, allowed=None):
    """Exact k-colouring by DSATUR backtracking.

    ``precolor[v] >= 0`` pins vertex ``v``; ``allowed[v]`` is a bitmask of the
    colours ``v`` may take.  Returns ``(status, colors)`` with status
    ``FOUND``, ``INFEASIBLE`` or ``LIMIT`` (node budget exhausted).
    """
    V = len(adj)
    color = [-1] * V
    forb = [[0] * k for _ in range(V)]
    navail = [k] * V
    used = [0] * k
    deg = [len(a) for a in adj]
    nodes = [0]

    def assign(v, c):
        color[v] = c
        used[c] += 1
        for w in adj[v]:
            fw = forb[w]
            if fw[c] == 0:
                navail[w] -= 1
            fw[c] += 1

    def unassign(v, c):
        color[v] = -1
        used[c] -= 1
        for w in adj[v]:
            fw = forb[w]
            fw[c] -= 1
            if fw[c] == 0:
                navail[w] += 1

    if allowed is not None:
        for v, mask in enumerate(allowed):
            for c in range(k):
                if not (mask >> c) & 1:
                    forb[v][c] = 1
                    navail[v] -= 1
    remaining = V
    if precolor is not None:
        for v, c in enumerate(precolor):
            if c < 0:
                continue
            if c >= k or any(color[w] == c for w in adj[v]):
                return INFEASIBLE, None
            assign(v, c)
            remaining -= 1

    def search(remaining):
        if remaining == 0:
            return FOUND
        nodes[0] += 1
        if node_limit and nodes[0] > node_limit:
            return LIMIT
        best, bestav, bestdeg = -1, k + 1, -1
        for v in range(V):
            if color[v] < 0:
                av = navail[v]
                if av < bestav or (av == bestav and deg[v] > bestdeg):
                    best, bestav, bestdeg = v, av, deg[v]
        if bestav == 0:
            return INFEASIBLE
        v = best
        fresh = False
        fv = forb[v]
        for c in range(k):
            if fv[c]:
                continue
            if used[c] == 0:
                if fresh:
                    continue
                fresh = True
            assign(v, c)
            r = search(remaining - 1)
            if r == FOUND:
                return FOUND
            unassign(v, c)
            if r == LIMIT:
                return LIMIT
        return INFEASIBLE

    status = search(remaining)
    return status, (list(color) if status == FOUND else None)


def oracle_min_pages(n, eu, ev, cap, lower, firsts=None):
    """Minimum page count of a matching book embedding over all circular orders.

    Vertex 1 is anchored first and reflections are skipped by requiring the
    second vertex to be smaller than the last.  ``firsts`` restricts the second
    vertex (for splitting work).  Returns ``cap + 1`` if nothing fits in ``cap``.
    """
    E = len(eu)
    best = cap + 1
    rest = list(range(2, n + 1))
    if firsts is None:
        firsts = rest
    pos = [0] * (n + 1)
    eu = list(eu)
    ev = list(ev)
    share = [[j for j in range(E) if j != i and {eu[i], ev[i]} & {eu[j], ev[j]}] for i in range(E)]
    for p1 in firsts:
        others = [v for v in rest if v != p1]
        for tail in permutations(others):
            if tail and p1 > tail[-1]:
                continue
            pos[1] = 0
            pos[p1] = 1
            for i, v in enumerate(tail):
                pos[v] = i + 2
            a = [min(pos[eu[i]], pos[ev[i]]) for i in range(E)]
            b = [max(pos[eu[i]], pos[ev[i]]) for i in range(E)]
            adj = [list(s) for s in share]
            for i in range(E):
                ai, bi = a[i], b[i]
                for j in range(i + 1, E):
                    aj, bj = a[j], b[j]
                    if (ai < aj < bi < bj) or (aj < ai < bj < bi):
                        adj[i].append(j)
                        adj[j].append(i)
            while best - 1 >= lower:
                status, _ = kcolor(adj, best - 1)
                if status != FOUND:
                    break
                best -= 1
            if best <= lower:
                return best
    return best
