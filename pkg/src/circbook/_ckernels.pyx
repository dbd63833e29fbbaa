# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: conflict graphs, exact k-colouring, exhaustive order search.

Same API and results as ``_pykernels``.
"""
from libc.stdlib cimport malloc, calloc, free

DEF MAXE = 64

cdef enum:
    FOUND = 1
    INFEASIBLE = 0
    LIMIT = -1


cdef int _search(int V, int K, int* start, int* nbrs, int* deg, int* color,
                 int* forb, int* navail, int* used, long long* nodes,
                 long long limit, int remaining) noexcept nogil:
    cdef int v, best = -1, bestav = K + 1, bestdeg = -1, c, i, w, r, fresh = 0
    if remaining == 0:
        return FOUND
    nodes[0] += 1
    if limit > 0 and nodes[0] > limit:
        return LIMIT
    for v in range(V):
        if color[v] < 0:
            if navail[v] < bestav or (navail[v] == bestav and deg[v] > bestdeg):
                best = v
                bestav = navail[v]
                bestdeg = deg[v]
    if bestav == 0:
        return INFEASIBLE
    v = best
    for c in range(K):
        if forb[v * K + c] != 0:
            continue
        if used[c] == 0:
            if fresh:
                continue
            fresh = 1
        color[v] = c
        used[c] += 1
        for i in range(start[v], start[v + 1]):
            w = nbrs[i]
            if forb[w * K + c] == 0:
                navail[w] -= 1
            forb[w * K + c] += 1
        r = _search(V, K, start, nbrs, deg, color, forb, navail, used, nodes, limit, remaining - 1)
        if r == FOUND:
            return FOUND
        for i in range(start[v], start[v + 1]):
            w = nbrs[i]
            forb[w * K + c] -= 1
            if forb[w * K + c] == 0:
                navail[w] += 1
        color[v] = -1
        used[c] -= 1
        if r == LIMIT:
            return LIMIT
    return INFEASIBLE


cdef int _kcolor_csr(int V, int K, int* start, int* nbrs, int* color,
                     long long limit, int* allowed) noexcept nogil:
    """Colour in place; entries of ``color`` >= 0 on entry are pinned.

    ``allowed`` is NULL or a per-vertex colour bitmask.
    """
    cdef int* forb = <int*> calloc(V * K + 1, sizeof(int))
    cdef int* navail = <int*> malloc((V + 1) * sizeof(int))
    cdef int* used = <int*> calloc(K + 1, sizeof(int))
    cdef int* deg = <int*> malloc((V + 1) * sizeof(int))
    cdef long long nodes = 0
    cdef int v, i, w, c, remaining = V, status
    for v in range(V):
        navail[v] = K
        deg[v] = start[v + 1] - start[v]
        if allowed != NULL:
            for c in range(K):
                if not (allowed[v] >> c) & 1:
                    forb[v * K + c] = 1
                    navail[v] -= 1
    status = FOUND
    for v in range(V):
        c = color[v]
        if c < 0:
            continue
        if c >= K:
            status = INFEASIBLE
            break
        for i in range(start[v], start[v + 1]):
            if color[nbrs[i]] == c:
                status = INFEASIBLE
        if status == INFEASIBLE:
            break
        used[c] += 1
        for i in range(start[v], start[v + 1]):
            w = nbrs[i]
            if forb[w * K + c] == 0:
                navail[w] -= 1
            forb[w * K + c] += 1
        remaining -= 1
    if status == FOUND:
        status = _search(V, K, start, nbrs, deg, color, forb, navail, used, &nodes, limit, remaining)
    free(forb)
    free(navail)
    free(used)
    free(deg)
    return status


def conflict_adjacency(pu, pv):
    cdef int E = len(pu), i, j, ai, bi, aj, bj
    cdef int* a = <int*> malloc((E + 1) * sizeof(int))
    cdef int* b = <int*> malloc((E + 1) * sizeof(int))
    for i in range(E):
        ai = pu[i]
        bi = pv[i]
        if ai < bi:
            a[i] = ai
            b[i] = bi
        else:
            a[i] = bi
            b[i] = ai
    adj = [[] for _ in range(E)]
    try:
        for i in range(E):
            ai = a[i]
            bi = b[i]
            row = adj[i]
            for j in range(i + 1, E):
                aj = a[j]
                bj = b[j]
                if (ai == aj or ai == bj or bi == aj or bi == bj
                        or (ai < aj < bi < bj) or (aj < ai < bj < bi)):
                    row.append(j)
                    adj[j].append(i)
    finally:
        free(a)
        free(b)
    for row in adj:
        row.sort()
    return adj


def kcolor(adj, int k, precolor=None, long long node_limit=0, allowed=None):
    cdef int V = len(adj), v, total = 0, pos = 0, status
    for row in adj:
        total += len(row)
    cdef int* start = <int*> malloc((V + 1) * sizeof(int))
    cdef int* nbrs = <int*> malloc((total + 1) * sizeof(int))
    cdef int* color = <int*> malloc((V + 1) * sizeof(int))
    cdef int* mask = NULL
    if allowed is not None:
        mask = <int*> malloc((V + 1) * sizeof(int))
    try:
        for v in range(V):
            start[v] = pos
            for w in adj[v]:
                nbrs[pos] = w
                pos += 1
            color[v] = -1 if precolor is None else precolor[v]
            if mask != NULL:
                mask[v] = allowed[v]
        start[V] = pos
        with nogil:
            status = _kcolor_csr(V, k, start, nbrs, color, node_limit, mask)
        out = [color[v] for v in range(V)] if status == FOUND else None
    finally:
        free(start)
        free(nbrs)
        free(color)
        if mask != NULL:
            free(mask)
    return status, out


cdef inline bint _next_perm(int* p, int m) noexcept nogil:
    cdef int i = m - 2, j, tmp
    while i >= 0 and p[i] >= p[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = m - 1
    while p[j] <= p[i]:
        j -= 1
    tmp = p[i]; p[i] = p[j]; p[j] = tmp
    i += 1
    j = m - 1
    while i < j:
        tmp = p[i]; p[i] = p[j]; p[j] = tmp
        i += 1
        j -= 1
    return True


def oracle_min_pages(int n, eu, ev, int cap, int lower, firsts=None):
    cdef int E = len(eu), i, j, m, p1, ai, bi, aj, bj, best = cap + 1, cnt, status
    cdef int U[MAXE]
    cdef int W[MAXE]
    cdef int A[MAXE]
    cdef int B[MAXE]
    cdef int pos[MAXE]
    cdef int tail[MAXE]
    cdef int start[MAXE + 1]
    cdef int nbrs[MAXE * MAXE]
    cdef int color[MAXE]
    cdef unsigned char share[MAXE][MAXE]
    if E > MAXE or n >= MAXE:
        raise ValueError("instance too large for the compiled oracle")
    for i in range(E):
        U[i] = eu[i]
        W[i] = ev[i]
    for i in range(E):
        for j in range(E):
            share[i][j] = i != j and (U[i] == U[j] or U[i] == W[j] or W[i] == U[j] or W[i] == W[j])
    if firsts is None:
        firsts = range(2, n + 1)
    for p1 in firsts:
        m = 0
        for i in range(2, n + 1):
            if i != p1:
                tail[m] = i
                m += 1
        with nogil:
            while True:
                if m == 0 or p1 < tail[m - 1]:
                    pos[1] = 0
                    pos[p1] = 1
                    for i in range(m):
                        pos[tail[i]] = i + 2
                    for i in range(E):
                        ai = pos[U[i]]
                        bi = pos[W[i]]
                        if ai < bi:
                            A[i] = ai; B[i] = bi
                        else:
                            A[i] = bi; B[i] = ai
                    cnt = 0
                    for i in range(E):
                        start[i] = cnt
                        ai = A[i]; bi = B[i]
                        for j in range(E):
                            if share[i][j]:
                                nbrs[cnt] = j
                                cnt += 1
                            elif i != j:
                                aj = A[j]; bj = B[j]
                                if (ai < aj < bi < bj) or (aj < ai < bj < bi):
                                    nbrs[cnt] = j
                                    cnt += 1
                    start[E] = cnt
                    while best - 1 >= lower:
                        for i in range(E):
                            color[i] = -1
                        status = _kcolor_csr(E, best - 1, start, nbrs, color, 0, NULL)
                        if status != FOUND:
                            break
                        best -= 1
                    if best <= lower:
                        break
                if not _next_perm(tail, m):
                    break
        if best <= lower:
            return best
    return best
