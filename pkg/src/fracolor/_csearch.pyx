# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same signatures and results as ``_pysearch``."""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy
from libc.stdint cimport uint64_t

cdef enum:
    YES = 1
    NO = 0
    TIMEOUT = -1


cdef struct CSR:
    int n
    int *start
    int *nbr


cdef int _build_csr(adj, CSR *g) except -1:
    cdef int n = len(adj)
    cdef int total = 0
    cdef int i, j
    for a in adj:
        total += len(a)
    g.n = n
    g.start = <int *> malloc((n + 1) * sizeof(int))
    g.nbr = <int *> malloc((total + 1) * sizeof(int))
    if g.start == NULL or g.nbr == NULL:
        raise MemoryError()
    j = 0
    for i in range(n):
        g.start[i] = j
        for w in adj[i]:
            g.nbr[j] = w
            j += 1
    g.start[n] = j
    return 0


cdef void _free_csr(CSR *g):
    free(g.start)
    free(g.nbr)


def color_search(adj, int k, fixed, int free_from, long long budget):
    cdef CSR g
    cdef int n = len(adj)
    if n == 0:
        return YES, [], 0
    _build_csr(adj, &g)
    cdef int *colors = <int *> malloc(n * sizeof(int))
    cdef int *cnt = <int *> calloc(n * k if k > 0 else 1, sizeof(int))
    cdef int *sat = <int *> calloc(n, sizeof(int))
    cdef int *udeg = <int *> malloc(n * sizeof(int))
    cdef int *stack_v = <int *> malloc((n + 1) * sizeof(int))
    cdef int *stack_c = <int *> malloc((n + 1) * sizeof(int))
    cdef int *stack_open = <int *> malloc((n + 1) * sizeof(int))
    cdef int i, v, w, c, p, depth, remaining, opened, limit, best, bs, bd, maxfixed
    cdef long long nodes = 0
    cdef int status = NO
    try:
        for i in range(n):
            colors[i] = -1
            udeg[i] = g.start[i + 1] - g.start[i]
        remaining = n
        maxfixed = -1
        for v in range(n):
            c = fixed[v]
            if c >= 0:
                if c >= k or cnt[v * k + c]:
                    return NO, None, 0
                colors[v] = c
                for p in range(g.start[v], g.start[v + 1]):
                    w = g.nbr[p]
                    if cnt[w * k + c] == 0:
                        sat[w] += 1
                    cnt[w * k + c] += 1
                    udeg[w] -= 1
                remaining -= 1
                if c > maxfixed:
                    maxfixed = c
        if remaining == 0:
            return YES, [colors[i] for i in range(n)], 0
        opened = free_from if free_from > maxfixed + 1 else maxfixed + 1

        depth = 0
        stack_v[0] = _select(n, colors, sat, udeg)
        stack_c[0] = 0
        stack_open[0] = opened
        while True:
            v = stack_v[depth]
            if colors[v] >= 0:
                c = colors[v]
                colors[v] = -1
                for p in range(g.start[v], g.start[v + 1]):
                    w = g.nbr[p]
                    cnt[w * k + c] -= 1
                    if cnt[w * k + c] == 0:
                        sat[w] -= 1
                    udeg[w] += 1
                remaining += 1
            opened = stack_open[depth]
            limit = opened + 1
            if limit > k:
                limit = k
            c = stack_c[depth]
            while c < limit and cnt[v * k + c]:
                c += 1
            if c >= limit:
                depth -= 1
                if depth < 0:
                    status = NO
                    break
                continue
            colors[v] = c
            for p in range(g.start[v], g.start[v + 1]):
                w = g.nbr[p]
                if cnt[w * k + c] == 0:
                    sat[w] += 1
                cnt[w * k + c] += 1
                udeg[w] -= 1
            remaining -= 1
            stack_c[depth] = c + 1
            nodes += 1
            if remaining == 0:
                status = YES
                break
            if budget > 0 and nodes >= budget:
                status = TIMEOUT
                break
            depth += 1
            stack_v[depth] = _select(n, colors, sat, udeg)
            stack_c[depth] = 0
            stack_open[depth] = opened + 1 if c == opened else opened
        if status == YES:
            return YES, [colors[i] for i in range(n)], nodes
        return status, None, nodes
    finally:
        _free_csr(&g)
        free(colors); free(cnt); free(sat); free(udeg)
        free(stack_v); free(stack_c); free(stack_open)


cdef inline int _select(int n, int *colors, int *sat, int *udeg) nogil:
    cdef int v, best = -1, bs = -1, bd = -1
    for v in range(n):
        if colors[v] < 0:
            if sat[v] > bs or (sat[v] == bs and udeg[v] > bd):
                best = v
                bs = sat[v]
                bd = udeg[v]
    return best


# ---------------------------------------------------------------- max clique

cdef struct CliqueState:
    int n
    int words
    uint64_t *nb          # n rows of `words` words
    int *clique
    int size
    int *best
    int best_size
    int lower
    long long nodes
    long long budget
    int timed_out


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _popcount_any(uint64_t *s, int words) nogil:
    cdef int i
    for i in range(words):
        if s[i]:
            return 1
    return 0


cdef inline int _lowbit(uint64_t *s, int words) nogil:
    cdef int i
    for i in range(words):
        if s[i]:
            return i * 64 + __builtin_ctzll(s[i])
    return -1


cdef void _expand(CliqueState *st, uint64_t *cand) nogil:
    cdef int words = st.words
    cdef int n = st.n
    cdef int v, col, i, cnt, j, floor
    cdef uint64_t *p
    cdef uint64_t *q
    cdef uint64_t *nc
    cdef int *order
    cdef int *cols
    st.nodes += 1
    if st.budget > 0 and st.nodes >= st.budget:
        st.timed_out = 1
        return
    p = <uint64_t *> malloc(words * sizeof(uint64_t))
    q = <uint64_t *> malloc(words * sizeof(uint64_t))
    nc = <uint64_t *> malloc(words * sizeof(uint64_t))
    order = <int *> malloc(n * sizeof(int))
    cols = <int *> malloc(n * sizeof(int))
    memcpy(p, cand, words * sizeof(uint64_t))
    cnt = 0
    col = 0
    while _popcount_any(p, words):
        col += 1
        memcpy(q, p, words * sizeof(uint64_t))
        while _popcount_any(q, words):
            v = _lowbit(q, words)
            for i in range(words):
                q[i] &= ~st.nb[v * words + i]
            q[v >> 6] &= ~((<uint64_t> 1) << (v & 63))
            p[v >> 6] &= ~((<uint64_t> 1) << (v & 63))
            order[cnt] = v
            cols[cnt] = col
            cnt += 1
    j = cnt - 1
    while j >= 0:
        v = order[j]
        floor = st.best_size if st.best_size > st.lower else st.lower
        if st.size + cols[j] <= floor:
            break
        st.clique[st.size] = v
        st.size += 1
        for i in range(words):
            nc[i] = cand[i] & st.nb[v * words + i]
        if _popcount_any(nc, words):
            _expand(st, nc)
        elif st.size > st.best_size:
            st.best_size = st.size
            memcpy(st.best, st.clique, st.size * sizeof(int))
        st.size -= 1
        if st.timed_out:
            break
        cand[v >> 6] &= ~((<uint64_t> 1) << (v & 63))
        j -= 1
    free(p); free(q); free(nc); free(order); free(cols)


def max_clique(adj, int lower=0, long long budget=0):
    cdef int n = len(adj)
    if n == 0:
        return YES, [], 0
    cdef int words = (n + 63) // 64
    cdef CliqueState st
    cdef int v, i
    cdef uint64_t *cand = <uint64_t *> calloc(words, sizeof(uint64_t))
    st.n = n
    st.words = words
    st.nb = <uint64_t *> calloc(n * words, sizeof(uint64_t))
    st.clique = <int *> malloc(n * sizeof(int))
    st.best = <int *> malloc(n * sizeof(int))
    st.size = 0
    st.best_size = 0
    st.lower = lower
    st.nodes = 0
    st.budget = budget
    st.timed_out = 0
    try:
        for v in range(n):
            for w in adj[v]:
                st.nb[v * words + (<int> w >> 6)] |= (<uint64_t> 1) << (<int> w & 63)
            cand[v >> 6] |= (<uint64_t> 1) << (v & 63)
        with nogil:
            _expand(&st, cand)
        best = sorted([st.best[i] for i in range(st.best_size)])
        return (TIMEOUT if st.timed_out else YES), best, st.nodes
    finally:
        free(cand); free(st.nb); free(st.clique); free(st.best)
