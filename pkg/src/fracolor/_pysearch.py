"""Pure-Python search kernels. ``_csearch`` mirrors these signatures.

Graphs are given as adjacency lists over ``0..n-1``.
"""

YES, NO, TIMEOUT = 1, 0, -1


def color_search(adj, k, fixed, free_from, budget):
    """DSATUR backtracking for a proper k-coloring extending ``fixed``.

    ``fixed[v] >= 0`` pins a color. Colors ``>= free_from`` are interchangeable:
    a new one is opened only in increasing order. ``budget`` caps the number of
    color assignments (<= 0 means unlimited).

    Returns ``(status, colors, nodes)``.
    """
    n = len(adj)
    colors = [-1] * n
    cnt = [[0] * k for _ in range(n)]
    sat = [0] * n
    udeg = [len(a) for a in adj]
    remaining = n

    def assign(v, c):
        colors[v] = c
        for w in adj[v]:
            row = cnt[w]
            if row[c] == 0:
                sat[w] += 1
            row[c] += 1
            udeg[w] -= 1

    def unassign(v):
        c = colors[v]
        colors[v] = -1
        for w in adj[v]:
            row = cnt[w]
            row[c] -= 1
            if row[c] == 0:
                sat[w] -= 1
            udeg[w] += 1

    for v in range(n):
        c = fixed[v]
        if c >= 0:
            if c >= k or cnt[v][c]:
                return NO, None, 0
            assign(v, c)
            remaining -= 1
    if remaining == 0:
        return YES, colors, 0

    def select():
        best, bs, bd = -1, -1, -1
        for v in range(n):
            if colors[v] < 0:
                s = sat[v]
                if s > bs or (s == bs and udeg[v] > bd):
                    best, bs, bd = v, s, udeg[v]
        return best

    opened = max(free_from, max(fixed) + 1 if n else 0)
    stack_v = [0] * (remaining + 1)
    stack_c = [0] * (remaining + 1)
    stack_open = [0] * (remaining + 1)
    nodes = 0
    depth = 0
    stack_v[0] = select()
    stack_c[0] = 0
    stack_open[0] = opened
    while True:
        v = stack_v[depth]
        if colors[v] >= 0:
            unassign(v)
            remaining += 1
        opened = stack_open[depth]
        limit = min(k, opened + 1)
        row = cnt[v]
        c = stack_c[depth]
        while c < limit and row[c]:
            c += 1
        if c >= limit:
            depth -= 1
            if depth < 0:
                return NO, None, nodes
            continue
        assign(v, c)
        remaining -= 1
        stack_c[depth] = c + 1
        nodes += 1
        if remaining == 0:
            return YES, colors, nodes
        if 0 < budget <= nodes:
            return TIMEOUT, None, nodes
        depth += 1
        stack_v[depth] = select()
        stack_c[depth] = 0
        stack_open[depth] = opened + 1 if c == opened else opened


def max_clique(adj, lower=0, budget=0):
    """Branch and bound with greedy-coloring bounds on int bitsets.

    Returns ``(status, clique, nodes)``; status TIMEOUT leaves ``clique`` as the
    best found so far (a lower bound only).
    """
    n = len(adj)
    nb = [0] * n
    for v, a in enumerate(adj):
        for w in a:
            nb[v] |= 1 << w
    best = []
    nodes = 0

    def color_bound(cand):
        # greedy sequential coloring; returns vertices with their color numbers
        out = []
        color = 0
        p = cand
        while p:
            color += 1
            q = p
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~nb[v] & ~low
                p &= ~low
                out.append((v, color))
        return out

    def expand(clique, cand):
        nonlocal best, nodes
        nodes += 1
        if 0 < budget <= nodes:
            raise _Timeout
        ordered = color_bound(cand)
        for v, col in reversed(ordered):
            if len(clique) + col <= max(len(best), lower):
                return
            newc = clique + [v]
            nc = cand & nb[v]
            if nc:
                expand(newc, nc)
            elif len(newc) > len(best):
                best = newc
            cand &= ~(1 << v)

    try:
        expand([], (1 << n) - 1)
    except _Timeout:
        return TIMEOUT, sorted(best), nodes
    return YES, sorted(best), nodes


class _Timeout(Exception):
    pass
