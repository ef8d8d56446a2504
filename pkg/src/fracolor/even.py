"""Colorings of G^{m/n} with omega colors for even m."""
from __future__ import annotations

import logging

from .colors import VertexColoring, tuple_of
from .fracpow import Branch, frac_power, rev, sl
from .graph import Graph
from .halfedge import (IN, STAR, good_half_edge_coloring, half_edge_coloring, orient_good,
                       star_edge_coloring)
from .oracle import omega_formula
from .paint import (ConstructionError, certify, color_m_plus_1, exact_omega, extend_to, put,
                    reduce_range, regularized, restrict)

log = logging.getLogger(__name__)


def _check_even(g: Graph, m: int, n: int):
    if m % 2 or m < 2:
        raise ValueError("m must be even and >= 2")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if not m + 2 <= n <= 2 * m + 1:
        raise ValueError(f"n must lie in {m + 2}..{2 * m + 1} (use color_even for other n)")


def palette(delta: int, half: int) -> list:
    return [0] + [c for a in range(1, delta + 1) for c in tuple_of(a, half)]


def color_even_highdeg(g: Graph, m: int, n: int, h: dict | None = None) -> VertexColoring:
    """(m/2)*delta + 1 colors for delta >= 4: bubbles follow a half-edge coloring,
    each middle part takes two unused tuples reversed from both ends."""
    _check_even(g, m, n)
    delta = g.max_degree
    if delta < 4:
        raise ValueError("color_even_highdeg needs maximum degree >= 4")
    H = regularized(g)
    h = half_edge_coloring(H) if h is None else h
    fp = frac_power(H, m, n)
    half = m // 2
    phi = {Branch(u): 0 for u in H.vertices}
    for u, v in fp.base_edges():
        put(phi, fp.bubble(u, v), tuple_of(h[(u, v)], half))
        put(phi, fp.bubble(v, u), tuple_of(h[(v, u)], half))
        mid = fp.middle(u, v)
        k, l = (len(mid) + 1) // 2, len(mid) // 2
        a, b = [x for x in range(1, delta + 1) if x not in (h[(u, v)], h[(v, u)])][:2]
        put(phi, sl(mid, 1, k), sl(rev(tuple_of(a, half)), 1, k))
        put(phi, sl(rev(mid), 1, l), sl(rev(tuple_of(b, half)), 1, l))
    c = certify(fp, phi, palette(delta, half), {"theorem": "even-highdeg"}, allow_global=False)
    return restrict(c, frac_power(g, m, n))


def _tuple(a, half, forward: bool):
    t = tuple_of(a, half)
    return t if forward else rev(t)


def color_even_cubic(g: Graph, m: int, n: int, budget: int | None = None) -> VertexColoring:
    """(3m/2) + 1 colors for maximum degree 3, both ranges m+2..2m.

    n = 2m+1 is not covered by either range; use :func:`color_even` for it.
    """
    _check_even(g, m, n)
    if g.max_degree != 3:
        raise ValueError("color_even_cubic needs maximum degree 3")
    if n == 2 * m + 1:
        raise ValueError("n = 2m+1 lies outside both cubic ranges")
    H = regularized(g)
    if n <= 3 * m // 2 + 1:
        phi = _cubic_first_range(H, m, n)
        info = {"theorem": "even-cubic", "range": "first"}
    else:
        phi, extra = _cubic_second_range(H, m, n)
        info = {"theorem": "even-cubic", "range": "second", **extra}
    fp = frac_power(H, m, n)
    c = certify(fp, phi, palette(3, m // 2), info, budget, allow_global=False)
    return restrict(c, frac_power(g, m, n))


def _cubic_first_range(H: Graph, m: int, n: int) -> dict:
    half = m // 2
    h = good_half_edge_coloring(H)
    o = orient_good(H, h)
    fp = frac_power(H, m, n)
    phi = {Branch(u): 0 for u in H.vertices}
    bubble_tuple = {}
    for u, v in fp.base_edges():
        for x, y in ((u, v), (v, u)):
            bubble_tuple[(x, y)] = h[(x, y)]
            put(phi, fp.bubble(x, y), _tuple(h[(x, y)], half, o[(x, y)] != IN))
    for u, v in fp.base_edges():
        mid = fp.middle(u, v)
        k = len(mid)
        if not 1 <= k <= half:
            raise AssertionError(f"middle part of length {k} outside 1..{half}")
        (c,) = {1, 2, 3} - {h[(u, v)], h[(v, u)]}
        (cu,) = [w for w in H.neighbors(u) if h[(u, w)] == c]
        if o[(u, cu)] == IN:
            put(phi, mid, sl(tuple_of(c, half), 1, k))
        else:
            put(phi, rev(mid), sl(tuple_of(c, half), 1, k))
    return phi


def _cubic_second_range(H: Graph, m: int, n: int):
    half = m // 2
    fp = frac_power(H, m, n)
    sec = star_edge_coloring(H)
    col, orient = sec.color, sec.orient
    E = frozenset

    def edge_col(x, y):
        return col[E((x, y))]

    def inward_at(x, y):
        # edge xy oriented with head x
        t, hd = orient[E((x, y))]
        return hd == x

    phi = {Branch(u): 0 for u in H.vertices}
    # bubbles on 1,2,3-edges: tail side forward, head side reversed
    for e, a in col.items():
        if a == STAR:
            continue
        t, hd = orient[e]
        put(phi, fp.bubble(t, hd), tuple_of(a, half))
        put(phi, fp.bubble(hd, t), rev(tuple_of(a, half)))
    # bubbles on *-edges from the color missing at their end
    for e in sec.stars():
        for u in e:
            (v,) = e - {u}
            (c,) = {1, 2, 3} - {edge_col(u, w) for w in H.neighbors(u) if w != v}
            (vc,) = [w for w in H.neighbors(v) if edge_col(v, w) == c]
            put(phi, fp.bubble(u, v), _tuple(c, half, inward_at(v, vc)))
    pending = []
    # middles on *-edges: three parts around a central a-block
    for e in sec.stars():
        u, v = orient[e]
        a_set = [a for a in (1, 2, 3)
                 if all(a in {edge_col(x, w) for w in H.neighbors(x)} for x in (u, v))]
        a = a_set[0]
        (bw,) = [w for w in H.neighbors(u) if w != v and edge_col(u, w) != a]
        (cw,) = [w for w in H.neighbors(v) if w != u and edge_col(v, w) != a]
        b, c = edge_col(u, bw), edge_col(v, cw)
        mid = fp.middle(u, v)
        L = len(mid)
        if (L - half) % 2 == 0:
            l = (L - half) // 2
            put(phi, sl(mid, l + 1, l + half), tuple_of(a, half))
        else:
            l = (L - half - 1) // 2
            special = fp.at(u, v, m + 1)
            centre = [x for x in sl(mid, l + 1, l + half + 1) if x != special]
            put(phi, centre, tuple_of(a, half))
            pending.append(special)
        put(phi, sl(mid, 1, l), sl(_tuple(b, half, inward_at(u, bw)), 1, l))
        put(phi, sl(rev(mid), 1, l), sl(_tuple(c, half, inward_at(v, cw)), 1, l))
    # middles on 1,2,3-edges: reversed adjacent bubbles with different tuples
    for e, a in col.items():
        if a == STAR:
            continue
        u, v = sorted(e, key=H.position)
        mid = fp.middle(u, v)
        k, l = (len(mid) + 1) // 2, len(mid) // 2
        choice = None
        for uu in H.sorted_neighbors(u):
            for vv in H.sorted_neighbors(v):
                if uu == v or vv == u:
                    continue
                bu, bv = phi[fp.at(u, uu, 1)].base, phi[fp.at(v, vv, 1)].base
                if bu != a and bv != a and bu != bv:
                    choice = (uu, vv)
                    break
            if choice:
                break
        if choice is None:
            raise ConstructionError(f"no pair of differently colored bubbles next to edge {u!r}{v!r}")
        uu, vv = choice
        bu = tuple(phi[x] for x in fp.bubble(u, uu))
        bv = tuple(phi[x] for x in fp.bubble(v, vv))
        put(phi, sl(mid, 1, k), sl(rev(bu), 1, k))
        put(phi, sl(rev(mid), 1, l), sl(rev(bv), 1, l))
    # the vertices (uv)_{m+1} left open on odd *-middles: first color clear of all neighbours
    pal = palette(3, half)
    greedy = 0
    for x in pending:
        taken = {phi.get(y) for y in fp.neighbors(x)}
        free = [c for c in pal if c not in taken]
        phi[x] = free[0] if free else 0
        greedy += bool(free)
    return phi, {"stars": len(sec.stars()), "open_vertices": len(pending), "open_filled": greedy}


def color_even(g: Graph, m: int, n: int, budget: int | None = None) -> VertexColoring:
    """omega-coloring of G^{m/n} for even m and any n > m (maximum degree >= 3)."""
    if m % 2 or m < 2:
        raise ValueError("m must be even and >= 2")
    if n <= m:
        raise ValueError("need n > m")
    delta = g.max_degree
    if delta <= 2:
        raise ValueError("maximum degree <= 2 is outside the supported range")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    n0, _ = reduce_range(m, n)
    if n0 == m + 1:
        c = color_m_plus_1(g, m)
    elif delta >= 4:
        c = color_even_highdeg(g, m, n0)
    elif n0 == 2 * m + 1:
        c = exact_omega(g, m, n0, budget)
        c.info["theorem"] = "cubic n=2m+1 by exact search"
    else:
        try:
            c = color_even_cubic(g, m, n0, budget)
        except ConstructionError as exc:
            # tuple bubbles leave the middle only the spare tuple, which cannot
            # fill 2 <= |M| < m/2 positions; search instead
            log.warning("cubic construction failed at m=%d n=%d (%s); exact search", m, n0, exc)
            c = exact_omega(g, m, n0, budget)
            c.info["theorem"] = "cubic by exact search"
    c = extend_to(g, m, n0, c, n)
    k = omega_formula(delta, m)
    if c.num_colors > k:
        raise ConstructionError(f"{c.num_colors} colors exceed omega = {k}")
    return c
