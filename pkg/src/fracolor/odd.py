"""Colorings of G^{m/n} for odd m, complete graphs, and the prism refutation."""
from __future__ import annotations

import itertools
import logging

from .colors import DIAMOND1, DIAMOND2, HEART, NEW, VertexColoring, TupleColor, tuple_of
from .fracpow import Branch, FracPowGraph, frac_power, rev, sl
from .graph import Graph, complete, prism
from .halfedge import (dynamic_compatible, find_dynamic_coloring, half_edge_coloring, incompatible,
                       max_incompatibility, proper_vertex_coloring, two_incompatible)
from .oracle import (decide_omega_odd, exact_chromatic, fill_coloring, omega_formula,
                     violations)
from .paint import (ConstructionError, certify, color_m_plus_1, exact_omega, extend_to, put,
                    reduce_range, regularized, restrict)

log = logging.getLogger(__name__)


class HypothesisNotEstablished(ConstructionError):
    """The compatible-pair hypothesis could not be established by search."""


def _check_odd(g: Graph, m: int, n: int, lo: int, hi: int):
    if m % 2 == 0:
        raise ValueError("m must be odd")
    if g.is_complete():
        raise ValueError("graph is complete (use color_complete)")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if not lo <= n <= hi:
        raise ValueError(f"n must lie in {lo}..{hi}")


def tuple_palette(delta: int, half: int) -> list:
    return [c for a in range(1, delta + 1) for c in tuple_of(a, half)]


def crusts_monochromatic(fp: FracPowGraph, c) -> list:
    """Branch vertices of maximum degree whose crust is not monochromatic."""
    delta = fp.base.max_degree
    bad = []
    for u in fp.base.vertices:
        if fp.base.degree(u) == delta and len({c[x] for x in fp.crust(u)}) > 1:
            bad.append(u)
    return bad


def heart_switch_sets(fp: FracPowGraph, hearts: set):
    """(heart -> 0)-set and (0 -> heart)-set: one heart per superedge carrying two."""
    to_zero, to_heart = set(), set()
    for u, v in fp.base_edges():
        a, b = fp.at(u, v, 1), fp.at(v, u, 1)
        if a in hearts and b in hearts:
            to_zero.add(a)
            to_heart.add(Branch(u))
    return to_zero, to_heart


def _two_color_diamonds(fp: FracPowGraph, diamonds: list) -> tuple[set, set]:
    """Proper 2-coloring of the subgraph induced by the diamond vertices."""
    dset = set(diamonds)
    nb = {x: [y for y in fp.neighbors(x) if y in dset] for x in diamonds}
    if any(len(v) > 2 for v in nb.values()):
        raise ConstructionError("diamond subgraph has a vertex of degree > 2")
    side: dict = {}
    for s in diamonds:
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in nb[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    raise ConstructionError("diamond subgraph contains an odd cycle")
    return {x for x in diamonds if side[x] == 0}, {x for x in diamonds if side[x] == 1}


def _odd_tuple_coloring(H: Graph, m: int, n: int, f: dict, h: dict, compatible: bool) -> dict:
    """The crust/bubble/middle scheme shared by the omega+2 and the compatible-pair colorings."""
    delta = H.max_degree
    half = (m - 1) // 2
    fp = frac_power(H, m, n)
    phi = {Branch(u): 0 for u in H.vertices}
    for v in H.vertices:
        for x in fp.crust(v):
            phi[x] = TupleColor(f[v], half)
    hearts, diamonds = set(), []
    uncovered = 0
    for u, v in fp.base_edges():
        for x, y in ((u, v), (v, u)):
            t = tuple_of(h[(x, y)], half)
            if h[(x, y)] == f[x]:
                b = (HEART,) + sl(t, 1, half - 1)
                hearts.add(fp.at(x, y, 1))
            elif h[(x, y)] == f[y]:
                b = sl(t, 1, half - 1) + ("diamond",)
                diamonds.append(fp.at(x, y, half))
            else:
                b = t
            put(phi, fp.bubble(x, y), b)
    if compatible and diamonds:
        raise ConstructionError("f and h are not compatible")
    # two hearts on one superedge clash only when n - 2 <= m
    to_zero, to_heart = heart_switch_sets(fp, hearts) if n == m + 2 else (set(), set())
    for x in to_zero:
        phi[x] = 0
    for x in to_heart:
        phi[x] = HEART
    d1, d2 = _two_color_diamonds(fp, diamonds)
    for x in d1:
        phi[x] = DIAMOND1
    for x in d2:
        phi[x] = DIAMOND2
    for u, v in fp.base_edges():
        mid = fp.middle(u, v)
        k, l = (len(mid) + 1) // 2, len(mid) // 2
        a, b = h[(u, v)], h[(v, u)]
        fu, fv = f[u], f[v]
        near, far = mid, rev(mid)
        # orient so that, in case (b), the crust outside {a, b} sits at the near end
        if fu in (a, b) and fv not in (a, b):
            near, far, fu, fv, a, b = rev(mid), mid, fv, fu, b, a
        fresh = [x for x in range(1, delta + 1) if x not in (a, b, fu, fv)]
        if fu in (a, b) and fv in (a, b) or compatible and len(fresh) >= 2:
            # case (a); with compatible f, h and two spare tuples the same fill is
            # conflict-free whatever the crusts are, so no heart goes in the middle
            c, d = fresh[:2]
            put(phi, sl(near, 1, k), sl(rev(tuple_of(c, half)), 1, k))
            put(phi, sl(far, 1, l), sl(rev(tuple_of(d, half)), 1, l))
        elif fv in (a, b):
            if fv == b:
                uncovered += 1
            c = fu
            d = [x for x in range(1, delta + 1) if x not in (a, b, c)][0]
            put(phi, sl(near, 1, k), _with_heart(c, half, k))
            put(phi, sl(far, 1, l), sl(rev(tuple_of(d, half)), 1, l))
        else:
            c, d = fu, fv
            put(phi, sl(near, 1, k), _with_heart(c, half, k))
            if compatible:
                e = [x for x in range(1, delta + 1) if x not in (a, b, c, d)][0]
                put(phi, sl(far, 1, l), sl(rev(tuple_of(e, half)), 1, l))
            elif l:
                put(phi, sl(far, 1, l), sl(rev(tuple_of(d, half)), 2, l) + (DIAMOND1,))
    return phi, uncovered


def _with_heart(c: int, half: int, k: int) -> tuple:
    if k == 0:
        return ()
    return sl(rev(tuple_of(c, half)), 2, k) + (HEART,)


def color_odd_plus2(g: Graph, m: int, n: int, budget: int | None = None) -> VertexColoring:
    """At most omega+2 colors for connected non-complete graphs with maximum degree >= 4."""
    _check_odd(g, m, n, m + 1, 2 * m + 1)
    delta = g.max_degree
    if delta < 4:
        raise ValueError("color_odd_plus2 needs maximum degree >= 4")
    if n == m + 1:
        return color_m_plus_1(g, m)
    H = regularized(g)
    f = proper_vertex_coloring(H, delta)
    if f is None:
        raise ConstructionError(f"no proper {delta}-coloring of the regular supergraph")
    h = two_incompatible(H, f)
    phi, uncovered = _odd_tuple_coloring(H, m, n, f, h, compatible=False)
    half = (m - 1) // 2
    pal = [0, HEART, DIAMOND1, DIAMOND2] + tuple_palette(delta, half)
    info = {"theorem": "odd-plus2", "max_incompatible": max_incompatibility(H, f, h),
            "uncovered_middles": uncovered}
    c = certify(frac_power(H, m, n), phi, pal, info, budget, allow_global=False)
    return restrict(c, frac_power(g, m, n))


def compatible_pair(H: Graph, budget: int | None = None):
    """(f, h) with f a 4-dynamic proper delta-coloring and h compatible with it."""
    r = find_dynamic_coloring(H, 4, H.max_degree, budget)
    if r.coloring is None:
        raise HypothesisNotEstablished(
            f"no 4-dynamic proper {H.max_degree}-coloring found ({r.status}, {r.nodes} nodes)")
    return r.coloring, dynamic_compatible(H, r.coloring)


def color_odd_compatible(g: Graph, m: int, n: int, f: dict | None = None, h: dict | None = None,
                         budget: int | None = None) -> VertexColoring:
    """Exactly omega colors from a compatible pair (f, h); maximum degree >= 5."""
    _check_odd(g, m, n, m + 2, 2 * m + 1)
    delta = g.max_degree
    if delta < 5:
        raise ValueError("color_odd_compatible needs maximum degree >= 5")
    H = regularized(g)
    if f is None or h is None:
        f, h = compatible_pair(H, budget)
    elif H is not g:
        raise ValueError("a supplied pair must color a regular graph; g is not regular")
    if max_incompatibility(H, f, h):
        raise HypothesisNotEstablished("supplied f and h are not compatible")
    phi, uncovered = _odd_tuple_coloring(H, m, n, f, h, compatible=True)
    pal = [0, HEART] + tuple_palette(delta, (m - 1) // 2)
    info = {"theorem": "odd-compatible", "uncovered_middles": uncovered}
    c = certify(frac_power(H, m, n), phi, pal, info, budget, allow_global=False)
    return restrict(c, frac_power(g, m, n))


def color_odd_second_range(g: Graph, m: int, n: int, budget: int | None = None) -> VertexColoring:
    """omega colors for (3m+5)/2 <= n <= 2m, omega+1 for n = 2m+1."""
    if m % 2 == 0:
        raise ValueError("m must be odd")
    lo = (3 * m + 5) // 2
    _check_odd(g, m, n, lo, 2 * m + 1)
    if g.max_degree < 3:
        raise ValueError("needs maximum degree >= 3")
    if n == 2 * m + 1:
        return _insert_new_color(g, m, color_odd_second_range(g, m, 2 * m, budget))
    H = regularized(g)
    delta = H.max_degree
    half = (m - 1) // 2
    f = proper_vertex_coloring(H, delta)
    if f is None:
        raise ConstructionError(f"no proper {delta}-coloring of the regular supergraph")
    # a bubble h(e_uv) and a middle part reading f(v) share a window when they agree,
    # so start from a half-edge coloring with few such half-edges
    h = two_incompatible(H, f)
    fp = frac_power(H, m, n)
    phi = _second_range_phi(H, fp, f, h)
    pal = [0, HEART] + tuple_palette(delta, half)
    info = {"theorem": "odd-second-range",
            "incompatible_half_edges": sum(map(len, incompatible(H, f, h).values()))}
    c = certify(fp, phi, pal, info, budget)
    # any omega-coloring has monochromatic crusts, repaired or not
    bad = crusts_monochromatic(fp, c)
    if bad:
        raise AssertionError(f"crusts not monochromatic at {bad[:3]}")
    return restrict(c, frac_power(g, m, n))


def _second_range_phi(H: Graph, fp, f: dict, h: dict) -> dict:
    """The literal tuple coloring for the second range; may contain conflicts."""
    m = fp.m
    half = (m - 1) // 2
    hearts = {fp.at(x, y, 1) for x in H.vertices for y in H.neighbors(x) if f[x] == h[(x, y)]}
    to_zero, to_heart = heart_switch_sets(fp, hearts)
    phi = {Branch(u): (HEART if Branch(u) in to_heart else 0) for u in H.vertices}
    for v in H.vertices:
        for x in fp.crust(v):
            phi[x] = TupleColor(f[v], 1)
    for u, v in fp.base_edges():
        for x, y in ((u, v), (v, u)):
            t = tuple_of(h[(x, y)], half)
            b = fp.bubble(x, y)
            if b[0] in hearts:
                phi[b[0]] = 0 if b[0] in to_zero else HEART
                put(phi, b[1:], t[1:])
            else:
                put(phi, b, t)
        mid = fp.middle(u, v)
        k, l = (len(mid) + 1) // 2, len(mid) // 2
        distinct = len({h[(u, v)], h[(v, u)], f[u], f[v]}) == 4
        if k == half and distinct:
            put(phi, sl(mid, 1, k), sl(rev(tuple_of(f[v], half)), 1, k - 1) + (HEART,))
        else:
            put(phi, sl(mid, 1, k), sl(rev(tuple_of(f[v], half)), 1, k))
        put(phi, sl(rev(mid), 1, l), sl(rev(tuple_of(f[u], half)), 1, l))
    return phi


def _insert_new_color(g: Graph, m: int, c: VertexColoring) -> VertexColoring:
    """From G^{m/2m} to G^{m/(2m+1)}: a NEW-colored vertex after position m on each superedge."""
    n = 2 * m
    old, new = frac_power(g, m, n), frac_power(g, m, n + 1)
    out = {Branch(u): c[Branch(u)] for u in g.vertices}
    for u, v in new.base_edges():
        seq = [c[old.at(u, v, i)] if 0 < i < n else None for i in range(n + 1)]
        ext = seq[:m + 1] + [NEW] + seq[m + 1:]
        for i in range(1, n + 1):
            out[new.at(u, v, i)] = ext[i]
    bad = violations(new, out, limit=1)
    if bad:
        raise ConstructionError(f"inserting the new color produced a conflict: {bad[0]}", bad[0])
    return VertexColoring(out, {**c.info, "theorem": "odd-second-range n=2m+1"})


# ---------------------------------------------------------------- complete graphs

def _k_base_35(r: int, budget: int | None = None) -> VertexColoring:
    """omega-coloring of K_r^{3/5} with colors 0..r, 0 exactly on branch vertices."""
    g = complete(r)
    fp = frac_power(g, 3, 5)
    try:
        return _hall_35(g, fp)
    except ConstructionError:
        if r != 4:
            raise
    # K4 has a hand-drawn base coloring in the literature; search for one instead
    partial = {Branch(u): 0 for u in g.vertices}
    free = [x for x in fp.vertices if not isinstance(x, Branch)]
    status, res, nodes = fill_coloring(fp, partial, range(r + 1), free, budget)
    if res is None:
        raise ConstructionError(f"K4^(3/5) base coloring search returned {status}")
    return VertexColoring(res, {"theorem": "complete", "base": "exact-search", "nodes": nodes})


def _hall_35(g: Graph, fp: FracPowGraph) -> VertexColoring:
    vs = list(g.vertices)
    r = len(vs)
    num = {v: i for i, v in enumerate(vs, 1)}
    phi = {Branch(v): 0 for v in vs}
    for v in vs:
        for x in fp.crust(v):
            phi[x] = num[v]
    switches = 0
    far_switches = []
    v1 = vs[0]
    for i, vi in enumerate(vs, 1):
        A = [w for w in vs if w != vi]
        B = [b for b in range(1, r + 1) if b != i]

        def options():
            out = {}
            for w in A:
                bad = {num[w]}
                other = fp.at(w, vi, 1)
                if other in phi:
                    bad.add(phi[other])
                out[w] = [b for b in B if b not in bad]
            return out

        match = _matching(A, options())
        if len(match) < len(A):
            # switch two bubble colors at v_1 so the blocked color frees up; if no
            # partner works there, try the same switch at the other colored vertices
            for vj in [v1] + [w for w in vs[1:i - 1]]:
                done = _hall_switch(fp, phi, vs, vi, vj, A, options)
                if done:
                    match = done
                    switches += 1
                    if vj != v1:
                        log.info("Hall repair at v_%d needed a switch at v_%d", i, num[vj])
                        far_switches.append((i, num[vj]))
                    break
            else:
                raise ConstructionError(f"Hall condition fails at v_{i} and no single switch repairs it")
        for w, b in match.items():
            phi[fp.at(vi, w, 1)] = b
    return certify(fp, phi, range(r + 1), {"theorem": "complete", "base": "hall", "switches": switches,
                                                 "switches_away_from_v1": far_switches},
                   allow_global=False)


def _hall_switch(fp, phi, vs, vi, vj, A, options):
    """Swap the color of (v_j v_i)_1 with another bubble at v_j; the perfect matching
    it enables, or None (phi unchanged)."""
    for w in vs:
        if w in (vj, vi):
            continue
        x, y = fp.at(vj, vi, 1), fp.at(vj, w, 1)
        if x not in phi or y not in phi:
            continue
        phi[x], phi[y] = phi[y], phi[x]
        if not violations(fp, phi, limit=1):
            match = _matching(A, options())
            if len(match) == len(A):
                return match
        phi[x], phi[y] = phi[y], phi[x]
    return None


def _matching(left, options) -> dict:
    match_r: dict = {}

    def augment(x, seen):
        for y in options[x]:
            if y in seen:
                continue
            seen.add(y)
            if y not in match_r or augment(match_r[y], seen):
                match_r[y] = x
                return True
        return False

    for x in left:
        augment(x, set())
    return {x: y for y, x in match_r.items()}


def _complete_m_plus_2(r: int, m: int, budget: int | None = None) -> VertexColoring:
    """Colors 0..omega-1 on K_r^{m/(m+2)}, 0 exactly on branch vertices (induction on m)."""
    if m == 3:
        return _k_base_35(r, budget)
    delta = r - 1
    prev = _complete_m_plus_2(r, m - 2, budget)
    g = complete(r)
    fp_prev = frac_power(g, m - 2, m)
    fp = frac_power(g, m, m + 2)
    base = (m - 3) // 2 * delta + 1
    h = half_edge_coloring(g)
    phi = {Branch(u): 0 for u in g.vertices}
    for u, v in fp.base_edges():
        phi[fp.at(u, v, 1)] = base + h[(u, v)]
        phi[fp.at(v, u, 1)] = base + h[(v, u)]
        for i in range(2, m + 1):
            phi[fp.at(u, v, i)] = prev[fp_prev.at(u, v, i - 1)]
    pal = range(omega_formula(delta, m))
    return certify(fp, phi, pal, {"theorem": "complete", "base": "induction", "from_m": m - 2},
                   allow_global=False)


def color_complete(r: int, m: int, n: int, budget: int | None = None) -> VertexColoring:
    """omega-coloring of K_r^{m/n} for odd m (r >= 4)."""
    if r < 4:
        raise ValueError("need r >= 4")
    if m % 2 == 0 or m < 3:
        raise ValueError("m must be odd and >= 3")
    if n <= m:
        raise ValueError("need n > m")
    g = complete(r)
    n0, _ = reduce_range(m, n)
    if n0 == m + 1:
        c = color_m_plus_1(g, m)
    else:
        c = _complete_m_plus_2(r, m, budget)
        if n0 > m + 2:
            try:
                c = _complete_middles(g, m, n0, c)
            except ConstructionError as e:
                log.warning("K%d^(%d/%d): middle fill failed (%s); exact search", r, m, n0, e)
                c = exact_omega(g, m, n0, budget)
                c.info.update(theorem="complete", middles="exact-search")
    c = extend_to(g, m, n0, c, n)
    fp = frac_power(g, m, n)
    bad = crusts_monochromatic(fp, c)
    if bad:
        raise AssertionError(f"crusts not monochromatic at {bad[:3]}")
    return c


def _complete_middles(g: Graph, m: int, n: int, base: VertexColoring) -> VertexColoring:
    """Keep bubbles and crusts of the m/(m+2) coloring; fill middles from the classes S_i."""
    src = frac_power(g, m, m + 2)
    fp = frac_power(g, m, n)
    c2 = (m + 1) // 2
    phi = {Branch(u): base[Branch(u)] for u in g.vertices}
    for u, v in fp.base_edges():
        for x, y in ((u, v), (v, u)):
            for i in range(1, c2 + 1):
                phi[fp.at(x, y, i)] = base[src.at(x, y, i)]
    pairs = list(itertools.permutations(g.vertices, 2))
    S = {i: {base[src.at(x, y, i)] for x, y in pairs} for i in range(1, c2 + 1)}
    # the classes are not pairwise disjoint (the crust class always meets the
    # bubble classes), so each middle vertex takes a color of S_i that is free
    # among its already colored neighbours, or any free color
    overlaps = sorted((i, j) for i, j in itertools.combinations(S, 2) if S[i] & S[j])
    pal = list(range(omega_formula(g.max_degree, m)))
    outside = 0
    for u, v in fp.base_edges():
        mid = fp.middle(u, v)
        k = (len(mid) + 1) // 2
        for i in range(1, k + 1):
            for x in dict.fromkeys((mid[i - 1], mid[len(mid) - i])):
                taken = {phi.get(y) for y in fp.neighbors(x)}
                free = [c for c in sorted(S[i]) if c not in taken] or [c for c in pal if c not in taken]
                outside += not (free and free[0] in S[i])
                phi[x] = free[0] if free else 0
    info = {**base.info, "middles": "S_i", "class_overlaps": overlaps, "middle_colors_outside_class": outside}
    return certify(fp, phi, pal, info)


# ---------------------------------------------------------------- dispatch

def color_odd(g: Graph, m: int, n: int, budget: int | None = None) -> VertexColoring:
    """Best available coloring for odd m: omega where a theorem applies, else omega+1/+2."""
    if m % 2 == 0:
        raise ValueError("m must be odd")
    if n <= m:
        raise ValueError("need n > m")
    delta = g.max_degree
    if delta <= 2:
        raise ValueError("maximum degree <= 2 is outside the supported range")
    if g.is_complete():
        return color_complete(len(g), m, n, budget)
    n0, _ = reduce_range(m, n)
    c = None
    if n0 == m + 1:
        c = color_m_plus_1(g, m)
    elif (3 * m + 5) // 2 <= n0 <= 2 * m:
        c = color_odd_second_range(g, m, n0, budget)
    else:
        if delta >= 5:
            try:
                c = color_odd_compatible(g, m, n0, budget=budget)
            except HypothesisNotEstablished as exc:
                log.info("compatible pair not found: %s", exc)
        if c is None:
            try:
                c = exact_omega(g, m, n0, budget)
                c.info["theorem"] = "omega by exact search"
            except ConstructionError as exc:
                log.info("no omega-coloring by search: %s", exc)
        if c is None and n0 == 2 * m + 1:
            c = color_odd_second_range(g, m, n0, budget)
        if c is None and delta >= 4:
            c = color_odd_plus2(g, m, n0, budget)
        if c is None:
            raise ConstructionError(f"no construction applies to G^({m}/{n}) and search found none")
    return extend_to(g, m, n0, c, n)


# ---------------------------------------------------------------- the prism

def prove_prism_counterexample(budget: int | None = None) -> dict:
    """Refutation certificate: C3 x K2 cubed over five is not omega-colorable."""
    g = prism()
    m, n = 3, 5
    omega = omega_formula(g.max_degree, m)
    decision = decide_omega_odd(g, m, n, budget)
    six = exact_chromatic(frac_power(g, m, n), omega + 1, budget)
    cert = {
        "graph": "prism", "m": m, "n": n, "omega": omega,
        "omega_colorable": decision.status, "search": decision.to_json(),
        "chi_at_most_omega_plus_1": six.status,
        "chi": omega + 1 if decision.status == "no" and six.status == "yes" else None,
        "symmetry": _prism_chain(),
    }
    if six.coloring is not None:
        cert["coloring"] = six.coloring.to_json(frac_power(g, m, n).vertices)
    return cert


def _prism_chain() -> dict:
    """Replay the forced chain with crusts of v1 and v6 colored 1.

    Color 1 must appear within distance 1 of every branch vertex v2..v5.
    Walking v3, v4, v5, v2 the candidates are filtered by distance <= 3 to
    crusts C_{v1}, C_{v6} and to earlier forced vertices.
    """
    g = prism()
    fp = frac_power(g, 3, 5)
    ones = set(fp.crust(1)) | set(fp.crust(6))
    steps = []
    for k in (3, 4, 5, 2):
        cands = [Branch(k)] + [fp.at(k, w, 1) for w in g.sorted_neighbors(k)]
        ok = [x for x in cands if all(fp.distance(x, y) > 3 for y in ones)]
        steps.append({"vertex": f"v{k}", "candidates": [str(x) for x in ok]})
        if len(ok) != 1:
            break
        ones.add(ok[0])
    contradiction = len(steps) == 4 and not steps[-1]["candidates"]
    return {"assumption": "crusts of v1 and v6 share color 1", "steps": steps,
            "contradiction": contradiction}
