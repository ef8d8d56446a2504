"""Half-edge colorings and the edge/vertex coloring machinery built on them.

A half-edge coloring is a dict ``h`` with ``h[(u, v)]`` the color of the half
of edge uv next to u. Colors are ``1..delta``. Vertex colorings ``f`` used
alongside it take values in the same range.
"""
from __future__ import annotations

import itertools
import logging
from typing import NamedTuple

from .graph import Graph
from .oracle import default_budget, solve_coloring

log = logging.getLogger(__name__)

IN, OUT = "in", "out"
STAR = "*"


class HalfEdgeError(ValueError):
    pass


# ---------------------------------------------------------------- basics

def half_edges(g: Graph) -> list[tuple]:
    """All ordered pairs (u, v) with uv an edge, in a fixed order."""
    out = []
    for u, v in g.edges():
        out.append((u, v))
        out.append((v, u))
    return out


def half_edge_conflicts(g: Graph, h: dict) -> list[tuple]:
    """Pairs of half-edges that must differ but share a color."""
    bad = []
    for u in g.vertices:
        nb = g.sorted_neighbors(u)
        for v, w in itertools.combinations(nb, 2):
            if h[(u, v)] == h[(u, w)]:
                bad.append(((u, v), (u, w)))
    for u, v in g.edges():
        if h[(u, v)] == h[(v, u)]:
            bad.append(((u, v), (v, u)))
    return bad


def is_proper_half_edge_coloring(g: Graph, h: dict, delta: int | None = None) -> bool:
    delta = g.max_degree if delta is None else delta
    if set(h) != set(half_edges(g)):
        return False
    if any(not 1 <= c <= delta for c in h.values()):
        return False
    return not half_edge_conflicts(g, h)


def _half_edge_line_graph(g: Graph):
    hes = half_edges(g)
    idx = {e: i for i, e in enumerate(hes)}
    adj = [set() for _ in hes]
    for u in g.vertices:
        around = [idx[(u, v)] for v in g.sorted_neighbors(u)]
        for a, b in itertools.combinations(around, 2):
            adj[a].add(b)
            adj[b].add(a)
    for u, v in g.edges():
        a, b = idx[(u, v)], idx[(v, u)]
        adj[a].add(b)
        adj[b].add(a)
    return hes, idx, [sorted(s) for s in adj]


def half_edge_coloring(g: Graph, forbid: dict | None = None, budget: int | None = None) -> dict:
    """Proper half-edge coloring with colors 1..delta.

    ``forbid`` optionally maps a half-edge to a set of colors it must avoid;
    the search then may fail, in which case HalfEdgeError is raised.
    """
    delta = g.max_degree
    if delta <= 2:
        raise HalfEdgeError("half-edge colorings with delta colors need delta >= 3")
    hes, idx, adj = _half_edge_line_graph(g)
    fixed = {}
    if forbid:
        # one pinned dummy vertex per color, joined to the half-edges avoiding it
        adj = [list(a) for a in adj]
        base = len(adj)
        for c in range(1, delta + 1):
            adj.append([])
            fixed[base + c - 1] = c
        for e, cols in forbid.items():
            for c in cols:
                if 1 <= c <= delta:
                    d = base + c - 1
                    adj[idx[e]].append(d)
                    adj[d].append(idx[e])
    status, cols, _ = solve_coloring(adj, delta, fixed, budget if budget is not None else default_budget(),
                                     seed_clique=not forbid)
    if status != "yes":
        raise HalfEdgeError(f"no half-edge coloring found ({status})")
    if forbid:
        h = {e: cols[i] for i, e in enumerate(hes)}
    else:
        h = {e: cols[i] + 1 for i, e in enumerate(hes)}
    assert is_proper_half_edge_coloring(g, h, delta)
    return h


# ---------------------------------------------------------------- cubic: bad cycles

class BadCycle(NamedTuple):
    vertices: tuple
    colors: frozenset


def _require_cubic(g: Graph):
    if not (g.is_regular() and g.max_degree == 3):
        raise HalfEdgeError("graph is not cubic")


def _two_colored_edges(g: Graph, h: dict, a: int, b: int) -> list[tuple]:
    return [(u, v) for u, v in g.edges() if {h[(u, v)], h[(v, u)]} == {a, b}]


def _components_deg2(g: Graph, edges: list[tuple]):
    """Split a max-degree-2 edge set into ('path'|'cycle', vertex sequence)."""
    nb: dict = {}
    for u, v in edges:
        nb.setdefault(u, []).append(v)
        nb.setdefault(v, []).append(u)
    pos = g.position
    seen = set()
    out = []
    starts = sorted((x for x in nb if len(nb[x]) == 1), key=pos)
    for s in starts:
        if s in seen:
            continue
        seq = [s]
        seen.add(s)
        prev, cur = None, s
        while True:
            nxt = [y for y in nb[cur] if y != prev and y not in seen]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            seq.append(cur)
            seen.add(cur)
        out.append(("path", tuple(seq)))
    for s in sorted(nb, key=pos):
        if s in seen:
            continue
        seq = [s]
        seen.add(s)
        a, b = sorted(nb[s], key=pos)
        prev, cur = s, a
        while cur != s:
            seq.append(cur)
            seen.add(cur)
            nxt = [y for y in nb[cur] if y != prev]
            prev, cur = cur, nxt[0]
        out.append(("cycle", tuple(seq)))
    return out


def find_bad_cycles(g: Graph, h: dict) -> list[BadCycle]:
    """Cycles whose half-edges use only two of the three colors."""
    _require_cubic(g)
    out = []
    for a, b in ((1, 2), (1, 3), (2, 3)):
        for kind, seq in _components_deg2(g, _two_colored_edges(g, h, a, b)):
            if kind == "cycle":
                out.append(BadCycle(seq, frozenset((a, b))))
    return out


def _cycle_edges(c: BadCycle):
    vs = c.vertices
    return {frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))}


def switch_bad_cycle(g: Graph, h: dict, cycle: BadCycle) -> dict:
    """Swap colors of e_uv and e_uw at the first vertex u of ``cycle``.

    v is u's neighbour off the cycle, w the cycle neighbour with
    h(e_uw) != h(e_vu).
    """
    vs = cycle.vertices
    u = vs[0]
    on = {vs[1], vs[-1]}
    (v,) = [x for x in g.neighbors(u) if x not in on]
    if v in vs:
        raise HalfEdgeError(f"bad cycle has chord at {u!r}; coloring is improper")
    (w,) = sorted((x for x in on if h[(u, x)] != h[(v, u)]), key=g.position)[:1]
    h2 = dict(h)
    h2[(u, v)], h2[(u, w)] = h[(u, w)], h[(u, v)]
    return h2


def good_half_edge_coloring(g: Graph, h: dict | None = None, trace: list | None = None) -> dict:
    """Half-edge coloring of a cubic graph with no bad cycle.

    ``trace`` (if given) receives the number of bad cycles before each switch
    and after the last one.
    """
    _require_cubic(g)
    h = half_edge_coloring(g) if h is None else dict(h)
    cycles = find_bad_cycles(g, h)
    if trace is not None:
        trace.append(len(cycles))
    while cycles:
        h = switch_bad_cycle(g, h, cycles[0])
        new = find_bad_cycles(g, h)
        if len(new) >= len(cycles):
            raise AssertionError(f"switch did not reduce bad cycles ({len(cycles)} -> {len(new)})")
        cycles = new
        if trace is not None:
            trace.append(len(cycles))
    assert is_proper_half_edge_coloring(g, h, 3)
    return h


def orient_good(g: Graph, h: dict) -> dict:
    """Orientation of half-edges: ``o[(u, v)]`` is IN when e_uv points at u.

    Along each path of every two-colored subgraph the half-edges of the third
    color alternate IN/OUT starting with IN at the first vertex.
    """
    _require_cubic(g)
    if find_bad_cycles(g, h):
        raise HalfEdgeError("coloring has a bad cycle")
    o = {}
    for a, b in ((1, 2), (1, 3), (2, 3)):
        (c,) = {1, 2, 3} - {a, b}
        for kind, seq in _components_deg2(g, _two_colored_edges(g, h, a, b)):
            assert kind == "path"
            for i, x in enumerate(seq):
                (y,) = [y for y in g.neighbors(x) if h[(x, y)] == c]
                o[(x, y)] = IN if i % 2 == 0 else OUT
    for e in half_edges(g):
        o.setdefault(e, OUT)
    return o


def flank_violations(g: Graph, h: dict, o: dict) -> list[tuple]:
    """Edges uv with same-colored flanking half-edges e_uu', e_vv' oriented alike."""
    bad = []
    for u, v in g.edges():
        for u2 in g.neighbors(u) - {v}:
            for v2 in g.neighbors(v) - {u}:
                if h[(u, u2)] == h[(v, v2)] and o[(u, u2)] == o[(v, v2)]:
                    bad.append(((u, v), (u, u2), (v, v2)))
    return bad


# ---------------------------------------------------------------- cubic: star edge colorings

class StarEdgeColoring(NamedTuple):
    """Proper edge coloring with colors 1, 2, 3 and STAR, plus an edge orientation.

    ``color`` is keyed by frozenset edges; ``orient`` maps each frozenset edge
    to its (tail, head) pair.
    """

    color: dict
    orient: dict

    def stars(self):
        return [e for e, c in self.color.items() if c == STAR]

    def colors_at(self, g: Graph, u) -> list:
        return [self.color[frozenset((u, w))] for w in g.neighbors(u)]

    def to_json(self):
        out = []
        for e, c in self.color.items():
            t, hd = self.orient.get(e, sorted(e, key=str))
            out.append({"u": t, "v": hd, "color": c})
        return out


def _edge_color_search(g: Graph, k: int, budget: int):
    edges = g.edges()
    idx = {frozenset(e): i for i, e in enumerate(edges)}
    adj = [set() for _ in edges]
    for u in g.vertices:
        inc = [idx[frozenset((u, w))] for w in g.sorted_neighbors(u)]
        for a, b in itertools.combinations(inc, 2):
            adj[a].add(b)
            adj[b].add(a)
    status, cols, _ = solve_coloring([sorted(s) for s in adj], k, None, budget)
    if status != "yes":
        return status, None
    return status, {frozenset(e): cols[i] + 1 for i, e in enumerate(edges)}


def _missing(g: Graph, col: dict, u) -> set:
    return {1, 2, 3} - {col[frozenset((u, w))] for w in g.neighbors(u)}


def _kempe_swap(g: Graph, col: dict, start, alpha: int, beta: int) -> list:
    """Swap alpha/beta along the chain starting at ``start`` with its alpha-edge."""
    chain = []
    cur, want, prev = start, alpha, None
    while True:
        nxt = [w for w in g.neighbors(cur) if w != prev and col[frozenset((cur, w))] == want]
        if not nxt:
            break
        w = nxt[0]
        chain.append(frozenset((cur, w)))
        prev, cur = cur, w
        want = beta if want == alpha else alpha
        if len(chain) > g.num_edges:
            raise AssertionError("Kempe chain does not terminate")
    for e in chain:
        col[e] = beta if col[e] == alpha else alpha
    return chain


def _reduce_stars(g: Graph, col: dict) -> dict:
    improved = True
    while improved:
        improved = False
        for e in sorted((e for e, c in col.items() if c == STAR), key=lambda e: sorted(map(g.position, e))):
            u, v = sorted(e, key=g.position)
            common = _missing(g, col, u) & _missing(g, col, v)
            if common:
                col[e] = min(common)
                improved = True
                continue
            for alpha in sorted(_missing(g, col, u)):
                for beta in sorted(_missing(g, col, v)):
                    trial = dict(col)
                    chain = _kempe_swap(g, trial, v, alpha, beta)
                    if not any(u in x for x in chain) and alpha in _missing(g, trial, v):
                        trial[e] = alpha
                        col.clear()
                        col.update(trial)
                        improved = True
                        break
                if improved:
                    break
            if improved:
                break
    return col


def star_subgraph_edges(g: Graph, col: dict, a: int) -> list:
    """Edges of G_a: a-edges plus STAR-edges whose both ends meet an a-edge."""
    out = []
    for e, c in col.items():
        if c == a:
            out.append(e)
        elif c == STAR and all(a in {col[frozenset((x, w))] for w in g.neighbors(x)} for x in e):
            out.append(e)
    return out


def star_edge_coloring(g: Graph, budget: int | None = None) -> StarEdgeColoring:
    """Proper {1,2,3,*} edge coloring of a cubic graph with locally minimal stars, oriented."""
    _require_cubic(g)
    budget = default_budget() if budget is None else budget
    status, col = _edge_color_search(g, 3, budget)
    if col is None:
        status, col = _edge_color_search(g, 4, budget)
        if col is None:
            raise HalfEdgeError(f"4-edge-coloring search failed ({status})")
        sizes = {c: sum(1 for x in col.values() if x == c) for c in (1, 2, 3, 4)}
        smallest = min(sizes, key=lambda c: (sizes[c], -c))
        relabel = {c: i for i, c in enumerate([c for c in (1, 2, 3, 4) if c != smallest], 1)}
        relabel[smallest] = STAR
        col = {e: relabel[c] for e, c in col.items()}
        col = _reduce_stars(g, col)
    orient = {}
    owner = {}
    for a in (1, 2, 3):
        edges = star_subgraph_edges(g, col, a)
        for e in edges:
            if e in owner:
                raise AssertionError(f"edge {sorted(e)} lies in G_{owner[e]} and G_{a}")
            owner[e] = a
        pairs = [tuple(sorted(e, key=g.position)) for e in edges]
        for kind, seq in _components_deg2(g, pairs):
            steps = list(zip(seq, seq[1:]))
            if kind == "cycle":
                steps.append((seq[-1], seq[0]))
            for x, y in steps:
                orient[frozenset((x, y))] = (x, y)
    sec = StarEdgeColoring(col, orient)
    problems = star_coloring_problems(g, sec)
    if problems:
        raise AssertionError(f"star edge coloring violates local properties: {problems[:3]}")
    return sec


def star_coloring_problems(g: Graph, sec: StarEdgeColoring) -> list[str]:
    col = sec.color
    out = []
    for u in g.vertices:
        cs = [col[frozenset((u, w))] for w in g.neighbors(u)]
        if len(cs) != len(set(cs)):
            out.append(f"improper at {u!r}")
    for e in sec.stars():
        u, v = tuple(e)
        seen = set(c for x in (u, v) for c in sec.colors_at(g, x)) - {STAR}
        if seen != {1, 2, 3}:
            out.append(f"star edge {sorted(e, key=str)} misses colors {sorted({1, 2, 3} - seen)}")
        if _missing(g, col, u) & _missing(g, col, v):
            out.append(f"star edge {sorted(e, key=str)} recolorable")
        if e not in sec.orient:
            out.append(f"star edge {sorted(e, key=str)} not oriented")
    for a in (1, 2, 3):
        indeg: dict = {}
        outdeg: dict = {}
        for e in star_subgraph_edges(g, col, a):
            t, hd = sec.orient[e]
            outdeg[t] = outdeg.get(t, 0) + 1
            indeg[hd] = indeg.get(hd, 0) + 1
        if any(d > 1 for d in indeg.values()) or any(d > 1 for d in outdeg.values()):
            out.append(f"G_{a} orientation has a vertex with in- or outdegree > 1")
    return out


# ---------------------------------------------------------------- incompatibility

def incompatible(g: Graph, f: dict, h: dict) -> dict:
    """Per vertex u, the neighbours v with h(e_uv) = f(v)."""
    return {u: [v for v in g.sorted_neighbors(u) if h[(u, v)] == f[v]] for u in g.vertices}


def max_incompatibility(g: Graph, f: dict, h: dict) -> int:
    return max((len(x) for x in incompatible(g, f, h).values()), default=0)


def _check_vertex_coloring(g: Graph, f: dict, delta: int):
    if any(v not in f for v in g.vertices):
        raise HalfEdgeError("vertex coloring is partial")
    if any(f[u] == f[v] for u, v in g.edges()):
        raise HalfEdgeError("vertex coloring is not proper")
    if any(not (isinstance(f[v], int) and 1 <= f[v] <= delta) for v in g.vertices):
        raise HalfEdgeError(f"vertex coloring must use colors 1..{delta}")


def _best_local_assignment(g: Graph, f: dict, h: dict, u) -> dict | None:
    """Recolor the half-edges at u to minimise incompatibilities there, keeping properness."""
    nb = g.sorted_neighbors(u)
    current = [h[(u, v)] for v in nb]
    score = sum(1 for v, c in zip(nb, current) if c == f[v])
    best = None
    for perm in itertools.permutations(range(1, g.max_degree + 1), len(nb)):
        if any(c == h[(v, u)] for v, c in zip(nb, perm)):
            continue
        s = sum(1 for v, c in zip(nb, perm) if c == f[v])
        if s < score:
            score, best = s, perm
            if s == 0:
                break
    if best is None:
        return None
    return {(u, v): c for v, c in zip(nb, best)}


def two_incompatible(g: Graph, f: dict, h: dict | None = None, trace: list | None = None) -> dict:
    """Half-edge coloring with at most two incompatible half-edges at every vertex.

    Local search from ``h`` (or a fresh coloring) applying, at a vertex with
    three incompatible half-edges, a pair swap or a three-way rotation; when
    neither applies, the best proper reassignment at that vertex.
    """
    if g.is_complete():
        raise HalfEdgeError("graph is complete")
    if not g.is_connected():
        raise HalfEdgeError("graph is not connected")
    delta = g.max_degree
    _check_vertex_coloring(g, f, delta)
    h = half_edge_coloring(g) if h is None else dict(h)
    limit = 10 * len(half_edges(g)) + 10
    for _ in range(limit):
        inc = incompatible(g, f, h)
        bad = [u for u in g.vertices if len(inc[u]) >= 3]
        if not bad:
            assert is_proper_half_edge_coloring(g, h, delta)
            return h
        u = bad[0]
        step = _switch_rules(g, f, h, u, inc[u])
        rule = "rule"
        if step is None:
            step = _best_local_assignment(g, f, h, u)
            rule = "local"
        if step is None:
            break
        h.update(step)
        if trace is not None:
            trace.append((rule, u))
    # local search stalled: look for a fully compatible coloring instead
    log.info("2-incompatibility local search stalled; trying exhaustive compatible search")
    forbid = {(u, v): {f[v]} for u, v in half_edges(g)}
    try:
        h = half_edge_coloring(g, forbid=forbid)
    except HalfEdgeError:
        raise HalfEdgeError("no 2-incompatible half-edge coloring found") from None
    if trace is not None:
        trace.append(("exhaustive", None))
    return h


def _switch_rules(g, f, h, u, inc_nb):
    for v1, v2 in itertools.combinations(inc_nb, 2):
        a, b = h[(u, v1)], h[(u, v2)]
        if b != h[(v1, u)] and a != h[(v2, u)]:
            return {(u, v1): b, (u, v2): a}
    for v1, v2, v3 in itertools.permutations(inc_nb[:3], 3):
        a, b, c = h[(u, v1)], h[(u, v2)], h[(u, v3)]
        if c != h[(v1, u)] and a != h[(v2, u)] and b != h[(v3, u)]:
            return {(u, v1): c, (u, v2): a, (u, v3): b}
    return None


# ---------------------------------------------------------------- dynamic colorings

def is_r_dynamic(g: Graph, f: dict, r: int) -> bool:
    """Every vertex v sees at least min(r, deg v) colors on its neighbourhood."""
    if any(v not in f for v in g.vertices):
        raise ValueError("coloring is partial")
    for v in g.vertices:
        if len({f[w] for w in g.neighbors(v)}) < min(r, g.degree(v)):
            return False
    return True


class DynamicResult(NamedTuple):
    status: str          # "yes" | "no" | "timeout"
    coloring: dict | None
    nodes: int


def find_dynamic_coloring(g: Graph, r: int, k: int, budget: int | None = None) -> DynamicResult:
    """Backtracking search for a proper r-dynamic coloring with colors 1..k."""
    if r < 1 or k < 1:
        raise ValueError("r and k must be >= 1")
    budget = default_budget() if budget is None else budget
    verts = list(g.vertices)
    # BFS order from a maximum-degree vertex keeps constraints local
    start = max(verts, key=lambda v: (g.degree(v), -g.position(v)))
    order, seen = [], {start}
    frontier = [start]
    while frontier:
        order.extend(frontier)
        nxt = []
        for x in frontier:
            for y in g.sorted_neighbors(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    order.extend(v for v in verts if v not in seen)
    need = {v: min(r, g.degree(v)) for v in verts}
    f: dict = {}
    nodes = 0

    def ok(v) -> bool:
        for w in [v, *g.neighbors(v)]:
            cols = {f[x] for x in g.neighbors(w) if x in f}
            free = sum(1 for x in g.neighbors(w) if x not in f)
            if len(cols) + free < need[w]:
                return False
        return True

    def rec(i, opened) -> bool | None:
        nonlocal nodes
        if i == len(order):
            return True
        v = order[i]
        used = {f[w] for w in g.neighbors(v) if w in f}
        for c in range(1, min(k, opened + 1) + 1):
            if c in used:
                continue
            f[v] = c
            nodes += 1
            if budget and nodes > budget:
                return None
            if ok(v):
                res = rec(i + 1, max(opened, c))
                if res is None or res:
                    return res
            del f[v]
        return False

    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * len(order) + 100))
    try:
        res = rec(0, 0)
    finally:
        sys.setrecursionlimit(old)
    if res is None:
        return DynamicResult("timeout", None, nodes)
    if res:
        assert is_r_dynamic(g, f, r)
        return DynamicResult("yes", dict(f), nodes)
    return DynamicResult("no", None, nodes)


def _max_matching(left: list, options: dict) -> dict:
    """Kuhn's augmenting paths; ``options[x]`` lists admissible right vertices in preference order."""
    match_r: dict = {}

    def augment(x, seen) -> bool:
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


def dynamic_compatible(g: Graph, f: dict, trace: list | None = None) -> dict:
    """Half-edge coloring compatible with a 4-dynamic proper delta-coloring ``f``.

    Half-edges are colored vertex by vertex through a bipartite matching
    between the half-edges at u and the colors 1..delta (e_uv may take b
    unless b = f(v) or b = h(e_vu)). When some color b is blocked at every
    half-edge, a switching path u, x_1, ..., x_k frees it.
    """
    delta = g.max_degree
    if delta < 4:
        raise HalfEdgeError("need maximum degree >= 4")
    _check_vertex_coloring(g, f, delta)
    if not is_r_dynamic(g, f, 4):
        raise HalfEdgeError("vertex coloring is not 4-dynamic")
    h: dict = {}
    colors = list(range(1, delta + 1))
    for u in g.vertices:
        nb = g.sorted_neighbors(u)
        for _attempt in range(len(colors) + 1):
            options = {v: [b for b in colors if b != f[v] and b != h.get((v, u))] for v in nb}
            match = _max_matching(nb, options)
            if len(match) == len(nb):
                break
            reachable = set().union(*(options[v] for v in nb))
            blocked = [b for b in colors if b not in reachable]
            if not blocked:
                raise HalfEdgeError(f"Hall condition fails at {u!r} without a fully blocked color")
            b = blocked[0]
            path = _switching_path(g, f, h, u, b)
            if trace is not None:
                trace.append((u, b, path))
        else:
            raise HalfEdgeError(f"could not complete half-edges at {u!r}")
        for v in nb:
            h[(u, v)] = match[v]
    assert is_proper_half_edge_coloring(g, h, delta)
    assert max_incompatibility(g, f, h) == 0
    return h


def _switching_path(g: Graph, f: dict, h: dict, u, b) -> list:
    """Free color b for some half-edge at u by switching along x_1, ..., x_k."""
    starts = [x for x in g.sorted_neighbors(u) if f[x] != b and h.get((x, u)) == b]
    if not starts:
        raise HalfEdgeError(f"no switching start at {u!r} for color {b}")
    x1 = starts[0]
    xs = [u, x1]
    used = set()
    while True:
        prev, cur = xs[-2], xs[-1]
        cands = [y for y in g.sorted_neighbors(cur)
                 if y != prev and y != u and f[y] != b and (cur, y) in h and h[(cur, y)] != f[prev]]
        if not cands:
            raise HalfEdgeError(f"switching path from {u!r} stuck at {cur!r}")
        nxt = cands[0]
        if (cur, nxt) in used:
            raise AssertionError("switching path revisits a directed pair")
        used.add((cur, nxt))
        xs.append(nxt)
        if h.get((nxt, cur)) != b:
            break
    # switch on e_{x_i x_{i-1}} and e_{x_i x_{i+1}} for i = 1..k-1
    for i in range(1, len(xs) - 1):
        x, p, q = xs[i], xs[i - 1], xs[i + 1]
        h[(x, p)], h[(x, q)] = h[(x, q)], h[(x, p)]
    return xs[1:]


def proper_vertex_coloring(g: Graph, k: int, budget: int | None = None) -> dict | None:
    """A proper coloring with colors 1..k, or None."""
    adj = [sorted(g.position(w) for w in g.neighbors(v)) for v in g.vertices]
    status, cols, _ = solve_coloring(adj, k, None, budget)
    if status != "yes":
        return None
    return {v: cols[i] + 1 for i, v in enumerate(g.vertices)}
