"""Support shared by the constructions: regular embedding, certification with
repair, restriction to the original graph and the range-extension step."""
from __future__ import annotations

import logging

from .colors import VertexColoring
from .fracpow import Branch, FracPowGraph, frac_power
from .graph import Graph, regular_embed
from .oracle import exact_chromatic, fill_coloring, omega_formula, violations

log = logging.getLogger(__name__)


class ConstructionError(RuntimeError):
    """A construction could not produce a certified coloring."""

    def __init__(self, message: str, violation=None):
        super().__init__(message)
        self.violation = violation


def put(assignment: dict, vertices, colors) -> None:
    """Assign ``colors`` to ``vertices`` position by position."""
    vertices, colors = tuple(vertices), tuple(colors)
    if len(vertices) != len(colors):
        raise ValueError(f"{len(vertices)} vertices but {len(colors)} colors")
    for x, c in zip(vertices, colors):
        assignment[x] = c


def regularized(g: Graph) -> Graph:
    return g if g.is_regular() else regular_embed(g)


def restrict(coloring: VertexColoring, fp: FracPowGraph) -> VertexColoring:
    """Restrict a coloring of a supergraph's fractional power to ``fp``."""
    return VertexColoring({x: coloring[x] for x in fp.vertices}, dict(coloring.info))


def reduce_range(m: int, n: int) -> tuple[int, int]:
    """(n0, t) with n = n0 + t(m+1) and m+1 <= n0 <= 2m+1."""
    if n <= m:
        raise ValueError("need n > m")
    t = (n - m - 1) // (m + 1)
    return n - t * (m + 1), t


def _superedge_vertices(fp: FracPowGraph, x):
    if isinstance(x, Branch):
        return []
    return [fp.at(x.u, x.v, i) for i in range(1, fp.n)]


def certify(fp: FracPowGraph, assignment: dict, palette, info: dict | None = None,
            budget: int | None = None, allow_global: bool = True) -> VertexColoring:
    """Check a constructed coloring; repair it over the same palette if needed.

    Repairs escalate: recolor the vertices in conflict, then the whole
    superedges holding them, then every internal vertex, and finally (if
    ``allow_global``) an unconstrained exact search with ``len(palette)``
    colors. ``info['route']`` records which step produced the result.
    """
    info = dict(info or {})
    palette = list(dict.fromkeys(palette))
    missing = [x for x in fp.vertices if x not in assignment]
    if missing:
        raise ConstructionError(f"construction left {len(missing)} vertices uncolored, e.g. {missing[0]}")
    stray = {c for c in assignment.values() if c not in palette}
    if stray:
        raise ConstructionError(f"colors outside the palette: {sorted(map(str, stray))}")
    bad = violations(fp, assignment)
    if not bad:
        info.setdefault("route", "construction")
        return VertexColoring(dict(assignment), info)
    info["violations"] = len(bad)
    info["first_violation"] = str(bad[0])
    log.info("construction has %d conflicts (first: %s); repairing", len(bad), bad[0])
    conflicted = {x for v in bad for x in (v.x, v.y)}
    stages = [
        ("repair-vertices", conflicted),
        ("repair-superedges", conflicted | {y for x in conflicted for y in _superedge_vertices(fp, x)}),
        ("repair-internal", {x for x in fp.vertices if not isinstance(x, Branch)}),
    ]
    for name, free in stages:
        status, result, nodes = fill_coloring(fp, assignment, palette, free, budget)
        if result is not None:
            info["route"] = name
            info["repaired_vertices"] = len(free)
            return VertexColoring(result, info)
        log.info("%s failed (%s, %d nodes)", name, status, nodes)
    if allow_global:
        res = exact_chromatic(fp, len(palette), budget)
        if res.coloring is not None:
            info["route"] = "exact-search"
            return VertexColoring(res.coloring.assignment, info)
    raise ConstructionError(f"construction failed and could not be repaired: {bad[0]}", bad[0])


def exact_omega(g: Graph, m: int, n: int, budget: int | None = None) -> VertexColoring:
    """An omega-coloring found by exact search; ConstructionError if none or timeout."""
    fp = frac_power(g, m, n)
    k = omega_formula(g.max_degree, m)
    if m % 2:
        from .oracle import decide_omega_odd
        res = decide_omega_odd(g, m, n, budget)
    else:
        res = exact_chromatic(fp, k, budget)
    if res.coloring is None:
        raise ConstructionError(f"exact search for {k} colors on G^({m}/{n}) returned {res.status}")
    return VertexColoring(res.coloring.assignment, {"route": "exact-search", "nodes": res.nodes})


def color_m_plus_1(g: Graph, m: int) -> VertexColoring:
    """omega-coloring of G^{m/(m+1)} for maximum degree >= 3.

    Branch vertices get 0, (uv)_i gets slot i of the tuple h(e_uv) for
    i <= floor(m/2), and for odd m every central vertex (uv)_{(m+1)/2} gets
    the one extra color. Two copies of a tuple near a common branch vertex
    sit in different slots whenever they are within distance m.
    """
    from .colors import HEART, tuple_of
    from .halfedge import half_edge_coloring

    if m < 2:
        raise ValueError("need m >= 2")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    H = regularized(g)
    h = half_edge_coloring(H)
    fp = frac_power(H, m, m + 1)
    half = m // 2
    phi = {Branch(u): 0 for u in H.vertices}
    for u, v in fp.base_edges():
        for x, y in ((u, v), (v, u)):
            for i, c in enumerate(tuple_of(h[(x, y)], half), 1):
                phi[fp.at(x, y, i)] = c
        if m % 2:
            phi[fp.at(u, v, half + 1)] = HEART
    bad = violations(fp, phi, limit=1)
    if bad:
        raise ConstructionError(f"m/(m+1) coloring has a conflict: {bad[0]}", bad[0])
    c = VertexColoring(phi, {"theorem": "n=m+1", "route": "construction"})
    return restrict(c, frac_power(g, m, m + 1))


# ---------------------------------------------------------------- extension

def extend_coloring(g: Graph, m: int, n: int, c: VertexColoring) -> VertexColoring:
    """Coloring of G^{m/(n+m+1)} from one of G^{m/n} with the same palette.

    Each superedge u..v gets the colors at positions 1..m+1 (from the smaller
    endpoint) repeated once: c_0, c_1..c_{m+1}, c_1..c_{m+1}, c_{m+2}..c_n.
    Every copy is at least as far from both ends as its original, and every
    window of m+1 consecutive vertices sees a rotation of a block of
    pairwise distinct colors.
    """
    old = frac_power(g, m, n)
    bad = violations(old, c, limit=1)
    if bad:
        raise ConstructionError(f"input coloring is improper: {bad[0]}", bad[0])
    n2 = n + m + 1
    new = frac_power(g, m, n2)
    out = {Branch(u): c[Branch(u)] for u in g.vertices}
    for u, v in new.base_edges():
        seq = [c[old.at(u, v, i)] if 0 < i < n else c[Branch(u if i == 0 else v)] for i in range(n + 1)]
        ext = seq[:m + 2] + seq[1:m + 2] + seq[m + 2:]
        assert len(ext) == n2 + 1
        for i in range(1, n2):
            out[new.at(u, v, i)] = ext[i]
    bad = violations(new, out, limit=1)
    if bad:
        raise ConstructionError(f"extension produced a conflict: {bad[0]}", bad[0])
    info = dict(c.info)
    info.setdefault("extended_from", n)
    return VertexColoring(out, info)


def extend_to(g: Graph, m: int, n0: int, c: VertexColoring, n: int) -> VertexColoring:
    while n0 < n:
        c = extend_coloring(g, m, n0, c)
        n0 += m + 1
    if n0 != n:
        raise ValueError(f"{n} is not reachable from {n0} in steps of {m + 1}")
    return c
