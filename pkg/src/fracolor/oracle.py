"""Ground truth: coloring verification, clique number and exact chromatic search."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import NamedTuple

from . import kernels
from .colors import VertexColoring
from .fracpow import FracPowGraph, frac_power
from .graph import Graph

DEFAULT_BUDGET = 20_000_000
CLIQUE_CAP = 5000


def default_budget() -> int:
    return int(os.environ.get("FRACOLOR_BUDGET", DEFAULT_BUDGET))


class SearchTooLarge(RuntimeError):
    """Exact search refused or exhausted: no bound is implied."""


class Violation(NamedTuple):
    x: object
    y: object
    distance: int

    def __str__(self):
        return f"{self.x} and {self.y} share a color at subdivision distance {self.distance}"


@dataclass
class SearchResult:
    status: str                      # "yes" | "no" | "timeout"
    k: int
    coloring: VertexColoring | None = None
    nodes: int = 0
    stats: dict = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return self.status != "timeout"

    def __bool__(self):
        return self.status == "yes"

    def to_json(self, order=None) -> dict:
        out = {"verdict": self.status, "k": self.k, "nodes": self.nodes,
               "completed": self.complete, **self.stats}
        if self.coloring is not None:
            out["coloring"] = self.coloring.to_json(order)
        return out


# ---------------------------------------------------------------- verification

def verify_coloring(fp: FracPowGraph, c) -> Violation | None:
    """None when proper, else the first same-colored pair at distance <= m.

    Pairs are ordered by vertex index of the first, then of the second member.
    """
    assignment = c.assignment if isinstance(c, VertexColoring) else c
    verts = fp.vertices
    missing = [x for x in verts if x not in assignment]
    if missing:
        raise ValueError(f"coloring is partial: {len(missing)} vertices uncolored, e.g. {missing[0]}")
    col = [assignment[x] for x in verts]
    for a, nb in enumerate(fp.adj):
        ca = col[a]
        for b in nb:
            if b > a and col[b] == ca:
                return Violation(verts[a], verts[b], fp.distance(verts[a], verts[b]))
    return None


def is_proper(fp: FracPowGraph, c) -> bool:
    return verify_coloring(fp, c) is None


def omega_formula(delta: int, m: int) -> int:
    """Clique number of G^{m/n} (any n > m) from the maximum degree of G."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    if m < 1:
        raise ValueError("m must be >= 1")
    if delta == 1:
        return m + 1
    if m % 2 == 0:
        return (m // 2) * delta + 1
    return ((m - 1) // 2) * delta + 2


# ---------------------------------------------------------------- cliques

def _adjacency(h) -> tuple[list[list[int]], tuple]:
    if isinstance(h, FracPowGraph):
        return h.adj, h.vertices
    if isinstance(h, Graph):
        verts = h.vertices
        return [sorted(h.position(w) for w in h.neighbors(v)) for v in verts], verts
    raise TypeError(f"expected FracPowGraph or Graph, got {type(h).__name__}")


def max_clique_vertices(h, cap: int = CLIQUE_CAP, budget: int = 0) -> list:
    adj, verts = _adjacency(h)
    if len(verts) > cap:
        raise SearchTooLarge(f"{len(verts)} vertices exceeds clique cap {cap}")
    status, clique, nodes = kernels.max_clique(adj, 0, budget)
    if status == kernels.TIMEOUT:
        raise SearchTooLarge(f"clique search exhausted its budget after {nodes} nodes")
    return [verts[i] for i in clique]


def max_clique(h, cap: int = CLIQUE_CAP, budget: int = 0) -> int:
    """Exact clique number; raises :class:`SearchTooLarge` rather than return a bound."""
    return len(max_clique_vertices(h, cap, budget))


# ---------------------------------------------------------------- coloring search

def solve_coloring(adj, k: int, fixed=None, budget: int | None = None, seed_clique: bool = True):
    """Run the kernel on integer adjacency. ``fixed`` maps index -> hashable color.

    Returns (status string, list of colors or None, nodes). Colors in the
    answer are the fixed colors where given, else ints not clashing with them.
    """
    budget = default_budget() if budget is None else budget
    n = len(adj)
    fixed = fixed or {}
    names = list(dict.fromkeys(fixed[i] for i in sorted(fixed)))
    if len(names) > k:
        return "no", None, 0
    code = {c: j for j, c in enumerate(names)}
    init = [-1] * n
    for i, c in fixed.items():
        init[i] = code[c]
    free_from = len(names)
    if not fixed and seed_clique and n:
        status, clique, _ = kernels.max_clique(adj, 0, 200_000)
        if status == kernels.YES or len(clique) > 0:
            if len(clique) > k:
                return "no", None, 0
            for j, v in enumerate(clique):
                init[v] = j
            free_from = len(clique)
    status, cols, nodes = kernels.color_search(adj, k, init, free_from, budget)
    if status != kernels.YES:
        return ("no" if status == kernels.NO else "timeout"), None, nodes
    extra = _fresh_names(names, k)
    out = [names[c] if c < len(names) else extra[c - len(names)] for c in cols]
    return "yes", out, nodes


def _fresh_names(taken, k):
    taken = set(taken)
    out, c = [], 0
    while len(out) < k:
        if c not in taken:
            out.append(c)
        c += 1
    return out


def exact_chromatic(h, k: int, budget: int | None = None, fixed: dict | None = None) -> SearchResult:
    """Decide k-colorability of a fractional power (or plain graph) exactly.

    ``fixed`` pins colors of some vertices. A "no" is only returned after
    the search space is exhausted; an exhausted budget gives "timeout".
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    adj, verts = _adjacency(h)
    index = {x: i for i, x in enumerate(verts)}
    fx = {index[x]: c for x, c in (fixed or {}).items()}
    status, cols, nodes = solve_coloring(adj, k, fx, budget)
    coloring = None
    if cols is not None:
        coloring = VertexColoring(dict(zip(verts, cols)))
        if isinstance(h, FracPowGraph):
            bad = verify_coloring(h, coloring)
            if bad is not None:
                raise AssertionError(f"kernel returned an improper coloring: {bad}")
    return SearchResult(status, k, coloring, nodes, {"pruning": False, "vertices": len(verts)})


def crust_groups(fp: FracPowGraph) -> list[set]:
    """Vertex groups forced to share a color in an omega-coloring (odd m).

    One group per crust at a vertex of maximum degree; crusts sharing a
    vertex (n = m + 1) are merged.
    """
    if fp.m % 2 == 0:
        raise ValueError("crusts exist only for odd m")
    delta = fp.base.max_degree
    groups = [set(fp.crust(u)) for u in fp.base.vertices if fp.base.degree(u) == delta]
    merged: list[set] = []
    for grp in groups:
        hit = [s for s in merged if s & grp]
        for s in hit:
            grp |= s
            merged.remove(s)
        merged.append(grp)
    return merged


def contract(fp: FracPowGraph, groups: list[set]):
    """Quotient adjacency identifying each group; None if a group is internally adjacent."""
    idx = fp.index
    rep = list(range(len(fp)))
    for grp in groups:
        members = sorted(idx[x] for x in grp)
        for j in members:
            rep[j] = members[0]
        mset = set(members)
        for j in members:
            if any(b in mset for b in fp.adj[j]):
                return None, None
    reps = sorted(set(rep))
    qi = {r: t for t, r in enumerate(reps)}
    qadj = [set() for _ in reps]
    for a, nb in enumerate(fp.adj):
        for b in nb:
            ra, rb = qi[rep[a]], qi[rep[b]]
            if ra != rb:
                qadj[ra].add(rb)
    return [sorted(s) for s in qadj], [qi[r] for r in rep]


def decide_omega_odd(g: Graph, m: int, n: int, budget: int | None = None,
                     pruning: bool = True) -> SearchResult:
    """Does G^{m/n} (m odd) admit a coloring with exactly omega colors?

    With ``pruning`` each crust at a maximum-degree vertex is contracted to a
    single vertex first; this is sound exactly because k = omega.
    """
    if m % 2 == 0:
        raise ValueError("decide_omega_odd needs odd m")
    fp = frac_power(g, m, n)
    k = omega_formula(g.max_degree, m)
    if not pruning:
        res = exact_chromatic(fp, k, budget)
        res.stats.update({"omega": k})
        return res
    groups = crust_groups(fp)
    qadj, where = contract(fp, groups)
    stats = {"pruning": True, "omega": k, "vertices": len(fp), "crusts_contracted": len(groups)}
    if qadj is None:
        return SearchResult("no", k, None, 0, {**stats, "reason": "a crust is internally adjacent"})
    stats["quotient_vertices"] = len(qadj)
    status, cols, nodes = solve_coloring(qadj, k, None, budget)
    coloring = None
    if cols is not None:
        coloring = VertexColoring({x: cols[where[i]] for i, x in enumerate(fp.vertices)})
        bad = verify_coloring(fp, coloring)
        if bad is not None:
            raise AssertionError(f"pruned search produced an improper coloring: {bad}")
    return SearchResult(status, k, coloring, nodes, stats)


def violations(fp: FracPowGraph, c, limit: int = 0) -> list[Violation]:
    """All same-colored adjacent pairs (or the first ``limit`` of them)."""
    assignment = c.assignment if isinstance(c, VertexColoring) else c
    verts = fp.vertices
    out = []
    for a, nb in enumerate(fp.adj):
        ca = assignment.get(verts[a])
        if ca is None:
            continue
        for b in nb:
            if b > a and assignment.get(verts[b]) == ca:
                out.append(Violation(verts[a], verts[b], fp.distance(verts[a], verts[b])))
                if limit and len(out) >= limit:
                    return out
    return out


def fill_coloring(fp: FracPowGraph, partial: dict, palette, free, budget: int | None = None):
    """Color the vertices in ``free`` from ``palette`` keeping ``partial`` elsewhere.

    Returns (status, assignment or None, nodes). Vertices of ``partial`` that
    are in ``free`` are recolored.
    """
    palette = list(dict.fromkeys(palette))
    idx = fp.index
    free_idx = {idx[x] for x in free}
    n = len(fp)
    adj = [list(a) for a in fp.adj]
    fixed = {}
    for x, c in partial.items():
        i = idx[x]
        if i not in free_idx:
            if c not in palette:
                raise ValueError(f"fixed color {c!r} outside the palette")
            fixed[i] = c
    missing = [x for i, x in enumerate(fp.vertices) if i not in fixed and i not in free_idx]
    if missing:
        raise ValueError(f"{len(missing)} vertices neither fixed nor free, e.g. {missing[0]}")
    # one pinned isolated vertex per palette color keeps every color nameable
    for j, c in enumerate(palette):
        adj.append([])
        fixed[n + j] = c
    status, cols, nodes = solve_coloring(adj, len(palette), fixed, budget)
    if cols is None:
        return status, None, nodes
    return status, {x: cols[i] for i, x in enumerate(fp.vertices)}, nodes
