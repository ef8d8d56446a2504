"""Subdivisions, powers and fractional powers G^{m/n}, plus superedge anatomy.

A vertex of G^{m/n} is either ``Branch(u)`` or ``Internal(u, v, i)``, the
vertex at subdivision distance ``i`` from ``u`` on the path replacing ``uv``.
Internal vertices are stored with the smaller endpoint (by :func:`label_key`)
first; :meth:`FracPowGraph.at` accepts either orientation.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Hashable, NamedTuple

from .graph import Graph, label_key


class Branch(NamedTuple):
    u: Hashable

    kind = "branch"

    def __str__(self):
        return f"{self.u}"

    def to_json(self):
        return {"kind": "branch", "u": _json_label(self.u)}


class Internal(NamedTuple):
    u: Hashable
    v: Hashable
    i: int

    kind = "internal"

    def __str__(self):
        return f"({self.u}{self.v})_{self.i}"

    def to_json(self):
        return {"kind": "internal", "u": _json_label(self.u), "v": _json_label(self.v), "i": self.i}


FPVertex = Branch | Internal


def _json_label(x):
    if isinstance(x, (int, str)):
        return x
    if isinstance(x, tuple):
        return [_json_label(y) for y in x]
    return str(x)


def _unjson_label(x):
    if isinstance(x, list):
        from .graph import CopyLabel
        if len(x) == 2 and isinstance(x[1], int):
            return CopyLabel(_unjson_label(x[0]), x[1])
        return tuple(_unjson_label(y) for y in x)
    return x


def vertex_from_json(d) -> FPVertex:
    if d["kind"] == "branch":
        return Branch(_unjson_label(d["u"]))
    return Internal(_unjson_label(d["u"]), _unjson_label(d["v"]), int(d["i"]))


def canonical(u, v, i: int, n: int) -> FPVertex:
    """Canonical name of (uv)_i on a superedge of length ``n``."""
    if i == 0:
        return Branch(u)
    if i == n:
        return Branch(v)
    if not 0 < i < n:
        raise ValueError(f"position {i} outside 0..{n}")
    if label_key(u) <= label_key(v):
        return Internal(u, v, i)
    return Internal(v, u, n - i)


# tuple helpers with 1-based inclusive indices, A[i:j] in the usual notation

def rev(a: tuple) -> tuple:
    return tuple(reversed(a))


def sl(a: tuple, i: int, j: int) -> tuple:
    """``a[i:j]`` with 1-based inclusive bounds; empty when j < i."""
    if j < i:
        return ()
    if i < 1 or j > len(a):
        raise IndexError(f"slice [{i}:{j}] of a {len(a)}-tuple")
    return tuple(a[i - 1:j])


class FracPowGraph:
    """G^{m/n}: the m-th power of the n-subdivision of ``base``.

    Vertices are indexed: branch vertices first in base order, then the
    internal vertices of each base edge (in ``base.edges()`` order) by
    increasing position from the canonical endpoint.
    """

    def __init__(self, base: Graph, m: int, n: int):
        if n < 1:
            raise ValueError("n must be >= 1")
        if m < 1:
            raise ValueError("m must be >= 1")
        self.base = base
        self.m = m
        self.n = n
        verts: list = [Branch(u) for u in base.vertices]
        self._edges = []
        for u, v in base.edges():
            a, b = (u, v) if label_key(u) <= label_key(v) else (v, u)
            self._edges.append((a, b))
            verts.extend(Internal(a, b, i) for i in range(1, n))
        self.vertices: tuple = tuple(verts)
        self.index = {x: k for k, x in enumerate(verts)}
        self._sub = self._subdivision_adjacency()
        self.adj: list[list[int]] = self._power_adjacency()
        self._nbr_sets = None

    # -- construction

    def _subdivision_adjacency(self):
        idx = self.index
        n = self.n
        sub = [[] for _ in self.vertices]
        for a, b in self._edges:
            chain = [idx[Branch(a)]] + [idx[Internal(a, b, i)] for i in range(1, n)] + [idx[Branch(b)]]
            for x, y in zip(chain, chain[1:]):
                sub[x].append(y)
                sub[y].append(x)
        return sub

    def _power_adjacency(self):
        m = self.m
        sub = self._sub
        if m == 1:
            return [sorted(a) for a in sub]
        out = []
        for s in range(len(self.vertices)):
            seen = {s}
            frontier = [s]
            for _ in range(m):
                nxt = []
                for x in frontier:
                    for y in sub[x]:
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
                frontier = nxt
                if not frontier:
                    break
            seen.discard(s)
            out.append(sorted(seen))
        return out

    # -- access

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"FracPowGraph(m={self.m}, n={self.n}, |V|={len(self)}, |E|={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def base_edges(self) -> list[tuple]:
        """Base edges in canonical orientation (smaller label first)."""
        return list(self._edges)

    def at(self, u, v, i: int) -> FPVertex:
        """(uv)_i, checked against the base graph."""
        if not self.base.has_edge(u, v):
            raise KeyError(f"{u!r}{v!r} is not an edge of the base graph")
        return canonical(u, v, i, self.n)

    def superedge(self, u, v) -> tuple:
        """The path (uv)_0, ..., (uv)_n."""
        return tuple(self.at(u, v, i) for i in range(self.n + 1))

    def position(self, x: FPVertex, u) -> int:
        """Distance of internal vertex ``x`` from endpoint ``u`` of its own superedge."""
        if x.u == u:
            return x.i
        if x.v == u:
            return self.n - x.i
        raise ValueError(f"{x} is not on a superedge at {u!r}")

    def edges(self) -> list[tuple]:
        vs = self.vertices
        return [(vs[a], vs[b]) for a, nb in enumerate(self.adj) for b in nb if a < b]

    def neighbors(self, x) -> list:
        return [self.vertices[j] for j in self.adj[self.index[x]]]

    def has_edge(self, x, y) -> bool:
        if self._nbr_sets is None:
            self._nbr_sets = [frozenset(a) for a in self.adj]
        return self.index[y] in self._nbr_sets[self.index[x]]

    def subdivision_neighbors(self, x) -> list:
        return [self.vertices[j] for j in self._sub[self.index[x]]]

    def distance(self, x, y) -> int:
        """Distance in G^{1/n} (not in the power graph)."""
        return self._distances_from(self.index[x])[self.index[y]]

    def distances_from(self, x) -> list[int]:
        """Distances in G^{1/n} from ``x`` to every vertex by index (-1 if unreachable)."""
        return list(self._distances_from(self.index[x]))

    @lru_cache(maxsize=4096)
    def _distances_from(self, s: int) -> tuple:
        dist = [-1] * len(self.vertices)
        dist[s] = 0
        frontier = [s]
        sub = self._sub
        while frontier:
            nxt = []
            for x in frontier:
                dx = dist[x] + 1
                for y in sub[x]:
                    if dist[y] < 0:
                        dist[y] = dx
                        nxt.append(y)
            frontier = nxt
        return tuple(dist)

    def ball(self, x, radius: int) -> list:
        """Vertices within subdivision distance ``radius`` of ``x`` (including ``x``)."""
        s = self.index[x]
        seen = {s}
        frontier = [s]
        for _ in range(radius):
            nxt = []
            for a in frontier:
                for b in self._sub[a]:
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return [self.vertices[j] for j in sorted(seen)]

    def to_graph(self) -> Graph:
        return Graph(self.vertices, self.edges())

    # -- anatomy

    @property
    def half(self) -> int:
        """floor(m/2): the bubble length."""
        return self.m // 2

    def bubble(self, u, v) -> tuple:
        """B_{uv} = ((uv)_1, ..., (uv)_{floor(m/2)})."""
        return tuple(self.at(u, v, i) for i in range(1, self.m // 2 + 1))

    def crust_vertex(self, u, v) -> FPVertex:
        """(uv)_{(m+1)/2}, the member of C_u on the superedge uv (odd m only)."""
        if self.m % 2 == 0:
            raise ValueError("crusts exist only for odd m")
        return self.at(u, v, (self.m + 1) // 2)

    def crust(self, u) -> frozenset:
        if self.m % 2 == 0:
            raise ValueError("crusts exist only for odd m")
        return frozenset(self.crust_vertex(u, w) for w in self.base.neighbors(u))

    def middle(self, u, v) -> tuple:
        """M_{uv}: positions ceil(m/2)+1 .. n-ceil(m/2)-1 read from ``u``."""
        c = (self.m + 1) // 2
        return tuple(self.at(u, v, i) for i in range(c + 1, self.n - c))

    def anatomy(self) -> "Anatomy":
        return anatomy(self)


class Anatomy(NamedTuple):
    bubbles: dict
    crusts: dict
    middles: dict
    branches: tuple

    def parts(self):
        """Every part as (kind, key, vertices) for partition checks."""
        for v in self.branches:
            yield "branch", v, (Branch(v),)
        for k, t in self.bubbles.items():
            yield "bubble", k, t
        for k, s in self.crusts.items():
            yield "crust", k, tuple(s)
        for k, t in self.middles.items():
            yield "middle", k, t


def subdivide(g: Graph, n: int) -> FracPowGraph:
    if n < 1:
        raise ValueError("n must be a positive integer")
    return FracPowGraph(g, 1, n)


def power(fp: FracPowGraph, m: int) -> FracPowGraph:
    if m < 1:
        raise ValueError("m must be a positive integer")
    if fp.m != 1:
        raise ValueError("power() expects a subdivision (m = 1)")
    if m == 1:
        return fp
    return FracPowGraph(fp.base, m, fp.n)


def frac_power(g: Graph, m: int, n: int) -> FracPowGraph:
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}, n={n}")
    return FracPowGraph(g, m, n)


def anatomy(fp: FracPowGraph) -> Anatomy:
    """Bubbles and middles for both orientations of every edge; crusts for odd m.

    ``middles[(v, u)]`` is the reversal of ``middles[(u, v)]``. For odd m and
    n = m + 1 the two crusts of a superedge share their vertex.
    """
    bubbles, middles, crusts = {}, {}, {}
    for u, v in fp.base.edges():
        for a, b in ((u, v), (v, u)):
            bubbles[(a, b)] = fp.bubble(a, b)
            middles[(a, b)] = fp.middle(a, b)
    if fp.m % 2 == 1:
        for u in fp.base.vertices:
            crusts[u] = fp.crust(u)
    return Anatomy(bubbles, crusts, middles, tuple(fp.base.vertices))
