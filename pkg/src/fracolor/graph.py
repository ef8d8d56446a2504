"""Simple undirected graphs, text I/O, named builtins and regular embedding."""
from __future__ import annotations

import itertools
import logging
import re
from typing import Hashable, Iterable, NamedTuple

log = logging.getLogger(__name__)

Label = Hashable


class ParseError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class CopyLabel(NamedTuple):
    """Label of a vertex added by :func:`regular_embed` (copy index >= 1)."""

    label: Label
    copy: int

    def __str__(self):
        return f"{self.label}#{self.copy}"


def label_key(x):
    """Total order on mixed labels: ints, then strings, then tuples."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(label_key(y) for y in x))
    return (3, repr(x))


class Graph:
    """Immutable simple graph with stable vertex order."""

    __slots__ = ("_vertices", "_adj", "_pos")

    def __init__(self, vertices: Iterable[Label] = (), edges: Iterable[tuple[Label, Label]] = ()):
        verts = list(dict.fromkeys(vertices))
        adj: dict[Label, set] = {v: set() for v in verts}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            for x in (u, v):
                if x not in adj:
                    adj[x] = set()
                    verts.append(x)
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = tuple(verts)
        self._pos = {v: i for i, v in enumerate(verts)}
        self._adj = {v: frozenset(adj[v]) for v in verts}

    @classmethod
    def from_edges(cls, edges, vertices=()):
        return cls(vertices, edges)

    @property
    def vertices(self) -> tuple:
        return self._vertices

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._adj

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self._vertices) == set(other._vertices) and self._adj == other._adj

    def __hash__(self):
        return hash((frozenset(self._vertices), frozenset(self.edges())))

    def __repr__(self):
        return f"Graph(n={len(self)}, m={self.num_edges})"

    def position(self, v) -> int:
        return self._pos[v]

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def sorted_neighbors(self, v) -> list:
        return sorted(self._adj[v], key=self._pos.__getitem__)

    def degree(self, v) -> int:
        return len(self._adj[v])

    def has_edge(self, u, v) -> bool:
        return v in self._adj.get(u, ())

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj.values()), default=0)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self._adj.values()) // 2

    def edges(self) -> list[tuple]:
        """Edges as (u, v) with u before v in vertex order, sorted."""
        pos = self._pos
        out = []
        for u in self._vertices:
            for v in self._adj[u]:
                if pos[u] < pos[v]:
                    out.append((u, v))
        out.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
        return out

    def is_regular(self) -> bool:
        return len({len(a) for a in self._adj.values()}) <= 1

    def is_complete(self) -> bool:
        n = len(self._vertices)
        return all(len(a) == n - 1 for a in self._adj.values())

    def is_connected(self) -> bool:
        if not self._vertices:
            return True
        seen = {self._vertices[0]}
        stack = [self._vertices[0]]
        while stack:
            x = stack.pop()
            for y in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self._vertices)

    def induced(self, subset: Iterable) -> "Graph":
        keep = [v for v in self._vertices if v in set(subset)]
        ks = set(keep)
        return Graph(keep, [(u, v) for u, v in self.edges() if u in ks and v in ks])

    def relabel(self, mapping) -> "Graph":
        return Graph([mapping[v] for v in self._vertices],
                     [(mapping[u], mapping[v]) for u, v in self.edges()])

    def distances_from(self, s) -> dict:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for y in self._adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        return dist


# ---------------------------------------------------------------- parsing

_DOT_EDGE = re.compile(r'^\s*("(?:[^"\\]|\\.)*"|[\w.]+)\s*--\s*("(?:[^"\\]|\\.)*"|[\w.]+)')
_DOT_NODE = re.compile(r'^\s*("(?:[^"\\]|\\.)*"|[\w.]+)\s*(\[.*\])?\s*;?\s*$')


def _label(tok: str):
    if len(tok) >= 2 and tok[0] == tok[-1] == '"':
        tok = tok[1:-1].replace('\\"', '"')
    try:
        return int(tok)
    except ValueError:
        return tok


def parse_graph(text: str) -> Graph:
    """Parse DIMACS ``.col``, plain ``u v`` edge lists, or DOT from :func:`export_dot`.

    Duplicate edges are collapsed and reported through the module logger.
    """
    lines = text.splitlines()
    first = next((ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith(("c ", "#"))), "")
    if re.match(r"^(strict\s+)?graph\b", first):
        return _parse_dot(lines)

    vertices: list = []
    edges: list = []
    seen: dict = {}
    declared = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#") or line == "c" or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"bad problem line {line!r}", lineno)
            try:
                declared = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"bad problem line {line!r}", lineno) from None
            vertices.extend(range(1, declared[0] + 1))
            continue
        if parts[0] == "e":
            parts = parts[1:]
        if len(parts) != 2:
            raise ParseError(f"expected an edge, got {line!r}", lineno)
        u, v = (_label(p) for p in parts)
        if u == v:
            raise ParseError(f"self-loop at {u!r}", lineno)
        if declared is not None:
            for x in (u, v):
                if not isinstance(x, int) or not 1 <= x <= declared[0]:
                    raise ParseError(f"vertex {x!r} outside 1..{declared[0]}", lineno)
        key = frozenset((u, v))
        if key in seen:
            log.warning("duplicate edge %r-%r on line %d (first on line %d)", u, v, lineno, seen[key])
            continue
        seen[key] = lineno
        edges.append((u, v))
    if declared is not None and declared[1] != len(edges):
        log.warning("problem line declares %d edges, found %d distinct", declared[1], len(edges))
    return Graph(vertices, edges)


def _parse_dot(lines) -> Graph:
    vertices, edges = [], []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith(("graph", "strict", "}", "//", "node", "edge [")) or line == "{":
            continue
        m = _DOT_EDGE.match(line)
        if m:
            u, v = _label(m.group(1)), _label(m.group(2))
            if u == v:
                raise ParseError(f"self-loop at {u!r}", lineno)
            edges.append((u, v))
            continue
        m = _DOT_NODE.match(line)
        if m:
            vertices.append(_label(m.group(1)))
            continue
        raise ParseError(f"unrecognised DOT line {line!r}", lineno)
    return Graph(vertices, edges)


# ---------------------------------------------------------------- DOT output

_FILLS = ["#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
          "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324", "#fffac8",
          "#800000", "#aaffc3", "#808000", "#ffd8b1", "#000075", "#808080"]


def _fill(i: int) -> str:
    if i < len(_FILLS):
        return _FILLS[i]
    # golden-ratio hue walk for large palettes
    h = (i * 0.618033988749895) % 1.0
    return f"{h:.3f} 0.55 0.95"


def _quote(x) -> str:
    s = str(x).replace('"', '\\"')
    return f'"{s}"'


def export_dot(g, coloring: dict | None = None, name: str = "G") -> str:
    """Render ``g`` (a Graph or anything with ``vertices``/``edges()``) as DOT."""
    verts = list(g.vertices)
    if coloring is not None:
        missing = [v for v in verts if v not in coloring]
        if missing:
            raise ValueError(f"coloring does not cover {len(missing)} vertices, e.g. {missing[0]!r}")
        palette = {}
        for v in verts:
            palette.setdefault(coloring[v], len(palette))
    out = [f"graph {name} {{"]
    for v in verts:
        if coloring is None:
            out.append(f"  {_quote(v)};")
        else:
            c = coloring[v]
            out.append(f'  {_quote(v)} [style=filled, fillcolor="{_fill(palette[c])}", xlabel={_quote(c)}];')
    for u, v in g.edges():
        out.append(f"  {_quote(u)} -- {_quote(v)};")
    out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- embedding

def regular_embed(g: Graph) -> Graph:
    """Delta(g)-regular supergraph containing ``g`` as an induced subgraph.

    Repeated doubling: take two copies and join each deficient vertex to its
    twin. Original vertices keep their labels; copies get :class:`CopyLabel`.
    """
    if len(g) == 0:
        raise ValueError("graph is empty")
    delta = g.max_degree
    verts = [(v, 0) for v in g.vertices]
    adj = {(v, 0): {(w, 0) for w in g.neighbors(v)} for v in g.vertices}
    width = 1
    while any(len(adj[x]) < delta for x in verts):
        new_adj = {}
        for (v, c) in verts:
            new_adj[(v, c)] = set(adj[(v, c)])
            new_adj[(v, c + width)] = {(w, d + width) for (w, d) in adj[(v, c)]}
        for (v, c) in verts:
            if len(adj[(v, c)]) < delta:
                new_adj[(v, c)].add((v, c + width))
                new_adj[(v, c + width)].add((v, c))
        verts = verts + [(v, c + width) for (v, c) in verts]
        adj = new_adj
        width *= 2

    def name(x):
        v, c = x
        return v if c == 0 else CopyLabel(v, c)

    pos = {x: i for i, x in enumerate(verts)}
    edges = [(name(x), name(y)) for x in verts for y in adj[x] if pos[x] < pos[y]]
    return Graph([name(x) for x in verts], edges)


def is_induced_subgraph(small: Graph, big: Graph) -> bool:
    if not all(v in big for v in small.vertices):
        return False
    for u, v in itertools.combinations(small.vertices, 2):
        if small.has_edge(u, v) != big.has_edge(u, v):
            return False
    return True


def from_graph6(line: str) -> Graph:
    """Decode one graph6 string (no header, fewer than 63 vertices)."""
    data = [ord(ch) - 63 for ch in line.strip()]
    if not data or any(not 0 <= x < 64 for x in data):
        raise ParseError(f"not a graph6 string: {line.strip()!r}")
    n, bits = data[0], data[1:]
    if n >= 63:
        raise ParseError("graph6 strings with 63 or more vertices are not supported")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    if len(bits) * 6 < len(pairs):
        raise ParseError(f"graph6 string too short for {n} vertices")
    edges = [e for k, e in enumerate(pairs) if bits[k // 6] >> (5 - k % 6) & 1]
    return Graph(range(n), edges)


def cubic_corpus(max_n: int = 10) -> dict[str, Graph]:
    """Stored connected cubic graphs on at most ``max_n`` (<= 12) vertices, named cubic<n>_<i>."""
    from importlib.resources import files

    out = {}
    for n in range(4, max_n + 1, 2):
        res = files("fracolor") / "data" / f"cubic{n}.g6"
        if not res.is_file():
            raise FileNotFoundError(f"no stored corpus for {n} vertices")
        lines = [x for x in res.read_text().splitlines() if x.strip()]
        for i, line in enumerate(lines):
            out[f"cubic{n}_{i}"] = from_graph6(line)
    return out


# ---------------------------------------------------------------- builtins

def complete(r: int) -> Graph:
    return Graph(range(r), itertools.combinations(range(r), 2))


def cycle(n: int) -> Graph:
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Graph:
    return Graph(range(k + 1), [(0, i) for i in range(1, k + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(range(a + b), [(i, a + j) for i in range(a) for j in range(b)])


def prism() -> Graph:
    """C3 x K2 labelled 1..6: triangles 1-2-3 and 4-5-6, rungs 1-4, 2-5, 3-6."""
    return Graph(range(1, 7), [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


def hypercube(d: int) -> Graph:
    n = 1 << d
    return Graph(range(n), [(x, x ^ (1 << b)) for x in range(n) for b in range(d) if x < x ^ (1 << b)])


def circulant(n: int, jumps: Iterable[int]) -> Graph:
    edges = set()
    for i in range(n):
        for j in jumps:
            a, b = i, (i + j) % n
            if a != b:
                edges.add((min(a, b), max(a, b)))
    return Graph(range(n), sorted(edges))


def complete_minus_edge(r: int) -> Graph:
    return Graph(range(r), [e for e in itertools.combinations(range(r), 2) if e != (0, 1)])


_NAMED = {
    "prism": prism,
    "petersen": petersen,
    "k33": lambda: complete_bipartite(3, 3),
}


def named_graph(name: str) -> Graph:
    """Look up a builtin: K<r>, K<r>-e, K<a>,<b>, K33, prism, Petersen, Q<d>, C<n>, P<n>,
    C<n>(a,b,..), star<k>."""
    key = name.strip()
    low = key.lower()
    if low in _NAMED:
        return _NAMED[low]()
    m = re.fullmatch(r"k(\d+)-e", low)
    if m:
        return complete_minus_edge(int(m.group(1)))
    m = re.fullmatch(r"k(\d+),(\d+)", low)
    if m:
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"k(\d+)", low)
    if m:
        return complete(int(m.group(1)))
    m = re.fullmatch(r"q(\d+)", low)
    if m:
        return hypercube(int(m.group(1)))
    m = re.fullmatch(r"c(\d+)\(([\d,\s]+)\)", low)
    if m:
        return circulant(int(m.group(1)), [int(x) for x in m.group(2).split(",")])
    m = re.fullmatch(r"c(\d+)", low)
    if m:
        return cycle(int(m.group(1)))
    m = re.fullmatch(r"p(\d+)", low)
    if m:
        return path(int(m.group(1)))
    m = re.fullmatch(r"star(\d+)", low)
    if m:
        return star(int(m.group(1)))
    raise KeyError(f"unknown builtin graph {name!r}")
