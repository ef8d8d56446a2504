import itertools
import random

import networkx as nx
import pytest

from fracolor.graph import (Graph, complete, complete_bipartite, cubic_corpus, cycle, from_graph6,
                            named_graph, petersen, prism, regular_embed, star)
from fracolor.halfedge import (IN, OUT, STAR, BadCycle, HalfEdgeError, dynamic_compatible,
                               find_bad_cycles, find_dynamic_coloring, flank_violations,
                               good_half_edge_coloring, half_edge_coloring, half_edges,
                               incompatible, is_proper_half_edge_coloring, is_r_dynamic,
                               max_incompatibility, orient_good, proper_vertex_coloring,
                               star_coloring_problems, star_edge_coloring, star_subgraph_edges,
                               switch_bad_cycle, two_incompatible)


def random_half_edge_coloring(g, rng, tries=20000):
    """Uniform-ish proper 3-half-edge coloring of a cubic graph by rejection."""
    for _ in range(tries):
        h = {}
        for u in g.vertices:
            for w, c in zip(g.sorted_neighbors(u), rng.sample([1, 2, 3], 3)):
                h[(u, w)] = c
        if all(h[(u, v)] != h[(v, u)] for u, v in g.edges()):
            return h
    raise RuntimeError("no proper coloring sampled")


# ---------------------------------------------------------------- corpus

def test_corpus_counts():
    corpus = cubic_corpus(12)
    by_order = {}
    for g in corpus.values():
        by_order[len(g)] = by_order.get(len(g), 0) + 1
    assert by_order == {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


def test_corpus_graphs_are_connected_cubic_and_pairwise_non_isomorphic():
    graphs = [nx.Graph(list(g.edges())) for g in cubic_corpus(10).values()]
    for h in graphs:
        assert nx.is_connected(h)
        assert {d for _, d in h.degree()} == {3}
    for a, b in itertools.combinations(graphs, 2):
        if len(a) == len(b):
            assert not nx.is_isomorphic(a, b)


def test_graph6_matches_networkx():
    for line in ["C~", "E{Sw", "I?h]@eOWG"]:
        ours = from_graph6(line)
        theirs = nx.from_graph6_bytes(line.encode())
        assert sorted(map(sorted, ours.edges())) == sorted(map(sorted, theirs.edges()))


# ---------------------------------------------------------------- half-edge colorings

@pytest.mark.parametrize("g", [complete(4), prism(), petersen(), complete_bipartite(3, 3),
                               complete(5), named_graph("Q4"), named_graph("C9(1,2)")],
                         ids=["K4", "prism", "Petersen", "K33", "K5", "Q4", "C9(1,2)"])
def test_half_edge_coloring_proper_with_delta_colors(g):
    h = half_edge_coloring(g)
    assert is_proper_half_edge_coloring(g, h, g.max_degree)
    assert set(h.values()) == set(range(1, g.max_degree + 1))


def test_half_edge_coloring_k4_shape():
    g = complete(4)
    h = half_edge_coloring(g)
    assert len(h) == len(half_edges(g)) == 12
    for u in g.vertices:
        assert {h[(u, v)] for v in g.neighbors(u)} == {1, 2, 3}


def test_half_edge_coloring_star_after_embedding():
    g = regular_embed(star(3))
    h = half_edge_coloring(g)
    assert is_proper_half_edge_coloring(g, h, 3)


def test_half_edge_coloring_rejects_low_degree():
    with pytest.raises(HalfEdgeError):
        half_edge_coloring(cycle(5))


def test_half_edge_coloring_forbid_respected():
    g = complete(5)
    forbid = {(0, 1): {1, 2}, (0, 2): {1}, (1, 0): {3, 4}}
    h = half_edge_coloring(g, forbid=forbid)
    assert is_proper_half_edge_coloring(g, h, 4)
    assert all(h[e] not in bad for e, bad in forbid.items())


# ---------------------------------------------------------------- bad cycles

def test_k4_has_no_bad_cycles_under_any_proper_coloring():
    # a 2-colored cycle leaves the remaining vertices short of a third color
    g = complete(4)
    hs = half_edges(g)
    proper = 0
    for cols in itertools.product([1, 2, 3], repeat=len(hs)):
        cand = dict(zip(hs, cols))
        if is_proper_half_edge_coloring(g, cand, 3):
            proper += 1
            assert find_bad_cycles(g, cand) == []
    assert proper > 0


def test_bad_cycles_are_two_colored_on_prism():
    g = prism()
    rng = random.Random(11)
    hits = 0
    for _ in range(300):
        h = random_half_edge_coloring(g, rng)
        for c in find_bad_cycles(g, h):
            hits += 1
            assert isinstance(c, BadCycle)
            ring = list(c.vertices) + [c.vertices[0]]
            for x, y in zip(ring, ring[1:]):
                assert {h[(x, y)], h[(y, x)]} == set(c.colors)
    assert hits > 0


@pytest.mark.parametrize("seed", range(5))
def test_bad_cycles_edge_disjoint_on_k33(seed):
    g = complete_bipartite(3, 3)
    h = random_half_edge_coloring(g, random.Random(seed))
    seen = set()
    for c in find_bad_cycles(g, h):
        ring = list(c.vertices) + [c.vertices[0]]
        for x, y in zip(ring, ring[1:]):
            e = frozenset((x, y))
            assert e not in seen
            seen.add(e)


def test_good_coloring_has_no_bad_cycles():
    for g in (prism(), petersen(), complete(4)):
        assert find_bad_cycles(g, good_half_edge_coloring(g)) == []


def test_find_bad_cycles_requires_cubic():
    with pytest.raises(HalfEdgeError):
        find_bad_cycles(complete(5), half_edge_coloring(complete(5)))


@pytest.mark.parametrize("name,g", sorted(cubic_corpus(10).items()))
def test_switching_strictly_decreases_from_random_starts(name, g):
    rng = random.Random(name)
    for _ in range(4):
        trace = []
        h = good_half_edge_coloring(g, random_half_edge_coloring(g, rng), trace=trace)
        assert find_bad_cycles(g, h) == []
        assert all(a > b for a, b in zip(trace, trace[1:]))
        assert trace[-1] == 0


def test_single_switch_removes_one_cycle_without_creating_new():
    g = prism()
    rng = random.Random(7)
    for _ in range(200):
        h = random_half_edge_coloring(g, rng)
        cycles = find_bad_cycles(g, h)
        if cycles:
            h2 = switch_bad_cycle(g, h, cycles[0])
            assert is_proper_half_edge_coloring(g, h2, 3)
            assert len(find_bad_cycles(g, h2)) < len(cycles)
            return
    pytest.fail("no bad cycle sampled")


# ---------------------------------------------------------------- orientation

@pytest.mark.parametrize("name,g", sorted(cubic_corpus(10).items()))
def test_orientation_flanking_property(name, g):
    h = good_half_edge_coloring(g)
    o = orient_good(g, h)
    assert flank_violations(g, h, o) == []
    assert set(o.values()) <= {IN, OUT}


def test_orient_rejects_bad_cycle():
    g = prism()
    rng = random.Random(3)
    while True:
        h = random_half_edge_coloring(g, rng)
        if find_bad_cycles(g, h):
            break
    with pytest.raises(HalfEdgeError):
        orient_good(g, h)


# ---------------------------------------------------------------- star edge colorings

def test_star_edge_coloring_class_one_graphs_have_no_stars():
    for g in (complete(4), prism(), complete_bipartite(3, 3)):
        sec = star_edge_coloring(g)
        assert sec.stars() == []
        assert star_coloring_problems(g, sec) == []


def test_star_edge_coloring_petersen():
    g = petersen()
    sec = star_edge_coloring(g)
    assert len(sec.stars()) >= 1
    assert star_coloring_problems(g, sec) == []
    # G_1, G_2, G_3 pairwise edge-disjoint
    parts = [set(star_subgraph_edges(g, sec.color, a)) for a in (1, 2, 3)]
    for x, y in itertools.combinations(parts, 2):
        assert not x & y


def test_petersen_is_class_two():
    # oracle: no proper 3-edge-coloring of the 15 edges (line graph 3-coloring)
    lg = nx.line_graph(nx.petersen_graph())
    from fracolor.oracle import exact_chromatic
    idx = {e: i for i, e in enumerate(lg.nodes)}
    g = Graph(range(len(idx)), [(idx[a], idx[b]) for a, b in lg.edges])
    assert exact_chromatic(g, 3).status == "no"


@pytest.mark.parametrize("name,g", sorted(cubic_corpus(10).items()))
def test_star_edge_coloring_local_properties_on_corpus(name, g):
    sec = star_edge_coloring(g)
    assert star_coloring_problems(g, sec) == []
    for e in sec.stars():
        assert e in sec.orient
    assert all(c in (1, 2, 3, STAR) for c in sec.color.values())


# ---------------------------------------------------------------- incompatibility

def test_two_incompatible_prism():
    g = prism()
    f = proper_vertex_coloring(g, 3)
    h = two_incompatible(g, f)
    assert is_proper_half_edge_coloring(g, h, 3)
    assert max_incompatibility(g, f, h) <= 2


def test_two_incompatible_cube_from_bipartition():
    g = named_graph("Q3")
    f = {v: 1 + bin(v).count("1") % 2 for v in g.vertices}
    h = two_incompatible(g, f)
    assert max_incompatibility(g, f, h) <= 2


def test_two_incompatible_keeps_compatible_input():
    g = named_graph("C10(1,2,3)")
    f = find_dynamic_coloring(g, 4, 6).coloring
    h = dynamic_compatible(g, f)
    assert two_incompatible(g, f, h) == h


@pytest.mark.parametrize("name", ["Petersen", "K33", "Q4", "C9(1,2)", "K5-e", "K6-e"])
def test_two_incompatible_bound(name):
    g = named_graph(name)
    f = proper_vertex_coloring(g, g.max_degree)
    for seed in range(3):
        h0 = half_edge_coloring(g)
        rng = random.Random(seed)
        perm = rng.sample(range(1, g.max_degree + 1), g.max_degree)
        h0 = {e: perm[c - 1] for e, c in h0.items()}
        h = two_incompatible(g, f, h0)
        assert is_proper_half_edge_coloring(g, h, g.max_degree)
        assert all(len(x) <= 2 for x in incompatible(g, f, h).values())


def test_two_incompatible_rejects_complete():
    g = complete(4)
    with pytest.raises(HalfEdgeError):
        two_incompatible(g, {v: v + 1 for v in g.vertices})


# ---------------------------------------------------------------- dynamic colorings

def test_is_r_dynamic_examples():
    c5 = cycle(5)
    assert not is_r_dynamic(c5, dict(enumerate([1, 2, 1, 2, 3])), 2)
    assert is_r_dynamic(c5, dict(enumerate([1, 2, 1, 2, 3])), 1)
    assert is_r_dynamic(complete(4), {v: v for v in range(4)}, 3)


def test_c5_two_dynamic_needs_five_colors():
    # neighbours of every vertex of C5 must differ, so the square of C5 (= K5) is colored
    c5 = cycle(5)
    assert find_dynamic_coloring(c5, 2, 4).status == "no"
    assert find_dynamic_coloring(c5, 2, 3).status == "no"
    assert find_dynamic_coloring(c5, 2, 2).status == "no"
    res = find_dynamic_coloring(c5, 2, 5)
    assert res.status == "yes" and is_r_dynamic(c5, res.coloring, 2)


def test_c5_two_dynamic_brute_force_agrees():
    c5 = cycle(5)
    for k in (3, 4, 5):
        exists = any(is_r_dynamic(c5, dict(enumerate(cols)), 2)
                     and all(cols[u] != cols[v] for u, v in c5.edges())
                     for cols in itertools.product(range(1, k + 1), repeat=5))
        assert exists == (find_dynamic_coloring(c5, 2, k).status == "yes")


def test_k4_rainbow():
    res = find_dynamic_coloring(complete(4), 3, 4)
    assert res.status == "yes" and len(set(res.coloring.values())) == 4


@pytest.mark.parametrize("name", ["C10(1,2,3)", "C12(1,2,3)", "K7-e", "C12(1,4,5)", "K6-e",
                                  "C12(1,5,6)"])
def test_dynamic_compatible_zero_incompatibility(name):
    g = named_graph(name)
    res = find_dynamic_coloring(g, 4, g.max_degree)
    assert res.status == "yes"
    h = dynamic_compatible(g, res.coloring)
    assert is_proper_half_edge_coloring(g, h, g.max_degree)
    assert max_incompatibility(g, res.coloring, h) == 0


def test_no_four_dynamic_four_coloring_of_four_regular_graph():
    # the closed neighbourhood has five vertices but only four colors
    assert find_dynamic_coloring(named_graph("C8(1,3)"), 4, 4).status == "no"


def test_dynamic_compatible_rejects_non_dynamic():
    g = named_graph("C9(1,2)")
    f = proper_vertex_coloring(g, 4)
    if is_r_dynamic(g, f, 4):
        pytest.skip("search returned a 4-dynamic coloring")
    with pytest.raises(HalfEdgeError):
        dynamic_compatible(g, f)


def test_dynamic_compatible_repair_path_on_adversarial_order():
    # every repair recorded in the trace is a simple path
    g = named_graph("C12(1,4,5)")
    f = find_dynamic_coloring(g, 4, 6).coloring
    trace = []
    dynamic_compatible(g, f, trace=trace)
    for _u, _b, path in trace:
        assert len(path) == len(set(path))
