import pytest

from fracolor.colors import tuple_of
from fracolor.even import color_even, color_even_cubic, color_even_highdeg
from fracolor.fracpow import Branch, anatomy, frac_power, rev
from fracolor.graph import complete, cycle, named_graph, path, petersen, prism, star
from fracolor.oracle import exact_chromatic, omega_formula, verify_coloring
from fracolor.paint import ConstructionError


def check(g, m, n, c, exact=True):
    assert verify_coloring(frac_power(g, m, n), c) is None
    k = omega_formula(g.max_degree, m)
    if exact:
        assert c.num_colors == k
    else:
        assert c.num_colors <= k


# ---------------------------------------------------------------- high degree

@pytest.mark.parametrize("name", ["K5", "Q4", "C9(1,2)", "K5-e", "K6", "C10(1,2,3)"])
@pytest.mark.parametrize("m", [2, 4])
def test_highdeg_all_n(name, m):
    g = named_graph(name)
    for n in range(m + 2, 2 * m + 2):
        check(g, m, n, color_even_highdeg(g, m, n))


def test_highdeg_k5_is_optimal():
    g = complete(5)
    fp = frac_power(g, 2, 4)
    assert color_even_highdeg(g, 2, 4).num_colors == 5
    assert exact_chromatic(fp, 4).status == "no"


def test_highdeg_q4_m4_n6():
    assert color_even_highdeg(named_graph("Q4"), 4, 6).num_colors == 9


def test_highdeg_rejects_out_of_range():
    with pytest.raises(ValueError):
        color_even_highdeg(complete(5), 2, 6)
    with pytest.raises(ValueError):
        color_even_highdeg(prism(), 2, 4)
    with pytest.raises(ValueError):
        color_even_highdeg(complete(5), 3, 5)


def test_highdeg_bubble_middle_distance():
    # a bubble vertex and a middle vertex sharing a color sit exactly m+1 apart
    g = complete(5)
    m, n = 4, 7
    fp = frac_power(g, m, n)
    c = color_even_highdeg(g, m, n)
    if c.info.get("route") != "construction":
        pytest.skip("coloring was repaired")
    an = anatomy(fp)
    for u, v in fp.base_edges():
        bub = fp.bubble(u, v)
        mid = fp.middle(u, v)
        for x in bub:
            for y in mid:
                if c[x] == c[y]:
                    assert fp.distance(x, y) == m + 1
    assert an is not None


def test_highdeg_uses_tuples():
    g = complete(5)
    c = color_even_highdeg(g, 4, 6)
    assert c.palette == {0} | {x for a in range(1, 5) for x in tuple_of(a, 2)}
    assert all(c[Branch(u)] == 0 for u in g.vertices)


# ---------------------------------------------------------------- cubic

@pytest.mark.parametrize("name", ["K4", "prism", "Petersen", "K33", "Q3", "C8(1,4)"])
@pytest.mark.parametrize("m", [2, 4])
def test_cubic_both_ranges(name, m):
    g = named_graph(name)
    for n in range(m + 2, 2 * m + 1):
        c = color_even_cubic(g, m, n)
        check(g, m, n, c)
        assert c.info["range"] == ("first" if n <= 3 * m // 2 + 1 else "second")


def test_cubic_first_range_gap_falls_back_to_search():
    # with m = 6, n = 9 the middle part has two vertices and only the spare
    # tuple is available to it; no orientation of the bubbles makes that fit
    assert color_even_cubic(prism(), 6, 9).info["violations"] > 0
    g = petersen()
    with pytest.raises(ConstructionError):
        color_even_cubic(g, 6, 9, budget=100_000)
    c = color_even(g, 6, 9, budget=100_000)
    check(g, 6, 9, c)
    assert c.info["theorem"] == "cubic by exact search"


@pytest.mark.parametrize("name", ["K4", "prism", "Petersen", "K33"])
def test_cubic_first_range_top_is_construction(name):
    # |M| = m/2 is the case the layout handles without repair
    g = named_graph(name)
    m = 6
    c = color_even_cubic(g, m, 3 * m // 2 + 1)
    check(g, m, 3 * m // 2 + 1, c)
    assert c.info["route"] == "construction"


def test_cubic_examples():
    assert color_even_cubic(prism(), 2, 4).num_colors == 4
    assert color_even_cubic(petersen(), 4, 8).num_colors == 7
    g = complete(4)
    assert color_even_cubic(g, 2, 4).num_colors == 4
    assert exact_chromatic(frac_power(g, 2, 4), 3).status == "no"


def test_cubic_first_range_middle_length():
    m = 6
    for n in range(m + 2, 3 * m // 2 + 2):
        fp = frac_power(prism(), m, n)
        for u, v in fp.base_edges():
            assert 1 <= len(fp.middle(u, v)) <= m // 2


def test_cubic_rejects_2m_plus_1():
    with pytest.raises(ValueError):
        color_even_cubic(prism(), 2, 5)


def test_cubic_rejects_high_degree():
    with pytest.raises(ValueError):
        color_even_cubic(complete(5), 2, 4)


@pytest.mark.parametrize("name", ["K4", "prism", "Petersen", "K33"])
@pytest.mark.parametrize("m", [2, 4])
def test_cubic_2m_plus_1_by_search(name, m):
    g = named_graph(name)
    c = color_even(g, m, 2 * m + 1)
    check(g, m, 2 * m + 1, c)
    assert c.info["route"] == "exact-search"


# ---------------------------------------------------------------- dispatcher

def test_dispatch_star_via_embedding():
    g = star(3)
    c = color_even(g, 2, 4)
    check(g, 2, 4, c, exact=False)
    assert c.num_colors == 4


def test_dispatch_prism_extension():
    c = color_even(prism(), 2, 7)
    check(prism(), 2, 7, c)
    assert c.info.get("extended_from") == 4


def test_dispatch_prism_m_plus_1():
    g = prism()
    c = color_even(g, 2, 3)
    check(g, 2, 3, c)
    assert exact_chromatic(frac_power(g, 2, 3), 4).status == "yes"


@pytest.mark.parametrize("name", ["K4", "K5", "Petersen", "Q4", "P4-embedded"])
@pytest.mark.parametrize("m,n", [(2, 3), (2, 8), (4, 5), (4, 12), (4, 15)])
def test_dispatch_many(name, m, n):
    g = star(4) if name == "P4-embedded" else named_graph(name)
    c = color_even(g, m, n)
    check(g, m, n, c, exact=g.is_regular())


def test_dispatch_rejects():
    with pytest.raises(ValueError):
        color_even(cycle(6), 2, 4)
    with pytest.raises(ValueError):
        color_even(path(3), 2, 4)
    with pytest.raises(ValueError):
        color_even(complete(4), 3, 5)
    with pytest.raises(ValueError):
        color_even(complete(4), 2, 2)


def test_reverse_tuple_helper():
    assert rev(tuple_of(1, 3)) == tuple(reversed(tuple_of(1, 3)))
