import pytest

from fracolor.colors import VertexColoring
from fracolor.fracpow import Branch, frac_power
from fracolor.graph import complete, complete_bipartite, named_graph, petersen, prism, star
from fracolor.oracle import exact_chromatic, omega_formula, verify_coloring
from fracolor.paint import (ConstructionError, certify, color_m_plus_1, exact_omega,
                            extend_coloring, extend_to, put, reduce_range, restrict)


@pytest.mark.parametrize("m,n,expected", [(2, 3, (3, 0)), (2, 5, (5, 0)), (2, 6, (3, 1)),
                                          (3, 9, (5, 1)), (3, 12, (4, 2)), (5, 11, (11, 0)),
                                          (5, 12, (6, 1))])
def test_reduce_range(m, n, expected):
    assert reduce_range(m, n) == expected
    n0, t = expected
    assert m + 1 <= n0 <= 2 * m + 1 and n0 + t * (m + 1) == n


def test_reduce_range_rejects_small_n():
    with pytest.raises(ValueError):
        reduce_range(3, 3)


def test_put_length_mismatch():
    with pytest.raises(ValueError):
        put({}, [1, 2], [1])


# ---------------------------------------------------------------- n = m+1

@pytest.mark.parametrize("name", ["K4", "prism", "Petersen", "K33", "K5", "Q4", "K5-e", "star3"])
@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_m_plus_1_omega_colors(name, m):
    g = named_graph(name)
    c = color_m_plus_1(g, m)
    fp = frac_power(g, m, m + 1)
    assert verify_coloring(fp, c) is None
    assert c.num_colors <= omega_formula(g.max_degree, m)
    if g.is_regular():
        assert c.num_colors == omega_formula(g.max_degree, m)


@pytest.mark.parametrize("name,m", [("prism", 2), ("K4", 3), ("K33", 2), ("Petersen", 3)])
def test_m_plus_1_agrees_with_exact_search(name, m):
    # independent route: exact search finds omega colors and none fewer
    g = named_graph(name)
    fp = frac_power(g, m, m + 1)
    k = omega_formula(g.max_degree, m)
    assert exact_chromatic(fp, k).status == "yes"
    assert exact_chromatic(fp, k - 1).status == "no"
    assert color_m_plus_1(g, m).num_colors == k


# ---------------------------------------------------------------- certify

def test_certify_accepts_proper():
    g = complete(4)
    c = color_m_plus_1(g, 2)
    fp = frac_power(g, 2, 3)
    out = certify(fp, dict(c.items()), c.palette, {"theorem": "t"})
    assert out.info["route"] == "construction"


def test_certify_repairs_local_damage():
    g = prism()
    fp = frac_power(g, 2, 4)
    c = exact_omega(g, 2, 4)
    phi = dict(c.items())
    x, y = fp.at(1, 2, 1), fp.at(1, 2, 2)
    phi[x] = phi[y]
    out = certify(fp, phi, c.palette)
    assert out.info["route"].startswith("repair")
    assert verify_coloring(fp, out) is None
    assert out.num_colors <= len(c.palette)


def test_certify_refuses_infeasible_without_global():
    g = prism()
    fp = frac_power(g, 3, 5)
    phi = {x: 0 for x in fp.vertices}
    with pytest.raises(ConstructionError):
        certify(fp, phi, range(5), allow_global=False, budget=20_000)


def test_certify_reports_missing_and_stray():
    fp = frac_power(complete(4), 2, 3)
    with pytest.raises(ConstructionError, match="uncolored"):
        certify(fp, {}, [0])
    with pytest.raises(ConstructionError, match="outside the palette"):
        certify(fp, {x: 9 for x in fp.vertices}, [0])


def test_restrict_to_subgraph():
    g = star(3)
    c = color_m_plus_1(g, 2)
    assert set(c.assignment) == set(frac_power(g, 2, 3).vertices)
    big = VertexColoring({**dict(c.items()), "extra": 1})
    assert "extra" not in restrict(big, frac_power(g, 2, 3))


# ---------------------------------------------------------------- extension

@pytest.mark.parametrize("name,m,n", [("prism", 2, 4), ("K4", 3, 5), ("Petersen", 2, 5),
                                      ("K33", 4, 7), ("K5", 2, 3), ("Q4", 3, 4)])
def test_extension_keeps_palette(name, m, n):
    g = named_graph(name)
    c = exact_omega(g, m, n) if n > m + 1 else color_m_plus_1(g, m)
    e = extend_coloring(g, m, n, c)
    assert verify_coloring(frac_power(g, m, n + m + 1), e) is None
    assert e.palette <= c.palette


def test_extension_preserves_branch_and_bubble_colors():
    g = prism()
    c = exact_omega(g, 2, 4)
    e = extend_coloring(g, 2, 4, c)
    old, new = frac_power(g, 2, 4), frac_power(g, 2, 7)
    for u in g.vertices:
        assert e[Branch(u)] == c[Branch(u)]
    for u, v in old.base_edges():
        assert e[new.at(u, v, 1)] == c[old.at(u, v, 1)]
        assert e[new.at(v, u, 1)] == c[old.at(v, u, 1)]


def test_extend_to_multiple_steps():
    g = complete(4)
    c = exact_omega(g, 3, 5)
    e = extend_to(g, 3, 5, c, 13)
    assert verify_coloring(frac_power(g, 3, 13), e) is None
    assert e.num_colors == c.num_colors
    with pytest.raises(ValueError):
        extend_to(g, 3, 5, c, 12)


def test_extension_rejects_improper_input():
    g = complete(4)
    fp = frac_power(g, 2, 3)
    with pytest.raises(ConstructionError):
        extend_coloring(g, 2, 3, VertexColoring({x: 0 for x in fp.vertices}))


def test_exact_omega_reports_no():
    with pytest.raises(ConstructionError, match="no"):
        exact_omega(prism(), 3, 5)


def test_exact_omega_bipartite():
    c = exact_omega(complete_bipartite(3, 3), 3, 5)
    assert c.num_colors == 5


def test_petersen_m_plus_1_large():
    c = color_m_plus_1(petersen(), 7)
    assert verify_coloring(frac_power(petersen(), 7, 8), c) is None
    assert c.num_colors == omega_formula(3, 7)
