import networkx as nx
import pytest

from fracolor.graph import complete, complete_bipartite, path, petersen, prism


def nx_subdivision(g, n):
    """Independent G^{1/n} built with networkx; internal nodes named (u, v, i) from the smaller end."""
    from fracolor.fracpow import canonical
    h = nx.Graph()
    h.add_nodes_from(canonical(u, u, 0, n) for u in g.vertices)
    for u, v in g.edges():
        chain = [canonical(u, v, i, n) for i in range(n + 1)]
        nx.add_path(h, chain)
    return h


@pytest.fixture
def corpus():
    return {"K2": complete(2), "K4": complete(4), "prism": prism(), "Petersen": petersen(),
            "K33": complete_bipartite(3, 3), "K5": complete(5), "P4": path(4)}


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = next((m for name, m in list(sys.modules.items()) if name.endswith("test_acceptance")), None)
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(results[num])
