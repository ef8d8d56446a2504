"""Compare the compiled and pure-Python search kernels on the same instances.

    python benchmarks/bench_kernels.py [--repeat 3]

Both kernels must agree on status and node count; the table reports wall
time per kernel and the speed-up.
"""
import argparse
import time

from fracolor import _pysearch
from fracolor.fracpow import frac_power
from fracolor.graph import named_graph
from fracolor.oracle import contract, crust_groups

try:
    from fracolor import _csearch
except ImportError:
    _csearch = None

# (graph, m, n, k, pruned quotient?)
INSTANCES = [
    ("prism", 3, 5, 5, True),      # the counterexample: complete "no"
    ("prism", 3, 5, 6, False),
    ("K4", 3, 5, 5, False),
    ("Petersen", 2, 4, 4, False),
    ("K33", 3, 6, 5, True),
    ("C9(1,2)", 2, 5, 5, False),
    ("prism", 3, 5, 5, False),     # same "no" without contraction
    ("Petersen", 3, 5, 5, False),
    ("K5", 7, 12, 14, False),      # hard: stops at the node budget
]
STATUS = {_pysearch.YES: "yes", _pysearch.NO: "no", _pysearch.TIMEOUT: "budget"}


def adjacency(name, m, n, pruned):
    g = named_graph(name)
    fp = frac_power(g, m, n)
    if pruned:
        adj, _ = contract(fp, crust_groups(fp))
        return adj
    return fp.adj


def run(kernel, adj, k, budget):
    init = [-1] * len(adj)
    t = time.perf_counter()
    status, _, nodes = kernel.color_search(adj, k, init, 0, budget)
    return status, nodes, time.perf_counter() - t


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--budget", type=int, default=300_000)
    args = ap.parse_args()
    if _csearch is None:
        print("compiled kernel not built; run `pip install --no-build-isolation -e .` first")
    print(f"{'instance':<22}{'k':>3}{'status':>8}{'nodes':>12}"
          f"{'python s':>11}{'cython s':>11}{'speed-up':>10}")
    for name, m, n, k, pruned in INSTANCES:
        adj = adjacency(name, m, n, pruned)
        label = f"{name}^({m}/{n})" + ("*" if pruned else "")
        py = min((run(_pysearch, adj, k, args.budget) for _ in range(args.repeat)), key=lambda r: r[2])
        if _csearch is not None:
            cy = min((run(_csearch, adj, k, args.budget) for _ in range(args.repeat)), key=lambda r: r[2])
            if cy[:2] != py[:2]:
                raise SystemExit(f"{label}: kernels disagree: python {py[:2]} vs cython {cy[:2]}")
            tail = f"{cy[2]:>11.4f}{py[2] / max(cy[2], 1e-9):>9.1f}x"
        else:
            tail = f"{'-':>11}{'-':>10}"
        print(f"{label:<22}{k:>3}{STATUS[py[0]]:>8}{py[1]:>12}{py[2]:>11.4f}{tail}")
    print("* crusts contracted (valid only for k = omega, odd m)")


if __name__ == "__main__":
    main()
