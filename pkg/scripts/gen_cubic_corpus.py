"""Regenerate src/fracolor/data/cubic<n>.g6: all connected cubic graphs on n vertices.

Samples random 3-regular graphs with a fixed seed and keeps one per
isomorphism class until the known class counts are reached.
Needs networkx (test extra).
"""
import random
import sys
from pathlib import Path

import networkx as nx

# connected cubic graphs by order
COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}
OUT = Path(__file__).resolve().parents[1] / "src" / "fracolor" / "data"


def classes(n, want, rng, max_draws=2_000_000):
    found = {}
    for _ in range(max_draws):
        g = nx.random_regular_graph(3, n, seed=rng.randrange(2**32))
        if not nx.is_connected(g):
            continue
        key = nx.weisfeiler_lehman_graph_hash(g, iterations=4)
        bucket = found.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for h in bucket):
            continue
        bucket.append(g)
        if sum(map(len, found.values())) == want:
            break
    graphs = [h for b in found.values() for h in b]
    if len(graphs) != want:
        sys.exit(f"n={n}: found {len(graphs)} classes, expected {want}")
    return graphs


def main():
    rng = random.Random(20240601)
    OUT.mkdir(parents=True, exist_ok=True)
    for n, want in COUNTS.items():
        lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in classes(n, want, rng))
        (OUT / f"cubic{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"cubic{n}.g6: {len(lines)} graphs")


if __name__ == "__main__":
    main()
