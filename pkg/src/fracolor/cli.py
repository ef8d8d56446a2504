"""Command-line interface.

Exit status: 0 on success, 1 on a verified negative result (no coloring
exists, an invalid certificate, a counterexample found), 2 on errors and
inconclusive searches.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .colors import VertexColoring
from .fracpow import frac_power
from .graph import Graph, cubic_corpus, export_dot, from_graph6, named_graph, parse_graph
from .oracle import (decide_omega_odd, default_budget, exact_chromatic, max_clique, omega_formula,
                     verify_coloring)

log = logging.getLogger("fracolor")

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- helpers

def load_graph(args) -> tuple[str, Graph]:
    if args.graph and args.graph_file:
        raise UsageError("give either --graph or --graph-file, not both")
    if args.graph:
        try:
            return args.graph, named_graph(args.graph)
        except (KeyError, ValueError) as e:
            raise UsageError(str(e)) from None
    if args.graph_file:
        path = Path(args.graph_file)
        text = path.read_text(encoding="utf-8")
        if path.suffix == ".g6":
            first = next(ln for ln in text.splitlines() if ln.strip())
            return path.stem, from_graph6(first)
        return path.stem, parse_graph(text)
    raise UsageError("a graph is required (--graph NAME or --graph-file PATH)")


def need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required")
    if args.m is not None and args.n is not None and not args.m < args.n:
        raise UsageError("need m < n")


def graph_json(name: str, g: Graph) -> dict:
    from .fracpow import _json_label
    return {"name": name, "vertices": [_json_label(v) for v in g.vertices],
            "edges": [[_json_label(u), _json_label(v)] for u, v in g.edges()]}


def graph_from_json(d) -> Graph:
    from .fracpow import _unjson_label
    return Graph([_unjson_label(v) for v in d["vertices"]],
                 [(_unjson_label(u), _unjson_label(v)) for u, v in d["edges"]])


def dumps(obj) -> str:
    return json.dumps(obj, indent=1, default=str, ensure_ascii=False) + "\n"


def emit(args, text: str):
    if args.out:
        write_atomic(Path(args.out), text)
    else:
        sys.stdout.write(text)


def write_atomic(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def certificate(name, g, m, n, c: VertexColoring, **extra) -> dict:
    fp = frac_power(g, m, n)
    return {"kind": "coloring", "graph": graph_json(name, g), "m": m, "n": n,
            "omega": omega_formula(g.max_degree, m), "num_colors": c.num_colors,
            "info": c.info, **extra, "coloring": c.to_json(fp.vertices)}


# ---------------------------------------------------------------- commands

def cmd_build(args) -> int:
    need(args, "m", "n")
    name, g = load_graph(args)
    fp = frac_power(g, args.m, args.n)
    if args.format == "dot":
        emit(args, export_dot(fp.to_graph(), name=f"frac_{args.m}_{args.n}"))
    elif args.format == "text":
        emit(args, f"{name}^({args.m}/{args.n}): {len(fp)} vertices, {fp.num_edges} edges\n")
    else:
        idx = fp.index
        emit(args, dumps({"kind": "fractional-power", "graph": graph_json(name, g), "m": args.m,
                          "n": args.n, "vertices": [x.to_json() for x in fp.vertices],
                          "edges": [[idx[x], idx[y]] for x, y in fp.edges()]}))
    return EXIT_OK


def cmd_omega(args) -> int:
    need(args, "m")
    out = {"m": args.m}
    if args.delta is None:
        name, g = load_graph(args)
        out.update(graph=name, delta=g.max_degree)
    else:
        g = None
        out["delta"] = args.delta
    out["omega"] = omega_formula(out["delta"], args.m)
    ok = True
    if args.check:
        if g is None:
            raise UsageError("--check needs a graph")
        ns = [args.n] if args.n is not None else range(args.m + 1, args.m + 4)
        out["brute_force"] = {}
        for n in ns:
            w = max_clique(frac_power(g, args.m, n), budget=args.budget or 0)
            out["brute_force"][n] = w
            ok &= w == out["omega"]
        out["agree"] = ok
    if args.format == "text":
        emit(args, f"{out['omega']}\n")
    else:
        emit(args, dumps(out))
    return EXIT_OK if ok else EXIT_NEGATIVE


def construct(g: Graph, m: int, n: int, budget) -> VertexColoring:
    if m % 2 == 0:
        from .even import color_even
        return color_even(g, m, n, budget)
    from .odd import color_odd
    return color_odd(g, m, n, budget)


def cmd_color(args) -> int:
    need(args, "m", "n")
    name, g = load_graph(args)
    c = construct(g, args.m, args.n, args.budget)
    fp = frac_power(g, args.m, args.n)
    bad = verify_coloring(fp, c)
    if bad is not None:
        # never write an invalid certificate
        log.error("construction produced an improper coloring: %s", bad)
        return EXIT_ERROR
    if args.format == "dot":
        emit(args, export_dot(fp.to_graph(), c.assignment, name=f"frac_{args.m}_{args.n}"))
    elif args.format == "text":
        emit(args, f"{name}^({args.m}/{args.n}): proper coloring with {c.num_colors} colors "
                   f"(omega = {omega_formula(g.max_degree, args.m)}, via {c.info.get('theorem', '?')})\n")
    else:
        emit(args, dumps(certificate(name, g, args.m, args.n, c)))
    return EXIT_OK


def cmd_verify(args) -> int:
    if not args.certificate:
        raise UsageError("verify needs a certificate file")
    data = json.loads(Path(args.certificate).read_text(encoding="utf-8"))
    if "coloring" not in data or "graph" not in data:
        raise UsageError("file is not a coloring certificate")
    g = graph_from_json(data["graph"])
    m, n = int(data["m"]), int(data["n"])
    c = VertexColoring.from_json(data["coloring"])
    fp = frac_power(g, m, n)
    try:
        bad = verify_coloring(fp, c)
    except ValueError as e:
        bad = str(e)
    k = c.num_colors
    claimed = data.get("num_colors")
    report = {"valid": bad is None and (claimed is None or claimed == k), "num_colors": k,
              "omega": omega_formula(g.max_degree, m)}
    if bad is not None:
        report["violation"] = str(bad)
    elif claimed is not None and claimed != k:
        report["violation"] = f"certificate claims {claimed} colors, coloring uses {k}"
    if args.format == "text":
        emit(args, ("valid" if report["valid"] else f"INVALID: {report['violation']}") + "\n")
    else:
        emit(args, dumps(report))
    return EXIT_OK if report["valid"] else EXIT_NEGATIVE


def cmd_chi(args) -> int:
    need(args, "m", "n")
    name, g = load_graph(args)
    fp = frac_power(g, args.m, args.n)
    k = args.k if args.k is not None else omega_formula(g.max_degree, args.m)
    if args.m % 2 and k == omega_formula(g.max_degree, args.m):
        res = decide_omega_odd(g, args.m, args.n, args.budget)
    else:
        res = exact_chromatic(fp, k, args.budget)
    out = {"kind": "decision", "graph": graph_json(name, g), "m": args.m, "n": args.n,
           **res.to_json(fp.vertices)}
    if args.format == "text":
        emit(args, f"{res.status} ({res.nodes} nodes)\n")
    else:
        emit(args, dumps(out))
    return {"yes": EXIT_OK, "no": EXIT_NEGATIVE}.get(res.status, EXIT_ERROR)


def cmd_counterexample(args) -> int:
    from .odd import prove_prism_counterexample
    cert = prove_prism_counterexample(args.budget)
    if args.format == "text":
        emit(args, f"prism^(3/5): omega = {cert['omega']}, omega-colorable: {cert['omega_colorable']}, "
                   f"chi = {cert.get('chi')}\n")
    else:
        emit(args, dumps(cert))
    return {"no": EXIT_NEGATIVE, "yes": EXIT_OK}.get(cert["omega_colorable"], EXIT_ERROR)


def _hunt_one(job):
    gid, edges, verts, m, n, budget, outdir = job
    g = Graph(verts, edges)
    res = decide_omega_odd(g, m, n, budget)
    fp = frac_power(g, m, n)
    rec = {"kind": "hunt", "graph": {"name": gid, "vertices": verts, "edges": edges}, "m": m, "n": n,
           **res.to_json(fp.vertices)}
    write_atomic(Path(outdir) / f"{gid}_m{m}_n{n}.json", dumps(rec))
    return gid, m, n, res.status


def cmd_hunt(args) -> int:
    m = args.m if args.m is not None else 3
    if m % 2 == 0:
        raise UsageError("hunt tests omega-colorability for odd m")
    if args.graph or args.graph_file:
        graphs = dict([load_graph(args)])
    else:
        graphs = cubic_corpus(args.max_vertices)
    ns = [args.n] if args.n is not None else list(range(m + 1, 2 * m + 2))
    outdir = args.out or "hunt-results"
    jobs = [(gid, [list(e) for e in g.edges()], list(g.vertices), m, n, args.budget, outdir)
            for gid, g in graphs.items() for n in ns]
    if args.seed is not None:
        random.Random(args.seed).shuffle(jobs)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_hunt_one, jobs))
    else:
        results = [_hunt_one(j) for j in jobs]
    results.sort()
    summary = {"m": m, "instances": len(results), "results_dir": outdir,
               "no": [f"{gid}^({mm}/{n})" for gid, mm, n, s in results if s == "no"],
               "timeout": [f"{gid}^({mm}/{n})" for gid, mm, n, s in results if s == "timeout"]}
    sys.stdout.write(dumps(summary) if args.format != "text" else
                     f"{len(results)} instances, {len(summary['no'])} not omega-colorable, "
                     f"{len(summary['timeout'])} undecided\n")
    return EXIT_NEGATIVE if summary["no"] else EXIT_OK


COMMANDS = {"build": cmd_build, "omega": cmd_omega, "color": cmd_color, "verify": cmd_verify,
            "chi": cmd_chi, "counterexample": cmd_counterexample, "hunt": cmd_hunt}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="builtin name, e.g. prism, Petersen, K5, Q4, C9(1,2), K5-e")
    common.add_argument("--graph-file", help="DIMACS .col, edge list, DOT or graph6 (.g6) file")
    common.add_argument("--m", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int, help="number of colors for chi")
    common.add_argument("--budget", type=int, default=None,
                        help="search node budget (default: FRACOLOR_BUDGET or 20000000)")
    common.add_argument("--out", help="output file (hunt: results directory)")
    common.add_argument("--format", choices=["json", "dot", "text"], default="json")
    common.add_argument("--seed", type=int, help="instance order for hunt")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="fracolor", description="Colorings of fractional graph powers G^{m/n}.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("build", parents=[common], help="emit G^{m/n}")
    o = sub.add_parser("omega", parents=[common], help="clique number formula")
    o.add_argument("--delta", type=int)
    o.add_argument("--check", action="store_true", help="cross-check against an exact maximum clique")
    sub.add_parser("color", parents=[common], help="construct and certify a coloring")
    v = sub.add_parser("verify", parents=[common], help="check a coloring certificate")
    v.add_argument("certificate", nargs="?")
    sub.add_parser("chi", parents=[common], help="exact k-colorability decision (default k = omega)")
    sub.add_parser("counterexample", parents=[common], help="the prism with m=3, n=5")
    h = sub.add_parser("hunt", parents=[common], help="omega-colorability over small cubic graphs")
    h.add_argument("--max-vertices", type=int, default=8)
    h.add_argument("--jobs", type=int, default=1)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.budget is None:
        args.budget = default_budget()
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"fracolor {args.command}: error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, RuntimeError, OSError) as e:
        print(f"fracolor {args.command}: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
