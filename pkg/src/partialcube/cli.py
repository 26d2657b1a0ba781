"""Command-line entry point: ``partialcube {gen,analyze,check,sweep,gplus,crossing}``.

Exit status: 0 when every universally claimed property holds, 1 on a
property violation, 2 on usage, parse or precondition errors.
"""

from __future__ import annotations

import argparse
import sys

from . import files
from .census import clique_census
from .classify import verify_theorems
from .errors import IntermediateNotPartialCubeError, PartialCubeError
from .families import FAMILIES, FamilySpec, generate
from .gplus import DEFAULT_MAX_VERTICES, g_plus, verify_gplus
from .pcube import crossing_graph
from . import sweep as sweeps

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _emit(text: str, out: str | None):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _load(path: str):
    g = files.read_graph(path)
    files.check_connected(g)
    return g


def cmd_gen(args) -> int:
    params = {k: v for k, v in (("n", args.n), ("x", args.x), ("of", args.of), ("a", args.a),
                                ("b", args.b), ("seed", args.seed), ("density", args.density),
                                ("deletions", args.deletions)) if v is not None}
    g = generate(FamilySpec(args.family, params))
    _emit(files.dump_graph(g), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = _load(args.input)
    doc = files.analysis_report(g, args.base, timing=args.timing)
    _emit(files.dump_document(doc), args.out)
    return EXIT_OK if doc["flags"]["is_partial_cube"] else EXIT_USAGE


def cmd_check(args) -> int:
    g = _load(args.input)
    vertex, _ = files.resolve_base(g, args.base)
    rep = verify_theorems(g, vertex)
    block = files.verdict_block(rep)
    width = max(len(k) for k in block)
    lines = [f"{k.ljust(width)}  {'-' if v is None else v}"
             for k, v in block.items() if k != "failures"]
    lines.append(f"{'C'.ljust(width)}  {rep.C}")
    lines.append(f"{'W'.ljust(width)}  {rep.W}")
    lines.append(f"{'D'.ljust(width)}  {rep.D}")
    lines.append(f"{'Cl_crossing'.ljust(width)}  {rep.Cl if rep.Cl is not None else '-'}")
    sys.stdout.write("\n".join(lines) + "\n")
    if rep.failures():
        sys.stdout.write("FAILED: " + ", ".join(rep.failures()) + "\n")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_sweep(args) -> int:
    corpus, desc = [], {}
    if args.downsets is not None:
        corpus += sweeps.downset_corpus(args.downsets)
        desc["downsets"] = args.downsets
    if args.deletions is not None:
        corpus += sweeps.deletion_corpus(args.deletions, args.seeds, args.max_delete)
        desc.update(deletions=args.deletions, seeds=args.seeds, max_delete=args.max_delete)
    if args.random_downsets is not None:
        corpus += sweeps.random_downset_corpus(args.random_downsets, args.seeds)
        desc.update(random_downsets=args.random_downsets, seeds=args.seeds)
    if args.median:
        kinds = [k for k in args.median.split(",") if k]
        corpus += sweeps.median_corpus(kinds, args.max)
        desc.update(median=kinds, max=args.max)
    if args.named:
        corpus += sweeps.named_corpus()
        desc["named"] = True
    if not corpus:
        raise SystemExit("sweep: choose at least one corpus (--downsets, --deletions, ...)")
    desc.update(gplus=args.gplus, oracle_dim=args.oracle_dim)
    summary = sweeps.run_sweep(corpus, args.workers, args.oracle_dim, args.gplus, desc)
    _emit(files.dump_document(summary), args.out)
    return EXIT_OK if summary["failures"] == 0 else EXIT_VIOLATION


def cmd_gplus(args) -> int:
    g = _load(args.input)
    trace = g_plus(g, order=args.order, max_vertices=args.max_vertices)
    props = verify_gplus(g, trace)
    _emit(files.dump_graph(trace.result), args.out)
    doc = {
        "format": "pcg-trace-1",
        "dim": trace.dim,
        "n_stages": trace.n_stages,
        "stages": [trace.stage_words(i) for i in range(len(trace.stages))],
        "cycles_used": [[list(c.vertices) for c in stage] for stage in trace.cycles_used],
        "properties": {"induced": props[0], "median": props[1], "same_crossing_graph": props[2]},
    }
    other = g_plus(g, order="ambient" if args.order == "graph" else "graph",
                   max_vertices=args.max_vertices)
    if other.stages[-1] != trace.stages[-1]:
        doc["alternate_order_result"] = other.stage_words(len(other.stages) - 1)
    if args.trace:
        _emit(files.dump_document(doc), args.trace)
    else:
        sys.stderr.write(files.dump_document(doc))
    return EXIT_OK if all(props) else EXIT_VIOLATION


def cmd_crossing(args) -> int:
    g = _load(args.input)
    cg = crossing_graph(g)
    _emit(files.dump_graph(cg), args.out)
    stream = sys.stderr if args.out in (None, "-") else sys.stdout
    stream.write(f"Cl = {clique_census(cg)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partialcube", description="Recognise partial cubes and check their polynomial identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated graph file")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--x", help="comma-separated generator words for --family daisy")
    p.add_argument("--of", help="base graph for --family simplex, e.g. K3, P4, C5")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--density", type=float)
    p.add_argument("--deletions", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="write a full analysis report")
    p.add_argument("input")
    p.add_argument("--base", help="vertex id or label word")
    p.add_argument("--out")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="print the verdict table; exit 1 on a violation")
    p.add_argument("input")
    p.add_argument("--base")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="check every property over a corpus")
    p.add_argument("--downsets", type=int, metavar="N", help="all downsets of Q_N")
    p.add_argument("--deletions", type=int, metavar="N", help="vertex-deleted partial cubes of Q_N")
    p.add_argument("--random-downsets", type=int, metavar="N")
    p.add_argument("--seeds", type=int, default=100)
    p.add_argument("--max-delete", type=int)
    p.add_argument("--median", help="comma list of trees,grids,hypercubes")
    p.add_argument("--max", type=int, default=20, help="vertex cap for --median")
    p.add_argument("--named", action="store_true", help="include the fixed example graphs")
    p.add_argument("--gplus", type=int, default=0, metavar="V",
                   help="also check the G+ closure on graphs with at most V vertices")
    p.add_argument("--oracle-dim", type=int, default=10)
    p.add_argument("--workers", type=int, help=f"process count (default ${sweeps.WORKERS_ENV} or 1)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gplus", help="write the G+ closure and its stage trace")
    p.add_argument("input")
    p.add_argument("--out")
    p.add_argument("--trace")
    p.add_argument("--order", choices=("graph", "ambient"), default="graph")
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    p.set_defaults(func=cmd_gplus)

    p = sub.add_parser("crossing", help="write the crossing graph and print its clique polynomial")
    p.add_argument("input")
    p.add_argument("--out")
    p.set_defaults(func=cmd_crossing)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except IntermediateNotPartialCubeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VIOLATION
    except (PartialCubeError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
