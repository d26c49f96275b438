"""Command-line front end.

Verbs:
    build       named graph families -> graph6 on stdout
    spec        eigenvalues of a graph (JSON or table)
    charpoly    exact characteristic polynomial coefficients (JSON)
    cospectral  exit 0 if two graphs are cospectral, 1 if not, 2 on error
    hong        spectral-radius bound report (JSON)
    mates       exhaustive cospectral-mate search (JSON + graph6 lines)
    verify-ds   mate search against a friendship graph (JSON)
    prove       run the proof pipeline on a graph (table or JSON)
    gen         enumerate non-isomorphic graphs -> graph6 stream

graph6 is the universal pipe format: one graph per line. Structured output
is JSON with a top-level "schema": 1. Identical invocations produce
byte-identical JSON when --no-timing is given (timings are the only
nondeterministic field). Exit codes: 0 success (for cospectral: graphs are
cospectral; for prove: all steps passed), 1 negative result, 2 usage or
input errors.
"""

import argparse
import json
import sys

from .canon import is_isomorphic
from .charpoly import char_poly, are_cospectral
from .eigen import EqualityStructureViolation, eigenvalues, hong_equality_case
from .enumeration import (
    DEFAULT_MAX_VERTICES,
    EnumerationError,
    EnumerationTask,
    enumerate_graphs,
    find_cospectral_mates,
    verify_ds,
)
from .friendship import build_friendship, f16_mate, f16_mate_block
from .graph6 import Graph6Error, from_graph6, to_graph6
from .graphs import Graph, GraphError, complete_graph, cycle_graph
from .proof import run_proof_pipeline

_FAMILIES = ("friendship", "figure2", "f16-mate", "complete", "cycle")


class _CliError(Exception):
    pass


def _read_graph(args) -> Graph:
    """One graph from --g6 or the first graph6 line of --in (- = stdin)."""
    if getattr(args, "g6", None):
        return from_graph6(args.g6)
    path = getattr(args, "infile", None)
    if not path:
        raise _CliError("need --g6 STRING or --in FILE")
    if path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(path, "rb") as fh:
            lines = fh.read().splitlines()
    for line in lines:
        if line.strip():
            return from_graph6(line)
    raise _CliError(f"no graph6 line found in {path}")


def _out_stream(args):
    path = getattr(args, "out", None)
    if path and path != "-":
        return open(path, "w")
    return sys.stdout


def _emit_json(args, payload: dict) -> None:
    stream = _out_stream(args)
    json.dump(payload, stream, indent=2)
    stream.write("\n")
    if stream is not sys.stdout:
        stream.close()


def _fmt15(x: float) -> float:
    return float(f"{x:.15g}")


def _cmd_build(args) -> int:
    fam = args.family
    if fam == "friendship":
        if args.n is None:
            raise _CliError("--family friendship requires --n")
        g = build_friendship(args.n)
    elif fam == "figure2":
        g = f16_mate_block()
    elif fam == "f16-mate":
        g = f16_mate()
    elif fam == "complete":
        if args.n is None:
            raise _CliError("--family complete requires --n")
        g = complete_graph(args.n)
    elif fam == "cycle":
        if args.n is None:
            raise _CliError("--family cycle requires --n")
        g = cycle_graph(args.n)
    else:  # argparse choices make this unreachable
        raise _CliError(f"unknown family {fam}")
    stream = _out_stream(args)
    stream.write(to_graph6(g).decode("ascii") + "\n")
    if stream is not sys.stdout:
        stream.close()
    return 0


def _cmd_spec(args) -> int:
    g = _read_graph(args)
    summary = eigenvalues(g)
    if args.table:
        stream = _out_stream(args)
        stream.write(f"vertices {g.n}  edges {g.m}\n")
        for value, mult in summary.clustered():
            stream.write(f"  {value: .12f}  x{mult}\n")
        if stream is not sys.stdout:
            stream.close()
        return 0
    _emit_json(args, {
        "schema": 1,
        "n": g.n,
        "m": g.m,
        "eigenvalues": [_fmt15(x) for x in summary.eigenvalues],
        "radius": _fmt15(summary.radius),
        "clusters": [[_fmt15(v), c] for v, c in summary.clustered()],
    })
    return 0


def _cmd_charpoly(args) -> int:
    g = _read_graph(args)
    p = char_poly(g)
    _emit_json(args, {
        "schema": 1,
        "n": g.n,
        "coeffs_low_to_high": list(p.coeffs),
        "pretty": str(p),
    })
    return 0


def _cmd_cospectral(args) -> int:
    a = from_graph6(args.a)
    b = from_graph6(args.b)
    same = are_cospectral(a, b)
    _emit_json(args, {
        "schema": 1,
        "cospectral": same,
        "isomorphic": is_isomorphic(a, b) if same else False,
    })
    return 0 if same else 1


def _cmd_hong(args) -> int:
    g = _read_graph(args)
    try:
        rep = hong_equality_case(g)
    except EqualityStructureViolation as exc:
        _emit_json(args, {
            "schema": 1,
            "error": "equality-structure-violation",
            "detail": str(exc),
        })
        return 2
    _emit_json(args, {
        "schema": 1,
        "n": rep.n,
        "m": rep.m,
        "delta": rep.delta,
        "bound": _fmt15(rep.bound),
        "radius": _fmt15(rep.radius),
        "classification": rep.classification,
        "bidegrees": list(rep.bidegrees) if rep.bidegrees else None,
    })
    return 0


def _mate_report_out(args, report) -> int:
    payload = report.to_json_dict(with_timing=not args.no_timing)
    _emit_json(args, payload)
    if args.mates_out:
        with open(args.mates_out, "w") as fh:
            for g in report.mates:
                fh.write(to_graph6(g).decode("ascii") + "\n")
    return 0


def _cmd_mates(args) -> int:
    target = from_graph6(args.target)
    report = find_cospectral_mates(
        target,
        connected_only=args.connected,
        jobs=args.jobs,
        max_vertices=args.max_vertices,
        assume_min_degree=args.assume_min_degree,
    )
    return _mate_report_out(args, report)


def _cmd_verify_ds(args) -> int:
    report = verify_ds(
        args.n,
        connected_only=args.connected,
        jobs=args.jobs,
        max_vertices=args.max_vertices,
        assume_min_degree=2 if args.assume_lemma else None,
    )
    return _mate_report_out(args, report)


def _cmd_prove(args) -> int:
    g = _read_graph(args)
    report = run_proof_pipeline(args.n, g)
    if args.json:
        _emit_json(args, report.to_json_dict())
    else:
        stream = _out_stream(args)
        stream.write(f"proof pipeline: n={args.n}, graph {g.n} vertices / {g.m} edges\n")
        for s in report.steps:
            stream.write(f"  {s.verdict:<4}  {s.name:<17} {s.evidence}\n")
        stream.write(f"final verdict: {'PASS' if report.final_verdict else 'FAIL'}\n")
        if stream is not sys.stdout:
            stream.close()
    return 0 if report.final_verdict else 1


def _cmd_gen(args) -> int:
    task = EnumerationTask(
        n_vertices=args.vertices,
        n_edges=args.edges,
        connected_only=args.connected,
        min_degree_filter=args.min_degree,
    )
    stream = _out_stream(args)

    def emit(g):
        stream.write(to_graph6(g).decode("ascii") + "\n")

    count = enumerate_graphs(task, emit, jobs=args.jobs, max_vertices=args.max_vertices)
    if stream is not sys.stdout:
        stream.close()
    print(f"classes: {count}", file=sys.stderr)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="specgraph",
        description="Exact spectral graph toolkit: friendship graphs, "
                    "cospectrality, enumeration, bound checks, proof replay.",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    def add_graph_input(p):
        p.add_argument("--in", dest="infile", metavar="FILE",
                       help="graph6 file, first line used (- for stdin)")
        p.add_argument("--g6", metavar="STRING", help="inline graph6 value")

    def add_out(p):
        p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    p = sub.add_parser("build", help="construct a named graph family")
    p.add_argument("--family", required=True, choices=_FAMILIES)
    p.add_argument("--n", type=int, help="family parameter")
    add_out(p)
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("spec", help="eigenvalues")
    add_graph_input(p)
    p.add_argument("--table", action="store_true", help="human-readable table")
    add_out(p)
    p.set_defaults(fn=_cmd_spec)

    p = sub.add_parser("charpoly", help="exact characteristic polynomial")
    add_graph_input(p)
    add_out(p)
    p.set_defaults(fn=_cmd_charpoly)

    p = sub.add_parser("cospectral", help="exact cospectrality test")
    p.add_argument("--a", required=True, metavar="G6")
    p.add_argument("--b", required=True, metavar="G6")
    add_out(p)
    p.set_defaults(fn=_cmd_cospectral)

    p = sub.add_parser("hong", help="spectral-radius bound report")
    add_graph_input(p)
    add_out(p)
    p.set_defaults(fn=_cmd_hong)

    def add_search_flags(p):
        p.add_argument("--connected", action="store_true",
                       help="restrict the search to connected graphs")
        p.add_argument("--jobs", type=int, default=1, metavar="J",
                       help="parallel worker processes (default 1)")
        p.add_argument("--max-vertices", type=int, default=None, metavar="N",
                       help=f"feasibility cap override (default {DEFAULT_MAX_VERTICES})")
        p.add_argument("--no-timing", action="store_true",
                       help="omit elapsed_ms for byte-identical output")
        p.add_argument("--mates-out", metavar="FILE",
                       help="also write found mates as graph6 lines")

    p = sub.add_parser("mates", help="exhaustive cospectral-mate search")
    p.add_argument("--target", required=True, metavar="G6")
    p.add_argument("--assume-min-degree", type=int, default=None, metavar="D",
                   help="UNSOUND SHORTCUT unless independently justified: only "
                        "search graphs with this exact minimum degree")
    add_search_flags(p)
    add_out(p)
    p.set_defaults(fn=_cmd_mates)

    p = sub.add_parser("verify-ds", help="search for cospectral mates of a friendship graph")
    p.add_argument("--n", type=int, required=True, help="number of triangles")
    p.add_argument("--assume-lemma", action="store_true",
                   help="fast mode: restrict to minimum degree 2; assumes the "
                        "very degree fact the full search would verify, and is "
                        "recorded in the report")
    add_search_flags(p)
    add_out(p)
    p.set_defaults(fn=_cmd_verify_ds)

    p = sub.add_parser("prove", help="replay the proof pipeline on a graph")
    p.add_argument("--n", type=int, required=True, help="number of triangles")
    add_graph_input(p)
    p.add_argument("--json", action="store_true", help="JSON instead of a table")
    add_out(p)
    p.set_defaults(fn=_cmd_prove)

    p = sub.add_parser("gen", help="enumerate non-isomorphic graphs")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--min-degree", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-vertices", type=int, default=None)
    add_out(p)
    p.set_defaults(fn=_cmd_gen)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except Graph6Error as exc:
        print(f"graph6 error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, EnumerationError, _CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
