"""Command-line interface: ``jellyspec {gen,spec,invariants,cospectral,search,verify,probe}``.

Graphs travel as graph6 lines on stdin/stdout.  Exit statuses: 0 success
(or "cospectral"), 1 clean negative, 64 usage error, 65 malformed input,
66 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Iterable, Sequence, TextIO

from . import graph as G
from .errors import CapExceeded, GraphError, MalformedGraph6
from .exact import KIND_ALIASES, char_poly, graph_matrix
from .graph6 import graph6_decode, graph6_encode, read_graph6
from .invariants import cospectral, invariant_summary
from .search import DEFAULT_CAP, SearchSpec, conjecture_probe, find_mates
from .spectra import DEFAULT_TOL, graph_spectrum
from .verify import SUITES, parse_grid, run_suite

EX_OK, EX_NEGATIVE, EX_USAGE, EX_DATAERR, EX_CAP = 0, 1, 64, 65, 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


_NAMED = re.compile(r"^(C|K|P|S|E)(\d+)$")


def named_graph(token: str) -> G.Graph:
    """C<q> cycle, K<n> complete, P<n> path, S<p> star, E<n> empty; else graph6."""
    match = _NAMED.match(token)
    if not match:
        return graph6_decode(token)
    kind, k = match.group(1), int(match.group(2))
    return {
        "C": G.cycle,
        "K": G.complete_graph,
        "P": G.path,
        "S": G.star,
        "E": G.empty_graph,
    }[kind](k)


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"missing required option {flag}")
    return value


def _stdin_graphs(stream: TextIO) -> list[G.Graph]:
    return list(read_graph6(stream))


def _emit(graphs: Iterable[G.Graph], out: TextIO) -> None:
    for g in graphs:
        out.write(graph6_encode(g) + "\n")


def cmd_gen(args, out: TextIO, inp: TextIO) -> int:
    fam = args.family
    if fam == "jellyfish":
        _emit([G.jellyfish(_need(args.p, "--p"), _need(args.q, "--q"))], out)
    elif fam == "sun":
        _emit([G.sun(_need(args.q, "--q"))], out)
    elif fam == "cycle":
        _emit([G.cycle(_need(args.q if args.q is not None else args.n, "--q"))], out)
    elif fam == "star":
        _emit([G.star(_need(args.p, "--p"))], out)
    elif fam == "path":
        _emit([G.path(_need(args.n, "--n"))], out)
    elif fam == "complete":
        _emit([G.complete_graph(_need(args.n, "--n"))], out)
    elif fam == "empty":
        _emit([G.empty_graph(_need(args.n, "--n"))], out)
    elif fam == "line-graph":
        _emit((G.line_graph(g) for g in _stdin_graphs(inp)), out)
    elif fam == "complement":
        _emit((G.complement(g) for g in _stdin_graphs(inp)), out)
    elif fam in ("union", "join"):
        if len(args.operands) < 2:
            raise UsageError(f"gen {fam} needs at least two operands")
        parts = [named_graph(t) for t in args.operands]
        combine = G.disjoint_union if fam == "union" else G.join
        acc = parts[0]
        for h in parts[1:]:
            acc = combine(acc, h)
        _emit([acc], out)
    return EX_OK


def cmd_spec(args, out: TextIO, inp: TextIO) -> int:
    kind = KIND_ALIASES[args.matrix]
    for g in _stdin_graphs(inp):
        if args.float:
            out.write(graph_spectrum(g, kind, args.tol).serialize() + "\n")
        else:
            out.write(char_poly(graph_matrix(g, kind)).serialize() + "\n")
    return EX_OK


def cmd_invariants(args, out: TextIO, inp: TextIO) -> int:
    for g in _stdin_graphs(inp):
        summary = invariant_summary(g)
        out.write((summary.to_json() if args.format == "json" else summary.to_record() + "\n") + "\n")
    return EX_OK


def _read_file(path: str, inp: TextIO) -> list[G.Graph]:
    if path == "-":
        return _stdin_graphs(inp)
    with open(path) as fh:
        return _stdin_graphs(fh)


def cmd_cospectral(args, out: TextIO, inp: TextIO) -> int:
    graphs = [g for path in args.files for g in _read_file(path, inp)]
    if len(graphs) != 2:
        raise MalformedGraph6(f"expected exactly two graphs, got {len(graphs)}")
    same = cospectral(graphs[0], graphs[1], KIND_ALIASES[args.matrix])
    out.write(("cospectral" if same else "not cospectral") + "\n")
    return EX_OK if same else EX_NEGATIVE


def _write_report(report, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(report.to_dict()) + "\n")
    else:
        out.write(report.to_record() + "\n")


def cmd_search(args, out: TextIO, inp: TextIO) -> int:
    target = named_graph(args.target)
    if args.n is not None and args.n != target.n:
        raise UsageError(f"--n {args.n} differs from the target order {target.n}")
    spec = SearchSpec(target.n, matrix_kind=KIND_ALIASES[args.matrix], connected_only=args.connected)
    candidates = None
    if args.candidates:
        candidates = _read_file(args.candidates, inp)
    report = find_mates(target, spec, candidates, cap=args.cap, jobs=args.jobs)
    _write_report(report, args.format, out)
    return EX_OK


def cmd_verify(args, out: TextIO, inp: TextIO) -> int:
    try:
        grid = parse_grid(args.grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    failed = 0
    for suite in args.suite:
        for check in run_suite(suite, grid, cap=args.cap, jobs=args.jobs):
            out.write(check.line() + "\n")
            failed += check.failed
    out.write(f"{'FAIL' if failed else 'PASS'} total failures={failed}\n")
    return EX_NEGATIVE if failed else EX_OK


def cmd_probe(args, out: TextIO, inp: TextIO) -> int:
    report = conjecture_probe(args.p, args.q, cap=args.cap, jobs=args.jobs)
    _write_report(report, args.format, out)
    if args.format != "json":
        verdict = "no Laplacian mate at this order (evidence only)" if report.determined else "COUNTEREXAMPLE found"
        out.write(f"verdict={verdict}\n")
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jellyspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a graph as graph6")
    gen.add_argument(
        "family",
        choices=["jellyfish", "sun", "cycle", "star", "path", "complete", "empty",
                 "line-graph", "complement", "union", "join"],
    )
    gen.add_argument("operands", nargs="*", help="operands for union/join (C4, K1, S4, P3, E2 or graph6)")
    gen.add_argument("--p", type=int)
    gen.add_argument("--q", type=int)
    gen.add_argument("--n", type=int)
    gen.set_defaults(func=cmd_gen)

    spec = sub.add_parser("spec", help="characteristic polynomial or spectrum of stdin graphs")
    spec.add_argument("--matrix", choices=["a", "l", "q"], required=True)
    mode = spec.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="integer char-poly coefficients (default)")
    mode.add_argument("--float", action="store_true", help="eigenvalues with multiplicities")
    spec.add_argument("--tol", type=float, default=DEFAULT_TOL)
    spec.set_defaults(func=cmd_spec)

    inv = sub.add_parser("invariants", help="invariant summary of stdin graphs")
    inv.add_argument("--format", choices=["text", "json"], default="text")
    inv.set_defaults(func=cmd_invariants)

    cos = sub.add_parser("cospectral", help="exit 0 iff the two graphs are cospectral")
    cos.add_argument("--matrix", choices=["a", "l", "q"], required=True)
    cos.add_argument("files", nargs="+", help="one file with two graphs, or two files ('-' = stdin)")
    cos.set_defaults(func=cmd_cospectral)

    for name, func, helptext in (
        ("search", cmd_search, "exhaustive cospectral-mate search"),
        ("probe", cmd_probe, "Laplacian mate search for an odd-cycle jellyfish"),
        ("verify", cmd_verify, "run verification suites over a jellyfish grid"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.add_argument("--jobs", type=int, default=1)
        if name != "verify":
            p.add_argument("--format", choices=["text", "json"], default="text")
        p.set_defaults(func=func)
        if name == "search":
            p.add_argument("--target", required=True)
            p.add_argument("--matrix", choices=["a", "l", "q"], required=True)
            p.add_argument("--n", type=int)
            p.add_argument("--candidates", help="graph6 file ('-' = stdin) instead of enumeration")
            p.add_argument("--connected", action="store_true")
        elif name == "probe":
            p.add_argument("--p", type=int, required=True)
            p.add_argument("--q", type=int, required=True)
        else:
            p.add_argument("--suite", action="append", required=True, choices=sorted(SUITES))
            p.add_argument("--grid", default="p=1..2,q=3..4")
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, inp: TextIO | None = None) -> int:
    out = out or sys.stdout
    inp = inp or sys.stdin
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        return args.func(args, out, inp)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EX_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EX_CAP
    except MalformedGraph6 as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EX_DATAERR
    except GraphError as exc:
        print(f"invalid request: {exc}", file=sys.stderr)
        return EX_USAGE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EX_DATAERR


if __name__ == "__main__":
    sys.exit(main())
