"""Command-line interface.

Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
3 input parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import graphs
from .bounds import InfeasibleParameters, report_from_spectrum, srg_spectrum
from .chromatic import DEFAULT_BUDGET, verify_coloring
from .graph6 import Graph6Error, iter_graph6, parse_graph6, write_graph6
from .graphs import GraphError
from .io import (
    FormatError,
    coloring_from_json,
    is_quantum_json,
    matrix_from_json,
    quantum_from_json,
    quantum_to_json,
    read_json,
    write_json,
)
from .quantum import (
    DEFAULT_BLOCK_CAP,
    DEFAULT_TOL,
    QuantumColoringError,
    classical_to_quantum,
    omega_coloring,
    pinching_residual_dense,
    verify,
)
from .report import graph_row, paper_rows, row_from_report, rows_to_csv, rows_to_json
from .spectral import SpectralError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PARSE = 3

FAMILIES = ("kneser", "cycle", "complete", "multipartite", "barbell", "clebsch", "hoffman-singleton", "omega")


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _ints(params: list[str], count: int | None, family: str) -> list[int]:
    try:
        values = [int(x) for x in params]
    except ValueError:
        raise UsageError(f"{family}: parameters must be integers, got {params}") from None
    if count is not None and len(values) != count:
        raise UsageError(f"{family}: expected {count} parameter(s), got {len(values)}")
    return values


def generate(family: str, params: list[str], cap: int = graphs.DEFAULT_OMEGA_CAP) -> graphs.Graph:
    if family == "kneser":
        if len(params) == 1:
            params = params + ["2"]
        p, t = _ints(params, 2, family)
        return graphs.kneser(p, t)
    if family == "cycle":
        return graphs.cycle(*_ints(params, 1, family))
    if family == "complete":
        return graphs.complete(*_ints(params, 1, family))
    if family == "multipartite":
        return graphs.complete_multipartite(_ints(params, None, family))
    if family == "barbell":
        return graphs.barbell(*_ints(params, 1, family))
    if family == "clebsch":
        _ints(params, 0, family)
        return graphs.clebsch()
    if family == "hoffman-singleton":
        _ints(params, 0, family)
        return graphs.hoffman_singleton()
    if family == "omega":
        return graphs.orthogonality_graph(*_ints(params, 1, family), cap=cap)
    raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def cmd_gen(args) -> int:
    g = generate(args.family, args.params, args.cap)
    _emit(write_graph6(g) + "\n", args.out)
    return EXIT_OK


def _load_weights(path: str | None):
    if path is None:
        return None
    return matrix_from_json(read_json(path))


def cmd_bounds(args) -> int:
    rows = []
    status = EXIT_OK
    if args.srg:
        n, k, lam, mu = args.srg
        try:
            spec = srg_spectrum(n, k, lam, mu)
        except InfeasibleParameters as exc:
            print(f"error: SRG({n},{k},{lam},{mu}) infeasible: {exc}", file=sys.stderr)
            return EXIT_PARSE
        rows.append(row_from_report(f"SRG({n},{k},{lam},{mu})", report_from_spectrum(spec, connected=mu > 0)))
    if args.input:
        weights = _load_weights(args.weights)
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text(encoding="utf-8")
        for lineno, item in iter_graph6(text.splitlines()):
            if isinstance(item, Graph6Error):
                print(f"error: line {lineno}: {item}", file=sys.stderr)
                status = EXIT_PARSE
                continue
            try:
                rows.append(graph_row(f"line{lineno}", item, args.budget, weights))
            except SpectralError as exc:
                print(f"error: line {lineno}: {exc}", file=sys.stderr)
                status = EXIT_PARSE
    if not args.srg and not args.input:
        raise UsageError("bounds needs a graph6 file or --srg n k lambda mu")
    _emit(rows_to_json(rows) if args.json else rows_to_csv(rows), args.out)
    return status


def _read_graph(path: str) -> graphs.Graph:
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.strip() == ">>graph6<<"]
    if not lines:
        raise FormatError(f"{path}: no graph6 line found")
    return parse_graph6(lines[0])


def cmd_verify_coloring(args) -> int:
    g = _read_graph(args.graph)
    obj = read_json(args.coloring)
    lines = []
    if is_quantum_json(obj):
        qc = quantum_from_json(obj)
        classical_ok = None
    else:
        col = coloring_from_json(obj)
        if len(col.assignment) != g.n:
            raise FormatError(f"coloring has {len(col.assignment)} vertices, graph has n={g.n}")
        classical_ok = verify_coloring(g, col)
        lines.append(f"classical: {'pass' if classical_ok else 'fail'}")
        if any(k is None for k in col.assignment):
            lines.append("unassigned vertices present")
            print("\n".join(lines))
            return EXIT_FAIL
        qc = classical_to_quantum(g, col)
    if qc.n != g.n:
        raise FormatError(f"coloring has n={qc.n}, graph has n={g.n}")
    rep = verify(g, qc, args.tol)
    lines.append(f"n={qc.n} c={qc.c} d={qc.d} tol={args.tol:g}")
    for key, value in rep.residuals().items():
        lines.append(f"{key}: {value:.3e}")
    if args.dense and qc.n * qc.d <= args.cap:
        lines.append(f"pinching_residual_dense: {pinching_residual_dense(g, qc, args.cap):.3e}")
    passed = rep.passed if (args.quantum or classical_ok is None) else classical_ok
    lines.append("PASS" if passed else "FAIL")
    print("\n".join(lines))
    return EXIT_OK if passed else EXIT_FAIL


def cmd_omega_coloring(args) -> int:
    n = args.n
    if n % 2:
        raise UsageError("n must be even")
    if n < 2:
        raise UsageError("n must be at least 2")
    if (2**n) * n > args.cap:
        raise UsageError(f"n*d = {2**n * n} exceeds cap {args.cap}; raise --cap")
    qc = omega_coloring(n, cap=2**n)
    _emit(write_json(quantum_to_json(qc)), args.out)
    return EXIT_OK


def cmd_paper_report(args) -> int:
    rows = paper_rows(args.budget)
    _emit(rows_to_json(rows) if args.json else rows_to_csv(rows), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectrachi",
        description="Spectral lower bounds on chromatic and quantum chromatic numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated graph as graph6")
    p.add_argument("family", help=", ".join(FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("--out")
    p.add_argument("--cap", type=int, default=graphs.DEFAULT_OMEGA_CAP, help="max vertices for omega")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bounds", help="spectral bounds for graph6 input or SRG parameters")
    p.add_argument("input", nargs="?", help="graph6 file, one graph per line ('-' for stdin)")
    p.add_argument("--srg", nargs=4, type=int, metavar=("N", "K", "LAMBDA", "MU"))
    p.add_argument("--weights", help="JSON weight matrix applied to every input graph")
    p.add_argument("--budget", type=int, default=0, help="node budget for exact chi (0 = skip)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify-coloring", help="check a classical or quantum coloring")
    p.add_argument("graph", help="graph6 file (first line is used)")
    p.add_argument("coloring", help="coloring JSON file")
    p.add_argument("--quantum", action="store_true", help="judge classical colorings by quantum residuals")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--dense", action="store_true", help="also compute the dense pinching residual")
    p.add_argument("--cap", type=int, default=DEFAULT_BLOCK_CAP, help="max n*d for dense pinching")
    p.set_defaults(func=cmd_verify_coloring)

    p = sub.add_parser("omega-coloring", help="write the n-color quantum coloring of Omega(n)")
    p.add_argument("n", type=int)
    p.add_argument("--out")
    p.add_argument("--cap", type=int, default=DEFAULT_BLOCK_CAP, help="max n*d")
    p.set_defaults(func=cmd_omega_coloring)

    p = sub.add_parser("paper-report", help="bounds table for every named graph")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.add_argument("--budget", type=int, default=10**6)
    p.set_defaults(func=cmd_paper_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, Graph6Error, QuantumColoringError, SpectralError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
