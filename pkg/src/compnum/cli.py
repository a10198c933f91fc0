"""Command-line interface.

Exit codes: 0 success, 1 certificate rejected, 2 input error,
3 solver budget exhausted.
"""

from __future__ import annotations

import argparse
import os
import sys

from .certificate import Certificate, parse_certificate, render_certificate
from .constructions import certify
from .errors import BudgetExhausted, GraphError
from .exact import SolveBudget, exact_k
from .graph import parse_digraph, parse_graph, serialize_digraph, serialize_graph
from .holes import DEFAULT_CAP, analyze, render_report
from .scan import ScanConfig, run_scan
from .verifier import competition_graph, verify_certificate

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_graph(path: str):
    try:
        return parse_graph(_read(path))
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _budget(args) -> SolveBudget:
    try:
        return SolveBudget(max_k=getattr(args, "max_k", None), node_limit=args.nodes)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _write_atomic(path: str, text: str):
    tmp = path + ".tmp"
    try:
        with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_analyze(args) -> int:
    g = _load_graph(args.file)
    sys.stdout.write(render_report(analyze(g, args.cap)))
    return EXIT_OK


def cmd_certify(args) -> int:
    g = _load_graph(args.file)
    try:
        cert = certify(g, _budget(args))
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _write_atomic(args.output, render_certificate(cert))
    print(f"k<={cert.k} fallback={int(cert.fallback_used)}")
    return EXIT_OK


def cmd_exact(args) -> int:
    g = _load_graph(args.file)
    try:
        k, d, iso = exact_k(g, _budget(args))
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(f"k={k}")
    text = serialize_digraph(d)
    if args.output:
        _write_atomic(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    try:
        cert: Certificate = parse_certificate(_read(args.cert))
    except GraphError as exc:
        raise InputError(f"{args.cert}: {exc}") from None
    verdict = verify_certificate(g, cert)
    if verdict:
        print(f"accept k<={cert.k}")
        return EXIT_OK
    print(f"reject clause {verdict.clause}: {verdict.message}", file=sys.stderr)
    return EXIT_REJECT


def cmd_compete(args) -> int:
    try:
        d = parse_digraph(_read(args.file))
    except GraphError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    sys.stdout.write(serialize_graph(competition_graph(d)))
    return EXIT_OK


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return int(text), int(text)
        return int(lo), int(hi)
    except ValueError:
        raise InputError(f"bad vertex range {text!r}, expected A..B") from None


def cmd_scan(args) -> int:
    config = ScanConfig(
        n_range=_range(args.n),
        mode=args.mode,
        sample_count=args.samples,
        edge_probability=args.p,
        seed=args.seed,
        hole_cap=args.cap,
        budget=_budget(args),
    )
    try:
        config.validate()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.jobs < 1:
        raise InputError("--jobs must be >= 1")
    summary = run_scan(config, sys.stdout, rows=not args.quiet, jobs=args.jobs)
    if summary["violations"]:
        return EXIT_REJECT
    return EXIT_BUDGET if summary["budget_exhausted"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compnum",
        description="Certify upper bounds on competition numbers of graphs with at most two holes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report holes, X sets and structural flags")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="stop counting holes above this")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="write a certificate for an upper bound on k(G)")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True, help="certificate path")
    p.add_argument("--nodes", type=int, default=5_000_000, help="search-node limit for fallbacks")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("exact", help="compute k(G) exactly by search")
    p.add_argument("file")
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--nodes", type=int, default=5_000_000)
    p.add_argument("-o", "--output", help="write the witness digraph here instead of stdout")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("cert")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compete", help="print the competition graph of a digraph")
    p.add_argument("file")
    p.set_defaults(func=cmd_compete)

    p = sub.add_parser("scan", help="check the hole bound over a generated corpus")
    p.add_argument("--n", required=True, help="vertex counts, A..B")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--p", type=float, default=0.5, help="edge probability in random mode")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--nodes", type=int, default=5_000_000)
    p.add_argument("--jobs", type=int, default=1, help="worker processes; output order is fixed")
    p.add_argument("--quiet", action="store_true", help="summary lines only")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, which matches the input-error code
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
