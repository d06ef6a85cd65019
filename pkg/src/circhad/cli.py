"""Command line front end: ``circhad verify | search | known | spectrum``.

Exit codes: 0 success (row is Hadamard, search complete), 1 verified but not
Hadamard, 2 usage or parse error, 3 search stopped at the node limit.
"""
from __future__ import annotations

import argparse
import logging
import re
import sys

from circhad import report
from circhad.correlation import DEFAULT_TOL
from circhad.search.engine import SearchConfig, Symmetry, enumerate_rows
from circhad.search.kernels import MAX_ORDER
from circhad.sequences import RowError, parse_row

EXIT_OK = 0
EXIT_NOT_HADAMARD = 1
EXIT_USAGE = 2
EXIT_INCOMPLETE = 3

log = logging.getLogger("circhad")

_ROW_LITERAL = re.compile(r"^(?:[+-]+|[+-]?\d+(?:,[+-]?\d+)*)$")


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _non_negative_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _order(text: str) -> int:
    v = _positive_int(text)
    if v > MAX_ORDER:
        raise argparse.ArgumentTypeError(f"orders above {MAX_ORDER} are not supported")
    return v


def _symmetry(text: str) -> Symmetry:
    try:
        return Symmetry.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _tol(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circhad", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr (-vv for debug)")
    sub = p.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "text"), default="text")

    v = sub.add_parser("verify", parents=[fmt], help="full report for one first row")
    v.add_argument("row", help='row literal, e.g. "+---" or "1,-1,-1,-1"')
    v.add_argument("--tol", type=_tol, default=DEFAULT_TOL)

    sp = sub.add_parser("spectrum", parents=[fmt], help="representer-polynomial spectrum of a row")
    sp.add_argument("row")
    sp.add_argument("--tol", type=_tol, default=DEFAULT_TOL)

    s = sub.add_parser("search", parents=[fmt], help="exhaustive search at one order")
    s.add_argument("n", type=_order)
    s.add_argument("--no-lemma2", action="store_true", help="disable the order and entry-count filters")
    s.add_argument("--no-prune", action="store_true", help="test every candidate row outright")
    s.add_argument("--symmetry", type=_symmetry, default=Symmetry.ROTATION | Symmetry.NEGATION,
                   help='comma list from "rotation,negation", or "none"')
    s.add_argument("--threads", type=_positive_int, default=1)
    s.add_argument("--node-limit", type=_non_negative_int, default=None)
    s.add_argument("--emit-all", action="store_true", help="list every row, not one per class")
    s.add_argument("--no-timing", action="store_true", help="omit the timing block")

    k = sub.add_parser("known", parents=[fmt], help="the ten known circulant Hadamard matrices")
    k.add_argument("--tol", type=_tol, default=DEFAULT_TOL)
    return p


def _protect_row_literal(argv: list[str]) -> list[str]:
    """Move a row literal such as ``---+`` behind ``--`` so argparse does not
    take it for an option."""
    if len(argv) < 2 or argv[0] not in ("verify", "spectrum") or "--" in argv:
        return argv
    rest = argv[1:]
    for i, tok in enumerate(rest):
        if tok.startswith("-") and _ROW_LITERAL.match(tok):
            if i > 0 and rest[i - 1] == "--tol":
                continue
            return [argv[0], *rest[:i], *rest[i + 1:], "--", tok]
    return argv


def _emit(rep: dict, fmt: str) -> None:
    sys.stdout.write(report.encode(rep, fmt))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = _protect_row_literal(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(
        level={0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    if args.command in ("verify", "spectrum"):
        try:
            row = parse_row(args.row)
        except RowError as e:
            print(f"circhad: cannot parse row {args.row!r}: {e}", file=sys.stderr)
            return EXIT_USAGE
        if args.command == "verify":
            rep = report.row_report(row, args.tol)
            if len(row) % 2:
                print(f"circhad: {report.ODD_ORDER_NOTE}", file=sys.stderr)
        else:
            rep = report.spectrum_report(row, args.tol)
        _emit(rep, args.format)
        return EXIT_OK if rep["hadamard"] else EXIT_NOT_HADAMARD

    if args.command == "known":
        rep = report.known_report(args.tol)
        _emit(rep, args.format)
        return EXIT_OK if rep["all_verified"] else EXIT_NOT_HADAMARD

    config = SearchConfig(
        n=args.n,
        use_lemma2_filter=not args.no_lemma2,
        use_paf_pruning=not args.no_prune,
        symmetry=args.symmetry,
        worker_count=args.threads,
        node_limit=args.node_limit,
        emit_all=args.emit_all,
    )
    outcome = enumerate_rows(config)
    rep = report.search_report(outcome, include_timing=not args.no_timing)
    _emit(rep, args.format)
    if not rep["search"]["verified"]:
        log.error("a reported solution failed re-verification")
        return EXIT_NOT_HADAMARD
    return EXIT_OK if outcome.complete else EXIT_INCOMPLETE


if __name__ == "__main__":
    sys.exit(main())
