"""Command line entry point.

Exit codes: 0 when the command ran (negative verdicts included), 1 for
invalid input or configuration, 2 for internal errors and refused sizes.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .blowup import diff_boundary, is_log_fano
from .complements import (
    DEFAULT_N_MAX,
    MINIMALITY_SCOPE,
    Arrangement,
    complement_coefficient_bounds,
    lc_status,
    lct,
    minimal_complement_index,
)
from .model import ExponentTuple
from .numerics import format_rational, parse_rational
from .pipeline import AnalysisConfig, SearchConfig, SearchStats, analyze, report_line, run_search, search
from .terminality import DEFAULT_ORACLE_LIMIT, SizeLimitError, brute_force_min_discrepancy


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _exponents(text: str) -> ExponentTuple:
    try:
        return ExponentTuple.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="brieskorn", description="Terminality, blow-up and complement checks for x1^a1+...+xk^ak.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="full analysis of one tuple")
    p.add_argument("tuple", type=_exponents)
    p.add_argument("--bound", choices=("lcm", "product"), default="lcm")
    p.add_argument("--full-scan", action="store_true")
    p.add_argument("--max-n", type=_positive, default=DEFAULT_N_MAX)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("complement", help="minimal complement index of the blow-up pair")
    p.add_argument("tuple", type=_exponents)
    p.add_argument("--max-n", type=_positive, default=DEFAULT_N_MAX)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("oracle", help="brute-force minimum discrepancy over a box")
    p.add_argument("tuple", type=_exponents)
    p.add_argument("--box", type=_positive, required=True)
    p.add_argument("--limit", type=_positive, default=DEFAULT_ORACLE_LIMIT)

    p = sub.add_parser("lct", help="lc threshold of a generic hyperplane arrangement")
    p.add_argument("--dim", type=_positive, required=True)
    p.add_argument("--coeffs", required=True)

    p = sub.add_parser("search", help="sweep nondecreasing tuples")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-exp", type=int, required=True)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--max-n", type=_positive, default=DEFAULT_N_MAX)
    p.add_argument("--out")
    p.add_argument("--checkpoint")
    p.add_argument("--require-coprime", action="store_true")
    p.add_argument("--force", action="store_true")
    return parser


def _print_check(report, out) -> None:
    t = report.terminality
    print(f"tuple: {report.tuple}", file=out)
    print(f"reciprocal sum: {format_rational(report.reciprocal_sum)}", file=out)
    print(f"terminality: {t.status} (min h = {t.min_scanned_h}, scanned d <= {t.scan_bound_used}, {t.bound_mode})", file=out)
    if t.witness is not None:
        print(f"  witness {t.witness.coordinates} has discrepancy {t.witness_discrepancy}", file=out)
    print(f"weights: {report.weights.weights}", file=out)
    print(f"exceptional discrepancy: {format_rational(report.exceptional_discrepancy)}", file=out)
    print("boundary: " + " + ".join(
        f"{format_rational(c)}*{lab}" for c, lab in zip(report.pair.coefficients, report.pair.labels)), file=out)
    print(f"log Fano: {report.log_fano}", file=out)
    print(f"bounds pass: {report.bounds.passed} (d_max = {format_rational(report.bounds.d_max)})", file=out)
    if report.minimal_index is None:
        print(f"minimal complement index: none up to {report.n_max}", file=out)
    else:
        print(f"minimal complement index: {report.minimal_index} ({report.complement.lc.status.value})", file=out)
    if not report.coprimality:
        print("note: exponents are not pairwise coprime", file=out)
    print(f"exceptional candidate: {report.exceptional_candidate}", file=out)


def _complement_payload(a: ExponentTuple, n_max: int) -> dict:
    pair = diff_boundary(a)
    fano = is_log_fano(pair)
    found = minimal_complement_index(pair, n_max) if fano else None
    div = found[1] if found else None
    return {
        "tuple": list(a.exponents),
        "diff_coefficients": [format_rational(c) for c in pair.coefficients],
        "log_fano": fano,
        "bounds": complement_coefficient_bounds(pair).to_dict(),
        "n_max": n_max,
        "minimal_index": found[0] if found else None,
        "rounded_coefficients": [format_rational(c) for c in div.rounded_coefficients] if div else None,
        "rounded_numerators": [int(c * div.index) for c in div.rounded_coefficients] if div else None,
        "padding": [format_rational(c) for c in div.padding] if div else None,
        "lc_status": div.lc.status.value if div else None,
        "minimality_scope": MINIMALITY_SCOPE,
    }


def _run(args, out) -> int:
    if args.command == "check":
        report = analyze(args.tuple, AnalysisConfig(bound_mode=args.bound, full_scan=args.full_scan, n_max=args.max_n))
        if args.json:
            print(json.dumps(report.to_dict(include_timings=True), indent=2), file=out)
        else:
            _print_check(report, out)
        return 0

    if args.command == "complement":
        payload = _complement_payload(args.tuple, args.max_n)
        if args.json:
            print(json.dumps(payload, indent=2), file=out)
        else:
            print(f"tuple: {args.tuple}", file=out)
            print(f"minimal index: {payload['minimal_index']}", file=out)
            if payload["rounded_coefficients"]:
                print(f"rounded coefficients: {', '.join(payload['rounded_coefficients'])}", file=out)
                print(f"padding: {', '.join(payload['padding']) or '-'}", file=out)
                print(f"lc status: {payload['lc_status']}", file=out)
            print(f"bounds pass: {payload['bounds']['pass']}", file=out)
        return 0

    if args.command == "oracle":
        value, vec = brute_force_min_discrepancy(args.tuple, args.box, limit=args.limit)
        print(f"min discrepancy: {value}", file=out)
        print(f"argmin: {','.join(map(str, vec.coordinates))}", file=out)
        return 0

    if args.command == "lct":
        coeffs = tuple(parse_rational(c) for c in args.coeffs.split(",") if c.strip())
        arr = Arrangement(args.dim, coeffs)
        threshold = lct(arr)
        print(f"lct: {'infinity' if threshold is None else format_rational(threshold)}", file=out)
        print(f"status: {lc_status(arr).status.value}", file=out)
        return 0

    if args.command == "search":
        config = SearchConfig(
            k=args.k,
            max_exp=args.max_exp,
            n_max=args.max_n,
            jobs=args.jobs,
            out=args.out,
            checkpoint=args.checkpoint,
            require_coprime=args.require_coprime,
            force=args.force,
        )
        if args.out:
            stats = run_search(config)
        else:
            if args.checkpoint:
                raise UsageError("--checkpoint requires --out")
            stats = SearchStats()
            for report in search(config, stats):
                print(report_line(report), file=out)
            stats.finished = True
        print(json.dumps(stats.to_dict()), file=sys.stderr)
        return 0

    raise UsageError(f"unknown command {args.command}")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return _run(args, out)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SizeLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
