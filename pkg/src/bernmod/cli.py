"""Command-line interface.

Subcommands: scan, verify-cert, vandiver, lambda, bernoulli, stats.
Exit codes: 0 success, 1 usage or file-format error, 2 internal
cross-check fault (the run's results cannot be trusted), 3 mathematical
discovery (a failed Vandiver or lambda test, reported on DISCOVERY
lines).  A fault outranks a discovery when both occur in one run.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .bernoulli import bernoulli_all_voronoi, bernoulli_single
from .errors import BernmodError, CrossCheckFault, FormatError
from .harness import PrimeRecord, ScanFault, scan, stats, verify_certificate
from .iwasawa import lambda_verdict
from .modarith import FieldCtx
from .vandiver import vandiver_test

__all__ = ["main"]

_EXIT_OK = 0
_EXIT_USAGE = 1
_EXIT_FAULT = 2
_EXIT_DISCOVERY = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; 2 is taken by faults."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(_EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="bernmod",
                     description="Irregular primes: scan, verify, test.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_scan = sub.add_parser("scan", help="scan a prime range")
    p_scan.add_argument("--from", dest="lo", type=int, required=True,
                        help="lower bound of the prime range (inclusive)")
    p_scan.add_argument("--to", dest="hi", type=int, required=True,
                        help="upper bound of the prime range (exclusive)")
    p_scan.add_argument("--method", default="both",
                        choices=["voronoi", "power-series", "both"],
                        help="table construction route(s)")
    p_scan.add_argument("--workers", type=int, default=1,
                        help="worker process count")
    p_scan.add_argument("--out", default=None,
                        help="certificate output file")
    p_scan.add_argument("--checkpoint", default=None,
                        help="checkpoint file (resumes if it exists)")
    p_scan.add_argument("--bernoulli-only", action="store_true",
                        help="skip the Vandiver and lambda phases")
    p_scan.set_defaults(func=_cmd_scan)

    p_verify = sub.add_parser("verify-cert", help="recheck a certificate file")
    p_verify.add_argument("--file", required=True)
    p_verify.add_argument("--sample", type=int, default=None,
                          help="check n random pairs instead of everything")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=_cmd_verify)

    p_vand = sub.add_parser("vandiver", help="run the Kummer-Vandiver test")
    p_vand.add_argument("--p", type=int, default=None)
    p_vand.add_argument("--k", type=int, default=None)
    p_vand.add_argument("--pairs", default=None,
                        help="file of 'p k' lines to test in bulk")
    p_vand.set_defaults(func=_cmd_vandiver)

    p_lam = sub.add_parser("lambda", help="run the lambda-invariant tests")
    p_lam.add_argument("--p", type=int, default=None)
    p_lam.add_argument("--k", type=int, default=None)
    p_lam.add_argument("--pairs", default=None,
                       help="file of 'p k' lines; give every pair of each p")
    p_lam.set_defaults(func=_cmd_lambda)

    p_bern = sub.add_parser("bernoulli", help="print B_k mod p")
    p_bern.add_argument("--p", type=int, required=True)
    p_bern.add_argument("--k", type=int, default=None,
                        help="single even index; omit for the full table")
    p_bern.set_defaults(func=_cmd_bernoulli)

    p_stats = sub.add_parser("stats", help="index-of-irregularity statistics")
    p_stats.add_argument("--file", required=True)
    p_stats.set_defaults(func=_cmd_stats)

    return parser


def _require_pair_args(parser_name: str, args) -> list[tuple[int, int]]:
    if args.pairs is not None:
        if args.p is not None or args.k is not None:
            raise FormatError(f"{parser_name}: give --pairs or --p/--k, not both")
        return _read_pairs_file(args.pairs)
    if args.p is None or args.k is None:
        raise FormatError(f"{parser_name}: need --p and --k, or --pairs FILE")
    return [(args.p, args.k)]


def _read_pairs_file(path) -> list[tuple[int, int]]:
    """Lines of 'p k'; blank lines and #-comments ignored."""
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for number, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise FormatError(f"expected 'p k', got {line!r}", line=number)
            try:
                pairs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise FormatError(
                    f"expected integers, got {line!r}", line=number
                ) from None
    return pairs


def _cmd_scan(args) -> int:
    method = args.method.replace("-", "_")
    primes = irregular = faults = discoveries = 0
    stream = scan(args.lo, args.hi, method=method, workers=args.workers,
                  out=args.out, checkpoint=args.checkpoint,
                  bernoulli_only=args.bernoulli_only)
    for item in stream:
        if isinstance(item, ScanFault):
            faults += 1
            print(f"FAULT {item.kind} p={item.p}: {item.message}",
                  file=sys.stderr)
            continue
        primes += 1
        if item.i_p == 0:
            continue
        irregular += 1
        ks = " ".join(str(k) for k, v in item.certificate.pairs if v == 0)
        print(f"p={item.p} i_p={item.i_p} k: {ks}")
        for line in item.discoveries:
            discoveries += 1
            print(line)
        for k in item.unsupported_lambda:
            print(f"UNSUPPORTED lambda p={item.p} k={k}:"
                  f" 2^k = 1 mod p, alternate test required")
    print(f"scanned [{args.lo}, {args.hi}): {primes} primes,"
          f" {irregular} irregular, {faults} faults,"
          f" {discoveries} discoveries")
    if faults:
        return _EXIT_FAULT
    if discoveries:
        return _EXIT_DISCOVERY
    return _EXIT_OK


def _cmd_verify(args) -> int:
    report = verify_certificate(args.file, sample=args.sample, seed=args.seed)
    for miss in report.mismatches:
        where = f"line {miss.line} p={miss.p}"
        if miss.k is not None:
            where += f" k={miss.k}"
        print(f"MISMATCH {where}: {miss.reason}"
              f" (recorded {miss.recorded}, recomputed {miss.recomputed})")
    print(f"verified {report.pairs_checked} pairs across"
          f" {report.lines_read} lines ({report.mode}):"
          f" {len(report.mismatches)} mismatches")
    return _EXIT_OK if report.ok else _EXIT_FAULT


def _cmd_vandiver(args) -> int:
    failed = 0
    for p, k in _require_pair_args("vandiver", args):
        res = vandiver_test(p, k)
        print(f"p={res.p} k={res.k} q={res.q} z={res.z} v={res.v}"
              f" passed={res.passed}")
        if not res.passed:
            failed += 1
            print(f"DISCOVERY vandiver p={res.p} k={res.k} q={res.q}"
                  f" z={res.z} v={res.v}")
    return _EXIT_DISCOVERY if failed else _EXIT_OK


def _cmd_lambda(args) -> int:
    by_p: dict[int, list[int]] = {}
    for p, k in _require_pair_args("lambda", args):
        by_p.setdefault(p, []).append(k)
    failed = 0
    for p, ks in by_p.items():
        summary = lambda_verdict(p, ks)
        for res in summary.results:
            print(f"p={res.p} k={res.k} test1={res.test1}"
                  f" test2={res.test2} test3={res.test3}")
            if not res.supported:
                print(f"UNSUPPORTED lambda p={res.p} k={res.k}:"
                      f" 2^k = 1 mod p, alternate test required")
            elif not (res.test2 and res.test3):
                failed += 1
                print(f"DISCOVERY lambda p={res.p} k={res.k}"
                      f" test2={res.test2} test3={res.test3}")
        verdict = {True: "lambda = i_p", False: "FAILED",
                   None: "inconclusive"}[summary.verdict]
        print(f"p={p} verdict: {verdict}")
    return _EXIT_DISCOVERY if failed else _EXIT_OK


def _cmd_bernoulli(args) -> int:
    ctx = FieldCtx.for_prime(args.p)
    if args.k is not None:
        print(f"B_{args.k} = {bernoulli_single(ctx, args.k)} (mod {args.p})")
        return _EXIT_OK
    table = bernoulli_all_voronoi(ctx)
    for half_k, value in enumerate(table.values):
        print(f"{2 * half_k}:{value}")
    return _EXIT_OK


def _cmd_stats(args) -> int:
    table = stats(args.file)
    print(f"certificate bound: {table.bound}")
    print(f"primes: {table.total}")
    print(f"{'i':>2} {'N_i':>9} {'N_i/N':>9} {'p_i':>11} {'N*p_i':>12}")
    for row in table.rows:
        print(f"{row.index:>2} {row.count:>9} {row.ratio:>9.4f}"
              f" {row.poisson:>11.8f} {row.expected:>12.2f}")
    print(f"expected Vandiver counterexamples (sum of i_p/p):"
          f" {table.expected_counterexamples:.6f}")
    return _EXIT_OK


def main(argv=None) -> int:
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse help (0) or a usage error routed through _Parser (1)
        return exc.code if isinstance(exc.code, int) else _EXIT_USAGE
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"bernmod: format error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except CrossCheckFault as exc:
        print(f"bernmod: cross-check fault: {exc}", file=sys.stderr)
        return _EXIT_FAULT
    except (BernmodError, ValueError, OSError) as exc:
        print(f"bernmod: error: {exc}", file=sys.stderr)
        return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
