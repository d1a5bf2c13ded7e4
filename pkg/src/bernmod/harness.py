"""Scan orchestration and certificate I/O.

A scan walks every prime in [lo, hi) through the pipeline: Bernoulli
table by one or both methods (both must agree), the weighted checksum
identity, irregular-pair extraction, the certificate of smallest
residues, and (unless running bernoulli-only) the Vandiver and lambda
tests per irregular pair.  Workers may finish out of order; records are
released strictly in ascending p, so output files are identical for
every worker count.

A cross-check failure (method disagreement, checksum failure, scheme
disagreement) is fatal for that prime only: it is logged, surfaced as a
ScanFault in the stream, writes nothing to the certificate, and the
scan continues.  A failed Vandiver or lambda test is not a fault; the
record carries it as a discovery.

Certificate files are ASCII, line-oriented, bit-exact:

    #bernmod-cert v1 <lo> <hi>
    <p> <i_p> <N_p> <k1>:<v1> <k2>:<v2> ...

with pairs sorted by (value, k) and single-space separators.  Checkpoint
files record the scan configuration, the last completed prime, and the
output byte offset; they are rewritten atomically so that resuming an
interrupted scan reproduces the uninterrupted output byte for byte.
"""

from __future__ import annotations

import logging
import math
import os
import random
import tempfile
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Iterator

import numpy as np

from .bernoulli import (
    BernoulliTable,
    CertificatePairs,
    _floor_2ln,
    bernoulli_all_powerseries,
    bernoulli_all_voronoi,
    bernoulli_single,
    certificate_pairs,
    consistency_check,
    irregular_pairs,
)
from .errors import (
    BernmodError,
    ConsistencyFailure,
    CrossCheckFault,
    FormatError,
    MethodDisagreement,
)
from .iwasawa import LambdaSummary, lambda_verdict
from .modarith import FieldCtx, primes_in_range
from .vandiver import VandiverResult, vandiver_test

__all__ = [
    "PrimeRecord",
    "ScanFault",
    "CertLine",
    "Mismatch",
    "VerifyReport",
    "StatsRow",
    "StatsTable",
    "Checkpoint",
    "scan",
    "format_certificate_line",
    "parse_certificate_line",
    "read_certificate",
    "verify_certificate",
    "stats",
    "save_checkpoint",
    "load_checkpoint",
]

logger = logging.getLogger(__name__)

_CERT_MAGIC = "#bernmod-cert"
_CKPT_MAGIC = "#bernmod-ckpt"
_VERSION = "v1"
_METHODS = ("voronoi", "power_series", "both")

# Primes processed between checkpoint flushes.
_DEFAULT_BATCH = 64


@dataclass(frozen=True)
class PrimeRecord:
    """Everything the scan established about one prime."""

    p: int
    i_p: int
    certificate: CertificatePairs
    consistency_ok: bool
    vandiver: tuple[VandiverResult, ...]
    lambda_summary: LambdaSummary | None

    def __post_init__(self) -> None:
        if not self.consistency_ok:
            raise ValueError("records exist only for consistent tables")
        if self.certificate.p != self.p:
            raise ValueError("certificate belongs to a different prime")
        zeros = sum(1 for _, value in self.certificate.pairs if value == 0)
        if min(self.i_p, len(self.certificate.pairs)) != zeros:
            raise ValueError("irregular count does not match the certificate")
        if self.lambda_summary is None:
            if self.vandiver:
                raise ValueError("bernoulli-only records carry no pair results")
        else:
            if self.lambda_summary.p != self.p:
                raise ValueError("lambda summary belongs to a different prime")
            if len(self.vandiver) != self.i_p:
                raise ValueError("need one Vandiver result per irregular pair")
            if len(self.lambda_summary.results) != self.i_p:
                raise ValueError("need one lambda result per irregular pair")

    @property
    def discoveries(self) -> tuple[str, ...]:
        """Machine-readable lines for failed Vandiver or lambda tests."""
        lines = []
        for res in self.vandiver:
            if not res.passed:
                lines.append(
                    f"DISCOVERY vandiver p={res.p} k={res.k}"
                    f" q={res.q} z={res.z} v={res.v}"
                )
        if self.lambda_summary is not None:
            for res in self.lambda_summary.results:
                if res.supported and not (res.test2 and res.test3):
                    lines.append(
                        f"DISCOVERY lambda p={res.p} k={res.k}"
                        f" test2={res.test2} test3={res.test3}"
                    )
        return tuple(lines)

    @property
    def unsupported_lambda(self) -> tuple[int, ...]:
        """Irregular indices whose lambda tests need the alternate form."""
        if self.lambda_summary is None:
            return ()
        return tuple(
            res.k for res in self.lambda_summary.results if not res.supported
        )


@dataclass(frozen=True)
class ScanFault:
    """A cross-check failure at one prime; the scan skipped it."""

    p: int
    kind: str
    message: str


def _method_table(ctx: FieldCtx, method: str):
    if ctx.p == 3:
        # degenerate table {B_0 = 1}: no testable index, nothing to compare
        label = "power_series" if method == "power_series" else "voronoi"
        return BernoulliTable(p=3, values=np.array([1], dtype=np.int64),
                              method=label)
    if method == "voronoi":
        return bernoulli_all_voronoi(ctx)
    if method == "power_series":
        return bernoulli_all_powerseries(ctx)
    table = bernoulli_all_voronoi(ctx)
    other = bernoulli_all_powerseries(ctx)
    if table != other:
        bad = np.flatnonzero(table.values != other.values)
        raise MethodDisagreement(
            f"p={ctx.p}: methods differ at {bad.size} entries,"
            f" first k={2 * int(bad[0])}"
        )
    return table


def _process_prime(p: int, method: str, bernoulli_only: bool):
    """Full pipeline for one prime; faults become ScanFault values."""
    p = int(p)
    try:
        ctx = FieldCtx.for_prime(p)
        table = _method_table(ctx, method)
        if not consistency_check(table):
            raise ConsistencyFailure(f"p={p}: weighted checksum identity failed")
        pairs = irregular_pairs(table)
        cert = certificate_pairs(table)
        if bernoulli_only:
            vandiver_results: tuple[VandiverResult, ...] = ()
            lam = None
        else:
            vandiver_results = tuple(
                vandiver_test(pair.p, pair.k) for pair in pairs
            )
            lam = lambda_verdict(p, [pair.k for pair in pairs])
        return PrimeRecord(
            p=p,
            i_p=len(pairs),
            certificate=cert,
            consistency_ok=True,
            vandiver=vandiver_results,
            lambda_summary=lam,
        )
    except CrossCheckFault as exc:
        return ScanFault(p=p, kind=type(exc).__name__, message=str(exc))


def format_certificate_line(p: int, i_p: int,
                            pairs: tuple[tuple[int, int], ...]) -> str:
    fields = [str(p), str(i_p), str(len(pairs))]
    fields.extend(f"{k}:{v}" for k, v in pairs)
    return " ".join(fields) + "\n"


def parse_certificate_line(text: str) -> tuple[int, int, int, tuple]:
    """Inverse of format_certificate_line; raises FormatError."""
    if not text.endswith("\n"):
        raise FormatError("missing trailing newline")
    fields = text[:-1].split(" ")
    if len(fields) < 3 or "" in fields:
        raise FormatError("expected 'p i_p N_p k:v ...' with single spaces")
    try:
        p, i_p, count = int(fields[0]), int(fields[1]), int(fields[2])
    except ValueError as exc:
        raise FormatError(f"bad integer field: {exc}") from None
    if min(p, i_p, count) < 0:
        raise FormatError("negative field")
    pairs = []
    for chunk in fields[3:]:
        k, sep, v = chunk.partition(":")
        if not sep:
            raise FormatError(f"pair {chunk!r} is not k:v")
        try:
            pairs.append((int(k), int(v)))
        except ValueError:
            raise FormatError(f"pair {chunk!r} is not k:v") from None
    if count != len(pairs):
        raise FormatError(f"line declares {count} pairs, carries {len(pairs)}")
    ordered = sorted(pairs, key=lambda kv: (kv[1], kv[0]))
    if pairs != ordered or len(set(pairs)) != len(pairs):
        raise FormatError("pairs are not sorted by (value, k)")
    return p, i_p, count, tuple(pairs)


@dataclass(frozen=True)
class CertLine:
    number: int
    p: int
    i_p: int
    count: int
    pairs: tuple[tuple[int, int], ...]


def read_certificate(path) -> tuple[tuple[int, int], list[CertLine]]:
    """Parse a certificate file: ((lo, hi), lines), strictly validated."""
    lines: list[CertLine] = []
    with open(path, "r", encoding="ascii", newline="") as fh:
        header = fh.readline()
        parts = header.rstrip("\n").split(" ")
        if (
            len(parts) != 4
            or parts[0] != _CERT_MAGIC
            or parts[1] != _VERSION
            or not header.endswith("\n")
        ):
            raise FormatError(f"bad header {header!r}", line=1)
        try:
            lo, hi = int(parts[2]), int(parts[3])
        except ValueError:
            raise FormatError(f"bad header range {header!r}", line=1) from None
        last_p = 0
        for number, raw in enumerate(fh, 2):
            try:
                p, i_p, count, pairs = parse_certificate_line(raw)
            except FormatError as exc:
                raise FormatError(str(exc), line=number) from None
            if not lo <= p < hi:
                raise FormatError(f"p={p} outside [{lo}, {hi})", line=number)
            if p <= last_p:
                raise FormatError(f"p={p} not ascending", line=number)
            last_p = p
            lines.append(CertLine(number, p, i_p, count, pairs))
    return (lo, hi), lines


@dataclass(frozen=True)
class Mismatch:
    line: int
    p: int
    k: int | None
    recorded: int | None
    recomputed: int | None
    reason: str


@dataclass(frozen=True)
class VerifyReport:
    mode: str
    lines_read: int
    pairs_checked: int
    mismatches: tuple[Mismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_certificate(path, *, sample: int | None = None,
                       seed: int = 0) -> VerifyReport:
    """Recompute recorded values along an independent single-index path.

    sample=None checks every pair of every line plus the per-line
    structural counts; sample=n draws n pairs without replacement,
    reproducibly for a fixed seed.
    """
    (_, _), lines = read_certificate(path)
    mismatches: list[Mismatch] = []

    if sample is None:
        mode = "all"
        targets = [(ln, k, v) for ln in lines for k, v in ln.pairs]
        for ln in lines:
            expected = min(_floor_2ln(ln.p), max((ln.p - 3) // 2, 0))
            if ln.count != expected:
                mismatches.append(Mismatch(ln.number, ln.p, None, ln.count,
                                           expected, "certificate size"))
            zeros = sum(1 for _, v in ln.pairs if v == 0)
            if min(ln.i_p, ln.count) != zeros:
                mismatches.append(Mismatch(ln.number, ln.p, None, ln.i_p,
                                           zeros, "irregular count"))
    else:
        if sample < 1:
            raise ValueError(f"sample size must be positive, got {sample}")
        mode = f"sample({sample}, seed={seed})"
        population = [(ln, k, v) for ln in lines for k, v in ln.pairs]
        rng = random.Random(seed)
        targets = rng.sample(population, min(sample, len(population)))
        targets.sort(key=lambda t: (t[0].number, t[1]))

    contexts: dict[int, FieldCtx | None] = {}
    for ln, k, v in targets:
        if ln.p not in contexts:
            try:
                contexts[ln.p] = FieldCtx.for_prime(ln.p)
            except ValueError:
                contexts[ln.p] = None
                mismatches.append(Mismatch(ln.number, ln.p, None, None, None,
                                           "p is not an odd prime"))
        ctx = contexts[ln.p]
        if ctx is None:
            continue
        try:
            want = bernoulli_single(ctx, k)
        except BernmodError as exc:
            mismatches.append(Mismatch(ln.number, ln.p, k, v, None,
                                       f"index rejected: {exc}"))
            continue
        if want != v:
            mismatches.append(Mismatch(ln.number, ln.p, k, v, want, "value"))

    mismatches.sort(key=lambda m: (m.line, -1 if m.k is None else m.k))
    return VerifyReport(mode=mode, lines_read=len(lines),
                        pairs_checked=len(targets),
                        mismatches=tuple(mismatches))


@dataclass(frozen=True)
class StatsRow:
    index: int
    count: int
    ratio: float
    poisson: float
    expected: float


@dataclass(frozen=True)
class StatsTable:
    """Observed index-of-irregularity counts against the Poisson model."""

    bound: int
    total: int
    rows: tuple[StatsRow, ...]
    expected_counterexamples: float


def poisson_reference(i: int) -> float:
    """p_i = e^(-1/2) / (2^i i!), the mean-1/2 Poisson mass at i."""
    return math.exp(-0.5) / (2**i * math.factorial(i))


def stats(path) -> StatsTable:
    """Tabulate i_p counts, ratios, and the Poisson reference column."""
    (_, hi), lines = read_certificate(path)
    counts = Counter(line.i_p for line in lines)
    total = len(lines)
    top = max(7, max(counts, default=0))
    rows = []
    for i in range(top + 1):
        p_i = poisson_reference(i)
        n_i = counts.get(i, 0)
        ratio = n_i / total if total else 0.0
        rows.append(StatsRow(index=i, count=n_i, ratio=ratio,
                             poisson=p_i, expected=total * p_i))
    expected_cx = sum(line.i_p / line.p for line in lines)
    return StatsTable(bound=hi, total=total, rows=tuple(rows),
                      expected_counterexamples=expected_cx)


@dataclass(frozen=True)
class Checkpoint:
    lo: int
    hi: int
    method: str
    bernoulli_only: bool
    last_p: int
    out_offset: int


def save_checkpoint(path, ck: Checkpoint) -> None:
    """Atomic rewrite: temp file in the same directory, then rename."""
    body = (
        f"{_CKPT_MAGIC} {_VERSION}\n"
        f"lo {ck.lo}\n"
        f"hi {ck.hi}\n"
        f"method {ck.method}\n"
        f"bernoulli_only {int(ck.bernoulli_only)}\n"
        f"last_p {ck.last_p}\n"
        f"out_offset {ck.out_offset}\n"
    )
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".bernmod-ckpt-")
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
            fh.write(body)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_checkpoint(path) -> Checkpoint:
    with open(path, "r", encoding="ascii", newline="") as fh:
        first = fh.readline().rstrip("\n")
        if first != f"{_CKPT_MAGIC} {_VERSION}":
            raise FormatError(f"bad checkpoint header {first!r}", line=1)
        fields: dict[str, str] = {}
        for number, raw in enumerate(fh, 2):
            parts = raw.rstrip("\n").split(" ")
            if len(parts) != 2:
                raise FormatError(f"bad checkpoint field {raw!r}", line=number)
            fields[parts[0]] = parts[1]
    want = ("lo", "hi", "method", "bernoulli_only", "last_p", "out_offset")
    if set(fields) != set(want):
        raise FormatError(f"checkpoint fields {sorted(fields)} != {sorted(want)}")
    if fields["method"] not in _METHODS:
        raise FormatError(f"unknown method {fields['method']!r}")
    try:
        return Checkpoint(
            lo=int(fields["lo"]),
            hi=int(fields["hi"]),
            method=fields["method"],
            bernoulli_only=fields["bernoulli_only"] == "1",
            last_p=int(fields["last_p"]),
            out_offset=int(fields["out_offset"]),
        )
    except ValueError as exc:
        raise FormatError(f"bad checkpoint integer: {exc}") from None


def scan(lo: int, hi: int, *, method: str = "both", workers: int = 1,
         out=None, checkpoint=None, bernoulli_only: bool = False,
         batch_size: int = _DEFAULT_BATCH,
         _stop_after_p: int | None = None) -> Iterator[PrimeRecord | ScanFault]:
    """Stream PrimeRecord (or ScanFault) for every prime in [lo, hi).

    `out` receives certificate lines, `checkpoint` the resume state; both
    are optional.  When the checkpoint file already exists the scan
    validates it against the arguments, truncates the output to the
    recorded offset, and continues after the last completed prime, which
    reproduces an uninterrupted run byte for byte.  `_stop_after_p`
    (tests only) ends the scan at the first checkpoint flush at or past
    that prime, simulating an interruption.
    """
    if not 3 <= lo < hi:
        raise ValueError(f"need 3 <= lo < hi, got ({lo}, {hi})")
    if hi > 2**31:
        raise ValueError(f"hi must stay below 2^31, got {hi}")
    if method not in _METHODS:
        raise ValueError(f"method must be one of {_METHODS}, got {method!r}")
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    if batch_size < 1:
        raise ValueError(f"batch size must be >= 1, got {batch_size}")

    resume_from = 0
    resume_offset: int | None = None
    if checkpoint is not None and os.path.exists(checkpoint):
        ck = load_checkpoint(checkpoint)
        config = (ck.lo, ck.hi, ck.method, ck.bernoulli_only)
        if config != (lo, hi, method, bernoulli_only):
            raise FormatError(
                f"checkpoint was written by a different scan: {ck}"
            )
        resume_from = ck.last_p
        resume_offset = ck.out_offset

    primes = [int(p) for p in primes_in_range(lo, hi) if p > resume_from]

    header = f"{_CERT_MAGIC} {_VERSION} {lo} {hi}\n".encode("ascii")
    fh = None
    try:
        if out is not None:
            if resume_offset is None:
                fh = open(out, "wb")
                fh.write(header)
            else:
                if not os.path.exists(out):
                    raise FormatError("checkpoint names a missing output file")
                fh = open(out, "r+b")
                if fh.seek(0, os.SEEK_END) < resume_offset:
                    raise FormatError(
                        "output file is shorter than the checkpoint offset"
                    )
                fh.seek(0)
                if fh.read(len(header)) != header:
                    raise FormatError("output header does not match this scan")
                fh.truncate(resume_offset)
                fh.seek(resume_offset)

        worker = partial(_process_prime, method=method,
                         bernoulli_only=bernoulli_only)

        def drive(results) -> Iterator[PrimeRecord | ScanFault]:
            last_p = resume_from
            pending = 0

            def flush() -> None:
                if fh is not None:
                    fh.flush()
                if checkpoint is not None:
                    save_checkpoint(checkpoint, Checkpoint(
                        lo=lo, hi=hi, method=method,
                        bernoulli_only=bernoulli_only, last_p=last_p,
                        out_offset=fh.tell() if fh is not None else 0,
                    ))

            for item in results:
                if isinstance(item, ScanFault):
                    logger.error("cross-check fault at p=%d (%s): %s",
                                 item.p, item.kind, item.message)
                elif fh is not None:
                    line = format_certificate_line(
                        item.p, item.i_p, item.certificate.pairs
                    )
                    fh.write(line.encode("ascii"))
                last_p = item.p
                pending += 1
                yield item
                if pending >= batch_size:
                    flush()
                    pending = 0
                    if _stop_after_p is not None and last_p >= _stop_after_p:
                        return
            flush()

        if workers == 1:
            yield from drive(map(worker, primes))
        else:
            chunk = max(1, min(16, len(primes) // (4 * workers) or 1))
            with ProcessPoolExecutor(max_workers=workers) as pool:
                yield from drive(pool.map(worker, primes, chunksize=chunk))
    finally:
        if fh is not None:
            fh.close()
