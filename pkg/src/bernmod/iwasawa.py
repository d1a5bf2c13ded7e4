"""Cyclotomic lambda-invariant checks for irregular pairs.

For an irregular pair (p, k), three non-congruences built from the
half-range power sums

    S(e) = sum_{a=1}^{(p-1)/2} a^e   (mod p^2)

are sufficient to pin the lambda-invariant: if for every irregular index
k of p we have

    test1:  2^k != 1           (mod p),
    test2:  S(k-1) != S(p+k-2) (mod p^2),
    test3:  S(k-1) != 0        (mod p^2),

then lambda_p equals the index of irregularity i_p.  The sums encode
consecutive normalized Bernoulli numbers: S(k-1) = (2^(1-k) - 2) B_k / k
and S(p+k-2) = (2^(2-p-k) - 2) B_(p+k-1) / (p+k-1) mod p^2, and test1
makes the two unit factors nonzero (they agree mod p).  So test2 says
the Kummer congruence B_k / k = B_(p+k-1) / (p+k-1) fails mod p^2, and
test3 says B_k != 0 mod p^2.  When 2^k = 1 mod p both factors vanish
mod p, both sums are 0 mod p^2 regardless of the Bernoulli values, and
the tests carry no information; the pair is reported as unsupported
(the literature has a replacement test; it is out of scope here) and
the verdict for p becomes inconclusive rather than false.

A genuinely failed test2 or test3 would be a mathematical discovery and
is an ordinary (negative) result, never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .modarith import is_prime, powmod

__all__ = [
    "LambdaResult",
    "LambdaSummary",
    "power_sum",
    "lambda_tests",
    "lambda_verdict",
]


@dataclass(frozen=True)
class LambdaResult:
    """The three test outcomes for one pair.

    `supported` mirrors test1: when 2^k = 1 mod p the other two tests
    are not evaluated and stay None.
    """

    p: int
    k: int
    test1: bool
    test2: bool | None
    test3: bool | None
    supported: bool

    def __post_init__(self) -> None:
        if self.supported != self.test1:
            raise ValueError("supported must equal test1")
        if self.supported:
            if self.test2 is None or self.test3 is None:
                raise ValueError("supported pairs must evaluate tests 2 and 3")
        elif self.test2 is not None or self.test3 is not None:
            raise ValueError("unsupported pairs must leave tests 2 and 3 unset")

    @property
    def all_passed(self) -> bool:
        return self.supported and bool(self.test2) and bool(self.test3)


@dataclass(frozen=True)
class LambdaSummary:
    """Verdict for one prime over all of its irregular pairs.

    verdict True: every pair supported with all three tests passing, so
    lambda_p = i_p.  None: no test failed but at least one pair was
    unsupported (inconclusive).  False: some supported pair failed
    test2 or test3, a discovery.
    """

    p: int
    verdict: bool | None
    results: tuple[LambdaResult, ...]


def power_sum(p: int, e: int) -> int:
    """S(e) = sum of a^e over a in [1, (p-1)/2], canonical mod p^2.

    Every base is a unit mod p^2 (a < p), so the exponent may be
    reduced mod the group exponent p(p-1); for the exponents the tests
    feed in (at most 2p - 5) the reduction never fires, but it keeps
    the function total for large e.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    psq = p * p
    e %= p * (p - 1)
    return sum(pow(a, e, psq) for a in range(1, (p - 1) // 2 + 1)) % psq


def lambda_tests(p: int, k: int) -> LambdaResult:
    """Evaluate the three non-congruences for one pair.

    Precondition (not checked here): (p, k) is an irregular pair; only
    the structural constraints on k are validated.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if k % 2 != 0 or not 2 <= k <= p - 3:
        raise ValueError(f"index {k} is not an even integer in [2, {p - 3}]")
    test1 = powmod(2 % p, k, p) != 1
    if not test1:
        return LambdaResult(p=p, k=k, test1=False, test2=None, test3=None,
                            supported=False)
    s_low = power_sum(p, k - 1)
    s_high = power_sum(p, p + k - 2)
    test2 = s_low != s_high
    test3 = s_low != 0
    return LambdaResult(p=p, k=k, test1=True, test2=test2, test3=test3,
                        supported=True)


def lambda_verdict(p: int, ks: Iterable[int]) -> LambdaSummary:
    """Combine per-pair tests into the lambda_p = i_p verdict for p.

    `ks` must be all irregular indices of p (an empty iterable gives
    the vacuous True of a regular prime).  A failed test anywhere
    dominates an unsupported pair elsewhere: False beats None.
    """
    results = tuple(lambda_tests(p, k) for k in ks)
    verdict: bool | None = True
    for res in results:
        if res.supported and not (res.test2 and res.test3):
            verdict = False
            break
        if not res.supported:
            verdict = None
    return LambdaSummary(p=p, verdict=verdict, results=results)
