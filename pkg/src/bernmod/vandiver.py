"""Kummer-Vandiver verification for one irregular pair (p, k).

The test: pick the smallest prime q = 1 mod p, build a p-th root of
unity z mod q, form

    V = prod_{c=1}^{(p-1)/2} (z^c - z^{-c})^(c^(p-1-k))   (mod q),

and check V^((q-1)/p) != 1 mod q.  A pass proves Vandiver's conjecture
for p at index k; a failure would be a mathematical discovery and is
reported as a negative result, never an error.

The product is computed by two deliberately separate schemes that share
no loop code.  The sequential scheme walks c = 1, 2, ... directly.  The
pow2 scheme enumerates c = 2^i g^j (g a primitive root mod p), so z^c
advances by squaring and the exponent by a single modular multiplication
per step.  Their agreement is enforced at runtime; a mismatch means a
software or hardware fault, not mathematics.

Exponents c^(p-1-k) are reduced mod p in both schemes.  Any two
exponents that agree mod p give factors differing by a (q-1)-th power
piece that the final ((q-1)/p)-th power kills, so the verdict is
unchanged, and mod p is the only reduction under which the pow2 scheme's
incremental exponent updates are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from .errors import (
    DegenerateFactor,
    SchemeDisagreement,
    SearchExhausted,
)
from .modarith import (
    invmod,
    is_prime,
    multiplicative_order,
    powmod,
    primitive_root,
)

__all__ = [
    "VandiverResult",
    "smallest_q",
    "pth_root_of_unity",
    "vandiver_product_sequential",
    "vandiver_product_pow2",
    "vandiver_test",
]

Scheme = Literal["sequential", "pow2", "both"]

# Defensive cap on the witness search: q stays below _Q_SEARCH_FACTOR * p.
_Q_SEARCH_FACTOR = 10**6


@dataclass(frozen=True)
class VandiverResult:
    """Outcome of the test for one pair, with the full witness tuple.

    `scheme` records how `v` was produced: one of the two schemes alone,
    or "both" when the bundled test ran and enforced their agreement.
    """

    p: int
    k: int
    q: int
    z: int
    v: int
    passed: bool
    scheme: Scheme

    def __post_init__(self) -> None:
        if self.q % self.p != 1 or not is_prime(self.q):
            raise ValueError(f"witness {self.q} is not a prime = 1 mod {self.p}")
        if self.z == 1 or powmod(self.z, self.p, self.q) != 1:
            raise ValueError(f"{self.z} is not a nontrivial {self.p}-th root")
        if not 0 < self.v < self.q:
            raise ValueError(f"product {self.v} is not a unit residue mod {self.q}")
        if self.passed != (powmod(self.v, (self.q - 1) // self.p, self.q) != 1):
            raise ValueError("verdict does not match the recorded product")
        if self.scheme not in ("sequential", "pow2", "both"):
            raise ValueError(f"unknown scheme {self.scheme!r}")


def smallest_q(p: int) -> int:
    """Least prime q = 1 mod p, scanning q = 1 + t*p for t = 1, 2, ...

    t = 1 gives the even number p + 1 and can never hit; it is scanned
    anyway so the loop has no special first case.  Existence is
    guaranteed (Dirichlet); the bound only guards against a broken
    primality test looping forever.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    for t in itertools.count(1):
        q = 1 + t * p
        if q > _Q_SEARCH_FACTOR * p:
            raise SearchExhausted(
                f"no prime q = 1 mod {p} below {_Q_SEARCH_FACTOR * p}"
            )
        if is_prime(q):
            return q
    raise AssertionError("unreachable")


def pth_root_of_unity(p: int, q: int) -> int:
    """A residue of multiplicative order exactly p mod q, with q = 1 mod p.

    Takes z = n^((q-1)/p) for the smallest base n >= 2 with z != 1; then
    z^p = n^(q-1) = 1, and order p follows because p is prime.  Any
    valid root gives the same test verdict, so the smallest-base choice
    is just a determinism convention.
    """
    if q % p != 1 or not is_prime(q):
        raise ValueError(f"{q} is not a prime = 1 mod {p}")
    cofactor = (q - 1) // p
    for n in itertools.count(2):
        z = powmod(n % q, cofactor, q)
        if z != 1:
            return z
    raise AssertionError("unreachable")


def vandiver_product_sequential(p: int, k: int, q: int, z: int) -> int:
    """The product over c = 1 .. (p-1)/2, one factor at a time.

    z^c and z^-c advance by one multiplication per step; the exponent
    c^(p-1-k) mod p is recomputed from scratch for every c, keeping this
    scheme free of the incremental-update machinery the pow2 scheme
    relies on.
    """
    e = p - 1 - k
    zc = 1
    zci = 1
    zinv = invmod(z, q)
    v = 1
    for c in range(1, (p - 1) // 2 + 1):
        zc = zc * z % q
        zci = zci * zinv % q
        base = (zc - zci) % q
        if base == 0:
            raise DegenerateFactor(f"z^{c} - z^-{c} vanished mod {q}")
        v = v * powmod(base, powmod(c, e, p), q) % q
    return v


def vandiver_product_pow2(p: int, k: int, q: int, z: int) -> int:
    """The same product, enumerating c = 2^i g^j mod p.

    With t the order of 2 mod p, the inner index i runs over [0, t) and
    the outer j over [0, (p-1)/t); the powers g^j enumerate the cosets
    of <2>, so each c in [1, p-1] appears exactly once and the factor is
    kept only when its canonical representative lands in [1, (p-1)/2].
    Per inner step the exponent picks up one multiplication by
    2^(p-1-k) and z^c is squared; per outer step one multiplication by
    g^(p-1-k) and one g-th power of z^(g^j).
    """
    e = p - 1 - k
    g = primitive_root(p)
    t = multiplicative_order(2 % p, p)
    step_inner = powmod(2 % p, e, p)
    step_outer = powmod(g, e, p)
    half = (p - 1) // 2
    zinv = invmod(z, q)

    v = 1
    y, yi = z, zinv  # z^(g^j), z^(-g^j)
    cbase = 1  # g^j mod p
    exp_outer = 1  # (g^j)^(p-1-k) mod p
    for _ in range((p - 1) // t):
        x, xi = y, yi  # z^(2^i g^j), z^(-2^i g^j)
        c = cbase
        exp = exp_outer
        for _ in range(t):
            if c <= half:
                base = (x - xi) % q
                if base == 0:
                    raise DegenerateFactor(f"z^{c} - z^-{c} vanished mod {q}")
                v = v * powmod(base, exp, q) % q
            x = x * x % q
            xi = xi * xi % q
            c = 2 * c % p
            exp = exp * step_inner % p
        y = powmod(y, g, q)
        yi = powmod(yi, g, q)
        cbase = cbase * g % p
        exp_outer = exp_outer * step_outer % p
    return v


def vandiver_test(p: int, k: int) -> VandiverResult:
    """Run the full test for one pair: witness, root, both products, verdict.

    The two product schemes must agree exactly; a mismatch raises
    SchemeDisagreement, which callers treat as a fault, never as a
    result.  A failed power test is an ordinary negative result.
    """
    if not is_prime(p) or p < 3:
        raise ValueError(f"{p} is not an odd prime")
    if k % 2 != 0 or not 2 <= k <= p - 3:
        raise ValueError(f"index {k} is not an even integer in [2, {p - 3}]")
    q = smallest_q(p)
    z = pth_root_of_unity(p, q)
    v_seq = vandiver_product_sequential(p, k, q, z)
    v_pow2 = vandiver_product_pow2(p, k, q, z)
    if v_seq != v_pow2:
        raise SchemeDisagreement(
            f"(p={p}, k={k}, q={q}): sequential {v_seq} != pow2 {v_pow2}"
        )
    passed = powmod(v_seq, (q - 1) // p, q) != 1
    return VandiverResult(p=p, k=k, q=q, z=z, v=v_seq, passed=passed, scheme="both")
