"""Bernoulli numbers modulo p, two independent ways.

The route through the multiplicative group evaluates, for every even k,

    B_k = (2k / (1 - g^k)) * sum_i g^((k-1) i) h(g^i)   (mod p)

with h built from the splitting of x/g across the canonical representative
boundary.  Running the sum over i in [0, (p-3)/2] at the root w = g^2
makes it a single discrete Fourier transform of length (p-1)/2, done by
Bluestein's chirp trick as one polynomial product.

The route through the exponential series inverts E(x) = sum x^j/(j+1)!
to precision p-2, so that k! [x^k] (1/E) = B_k, using Newton iteration
with middle products.  The two routes share no code beyond base modular
arithmetic, which is what makes their agreement a meaningful check.

Tables index even k only: values[k//2] = B_k mod p.  B_1 is taken as -1/2;
it never enters the tables (odd k), only the consistency identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_FLOOR, Decimal, localcontext
from typing import Literal

import numpy as np

from .errors import BadRootOrder, IndexOutOfRange, OddIndex
from .modarith import (
    FieldCtx,
    invmod,
    invmod_batch,
    multiplicative_order,
    power_table,
    powmod,
)
from .polyring import ModPoly, mul, series_inverse

__all__ = [
    "BernoulliTable",
    "IrregularPair",
    "CertificatePairs",
    "h_table",
    "bluestein_dft",
    "bernoulli_all_voronoi",
    "bernoulli_all_powerseries",
    "bernoulli_single",
    "consistency_check",
    "irregular_pairs",
    "certificate_pairs",
]

Method = Literal["voronoi", "power_series"]


@dataclass(frozen=True, eq=False)
class BernoulliTable:
    """B_k mod p for even k in [0, p-3]: values[k//2] = B_k."""

    p: int
    values: np.ndarray
    method: Method

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.int64)
        if arr.ndim != 1 or arr.shape[0] != (self.p - 1) // 2:
            raise ValueError(f"table for {self.p} needs {(self.p - 1) // 2} entries")
        if arr[0] != 1:
            raise ValueError("entry for k=0 must be 1")
        if self.method not in ("voronoi", "power_series"):
            raise ValueError(f"unknown method {self.method!r}")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    def __eq__(self, other):
        if not isinstance(other, BernoulliTable):
            return NotImplemented
        # method is provenance, not content
        return self.p == other.p and np.array_equal(self.values, other.values)


@dataclass(frozen=True, order=True)
class IrregularPair:
    """p divides the numerator of B_k: 2 <= k <= p-3, k even."""

    p: int
    k: int

    def __post_init__(self):
        if self.k % 2 or not 2 <= self.k <= self.p - 3:
            raise ValueError(f"index {self.k} invalid for {self.p}")


@dataclass(frozen=True)
class CertificatePairs:
    """The N_p smallest (B_k mod p, k) pairs, smallest residues first.

    Any irregular pair has residue 0 and therefore sorts into the prefix,
    so a scan's irregular findings can be audited from certificates alone.
    """

    p: int
    pairs: tuple[tuple[int, int], ...]  # (k, B_k mod p)


def h_table(ctx: FieldCtx) -> np.ndarray:
    """h(g^i) for i in [0, (p-3)/2], h(x) = (x - g*(x/g mod p))/p + (g-1)/2.

    The difference x - g*(x g^{-1} mod p) is a multiple of p by
    construction, so the division is exact over the integers.
    """
    p, g = ctx.p, ctx.g
    n = (p - 1) // 2
    # shifted[j] = g^(j-1) mod p, so rows j and j+1 are (x/g, x) for x = g^j
    shifted = np.empty(n + 1, dtype=np.int64)
    shifted[0] = invmod(g, p)
    shifted[1:] = power_table(g, n, p)
    diff = shifted[1:] - g * shifted[:-1]
    return (diff // p + (g - 1) * ctx.inv2) % p


def bluestein_dft(c, w: int, p: int) -> np.ndarray:
    """Length-n DFT: out[k] = sum_i c[i] w^(ik) mod p, for w of order n.

    The chirp identity ik = T(i+k) - T(i) - T(k), with T(j) = j(j+1)/2,
    turns the transform into one linear convolution, evaluated through the
    polynomial multiplication stack; exponents of w only matter mod n.
    """
    c = np.asarray(c, dtype=np.int64)
    n = c.shape[0]
    if n < 1:
        raise BadRootOrder("empty transform")
    if multiplicative_order(w, p) != n:
        raise BadRootOrder(f"{w} does not have order {n} mod {p}")
    wpow = power_table(w, n, p)
    tri = np.arange(2 * n - 1, dtype=np.int64)
    tri = (tri * (tri + 1) // 2) % n
    chirp_down = wpow[(-tri[:n]) % n]
    a = c * chirp_down % p
    b = wpow[tri]
    conv = mul(ModPoly(p, a[::-1].copy()), ModPoly(p, b)).coeffs
    return conv[n - 1 : 2 * n - 1] * chirp_down % p


def _require_table_prime(p):
    if p < 5:
        raise ValueError(f"need p >= 5, got {p}")


def bernoulli_all_voronoi(ctx: FieldCtx) -> BernoulliTable:
    """Full table via the multiplicative-group sum at root w = g^2.

    With c_i = h(g^i) g^{-i}, the transform value at w^kappa is the sum
    for k = 2*kappa, and the prefactor 2k/(1 - g^k) is batch-inverted.
    """
    p, g = ctx.p, ctx.g
    _require_table_prime(p)
    n = (p - 1) // 2
    h = h_table(ctx)
    ginv_pow = power_table(invmod(g, p), n, p)
    hat = bluestein_dft(h * ginv_pow % p, powmod(g, 2, p), p)
    k = np.arange(1, n, dtype=np.int64) * 2
    g_to_k = power_table(powmod(g, 2, p), n, p)[1:]
    denom_inv = invmod_batch((p + 1 - g_to_k) % p, p)
    values = np.empty(n, dtype=np.int64)
    values[0] = 1
    values[1:] = (2 * k % p) * denom_inv % p * hat[1:] % p
    return BernoulliTable(p, values, "voronoi")


def _factorials(upto: int, p: int) -> np.ndarray:
    """j! mod p for j in [0, upto], by a doubling prefix-product scan."""
    vals = np.arange(upto + 1, dtype=np.int64)
    vals[0] = 1
    shift = 1
    while shift <= upto:
        vals[shift:] = vals[shift:] * vals[:-shift] % p
        shift <<= 1
    return vals


def bernoulli_all_powerseries(ctx: FieldCtx) -> BernoulliTable:
    """Full table by inverting E(x) = sum_j x^j / (j+1)! to order p-2.

    1/E is the exponential generating function x/(e^x - 1) of the
    Bernoulli numbers, so B_k = k! [x^k] (1/E); every factorial up to
    (p-2)! is a unit mod p.
    """
    p = ctx.p
    _require_table_prime(p)
    fact = _factorials(p - 2, p)
    series = ModPoly(p, invmod_batch(fact[1:], p))
    inverse = series_inverse(series, p - 2).coeffs
    even = np.arange(0, p - 2, 2, dtype=np.int64)
    values = fact[even] * inverse[even] % p
    return BernoulliTable(p, values, "power_series")


def bernoulli_single(ctx: FieldCtx, k: int) -> int:
    """B_k mod p by direct accumulation of the length-(p-1)/2 sum.

    Kept deliberately separate from the table pipeline (no shared h or
    transform code) so certificate verification is an independent path.
    """
    p, g = ctx.p, ctx.g
    if not 2 <= k <= p - 3:
        raise IndexOutOfRange(f"index {k} outside [2, {p - 3}]")
    if k % 2:
        raise OddIndex(f"index {k} is odd")
    n = (p - 1) // 2
    gpow = np.empty(n + 1, dtype=np.int64)
    gpow[0] = invmod(g, p)
    gpow[1:] = power_table(g, n, p)
    h = ((gpow[1:] - g * gpow[:-1]) // p + (g - 1) * ctx.inv2) % p
    ratio_pow = power_table(powmod(g, k - 1, p), n, p)
    total = int(np.sum(h * ratio_pow % p)) % p
    scale = 2 * k % p * invmod((p + 1 - powmod(g, k, p)) % p, p) % p
    return scale * total % p


def consistency_check(table: BernoulliTable) -> bool:
    """Test sum_{k=0}^{p-3} 2^k (k+1) B_k = -4 mod p against the table.

    Odd k contribute only k=1, where B_1 = -1/2 gives exactly -2; so the
    even-k table must sum to -2.  A single corrupted entry flips the
    verdict because its coefficient 2^k (k+1) is a unit.  For p = 3 the
    sum has no k=1 term and the identity does not apply; vacuously true.
    """
    p = table.p
    if p == 3:
        return True
    n = (p - 1) // 2
    four_pow = power_table(4 % p, n, p)
    weights = np.arange(1, p - 1, 2, dtype=np.int64) % p
    total = int(np.sum(four_pow * weights % p * table.values % p)) % p
    return total == (p - 2) % p


def irregular_pairs(table: BernoulliTable) -> list[IrregularPair]:
    """All even k in [2, p-3] with B_k = 0 mod p, ascending."""
    zeros = np.flatnonzero(table.values[1:] == 0)
    return [IrregularPair(table.p, int(2 * (i + 1))) for i in zeros]


def _floor_2ln(p: int) -> int:
    with localcontext() as ctx:
        ctx.prec = 50
        doubled = 2 * Decimal(p).ln()
        return int(doubled.to_integral_value(rounding=ROUND_FLOOR))


def certificate_pairs(table: BernoulliTable) -> CertificatePairs:
    """The N_p = min(floor(2 ln p), (p-3)/2) smallest (value, k) pairs.

    Sorted ascending by residue, ties by k; irregular pairs (residue 0)
    always occupy the prefix.  k = 0 is excluded: the cap (p-3)/2 counts
    exactly the even k in [2, p-3].
    """
    p = table.p
    count = min(_floor_2ln(p), (p - 3) // 2)
    k = np.arange(1, (p - 1) // 2, dtype=np.int64) * 2
    values = table.values[1:]
    order = np.lexsort((k, values))[:count]
    pairs = tuple((int(k[i]), int(values[i])) for i in order)
    return CertificatePairs(p, pairs)
