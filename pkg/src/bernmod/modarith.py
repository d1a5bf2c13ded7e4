"""Exact modular arithmetic: residues, primitive roots, multiplicative
orders, deterministic primality, and segmented prime enumeration.

All functions work on canonical residues (integers in [0, m)); negative or
out-of-range inputs are rejected rather than silently reduced.  The
vectorized helpers (`power_table`, `invmod_batch`) additionally require
m < 2**31 so that a product of two residues fits in a signed 64-bit
intermediate.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

import numpy as np

from .errors import NotInvertible, ZeroResidue

__all__ = [
    "FieldCtx",
    "Residue",
    "powmod",
    "invmod",
    "primitive_root",
    "multiplicative_order",
    "is_prime",
    "primes_in_range",
    "power_table",
    "invmod_batch",
]

# Canonical residue: a plain int in [0, m) for an explicit modulus m.
Residue = int

# Deterministic Miller-Rabin witness set for n < 3.3 * 10**24 (covers 2**64).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Each sieve segment covers 2 * _SEGMENT_ODDS integers (8 MiB of flags).
_SEGMENT_ODDS = 1 << 22

_VECTOR_MODULUS_LIMIT = 1 << 31


def _as_int(value) -> int:
    """Coerce exact integer types (including numpy scalars) to int."""
    return operator.index(value)


def _check_modulus(m: int) -> None:
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")


def _check_residue(a: int, m: int) -> None:
    if not 0 <= a < m:
        raise ValueError(f"residue {a} is not canonical for modulus {m}")


def powmod(a: Residue, e: int, m: int) -> Residue:
    """Return a**e mod m by square-and-multiply; e = 0 gives 1 mod m."""
    a, e, m = _as_int(a), _as_int(e), _as_int(m)
    _check_modulus(m)
    _check_residue(a, m)
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    return pow(a, e, m)


def invmod(a: Residue, m: int) -> Residue:
    """Return the b in [0, m) with a*b = 1 mod m.

    Raises NotInvertible when gcd(a, m) > 1.
    """
    a, m = _as_int(a), _as_int(m)
    _check_modulus(m)
    _check_residue(a, m)
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NotInvertible(f"{a} is not invertible modulo {m}") from None


def _distinct_prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division (n < 2**62 or so)."""
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def primitive_root(p: int) -> Residue:
    """Smallest g >= 2 generating (Z/pZ)*, certified via the factors of p-1."""
    p = _as_int(p)
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    factors = _distinct_prime_factors(p - 1)
    g = 2
    while True:
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in factors):
            return g
        g += 1


def multiplicative_order(a: Residue, p: int) -> int:
    """Least t >= 1 with a**t = 1 mod p, from the factorization of p-1."""
    a, p = _as_int(a), _as_int(p)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    _check_residue(a, p)
    if a == 0:
        raise ZeroResidue("0 has no multiplicative order")
    t = p - 1
    for ell in _distinct_prime_factors(p - 1):
        while t % ell == 0 and pow(a, t // ell, p) == 1:
            t //= ell
    return t


def is_prime(n: int) -> bool:
    """Deterministic primality for all n below 2**64 (Miller-Rabin)."""
    n = _as_int(n)
    if n < 0:
        raise ValueError("is_prime expects a nonnegative integer")
    if n < 2:
        return False
    for small in _MR_WITNESSES:
        if n % small == 0:
            return n == small
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit, dense Eratosthenes (used for base primes only)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if flags[q]:
            flags[q * q :: q] = False
    return np.flatnonzero(flags).astype(np.int64)


def primes_in_range(lo: int, hi: int) -> np.ndarray:
    """Ascending primes p with lo <= p < hi, by segmented odd-only sieve.

    Working memory is bounded by the fixed segment size regardless of
    hi - lo; only the result array grows with the range.
    """
    lo, hi = _as_int(lo), _as_int(hi)
    if not 2 <= lo <= hi:
        raise ValueError(f"need 2 <= lo <= hi, got ({lo}, {hi})")
    chunks = []
    if lo <= 2 < hi:
        chunks.append(np.array([2], dtype=np.int64))
    base = _simple_sieve(math.isqrt(max(hi - 1, 0)))
    odd_base = base[1:] if base.size else base
    low = max(lo, 3)
    if low % 2 == 0:
        low += 1
    while low < hi:
        high = min(low + 2 * _SEGMENT_ODDS, hi)
        count = (high - low + 1) // 2
        mask = np.ones(count, dtype=bool)
        for q in odd_base:
            q = int(q)
            if q * q >= high:
                break
            start = max(q * q, ((low + q - 1) // q) * q)
            if start % 2 == 0:
                start += q
            if start < high:
                mask[(start - low) // 2 :: q] = False
        hits = np.flatnonzero(mask)
        if hits.size:
            chunks.append(low + 2 * hits)
        low = high if high % 2 == 1 else high + 1
    if not chunks:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(chunks)


@dataclass(frozen=True)
class FieldCtx:
    """An odd prime p with its smallest primitive root g and inv2 = (p+1)/2.

    Immutable after construction and safe to share across workers.
    """

    p: int
    g: int
    inv2: int

    @classmethod
    def for_prime(cls, p: int) -> "FieldCtx":
        p = _as_int(p)
        if p < 3 or not is_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        return cls(p=p, g=primitive_root(p), inv2=(p + 1) // 2)


def power_table(base: Residue, n: int, m: int) -> np.ndarray:
    """[base**0, ..., base**(n-1)] mod m as int64, built by doubling."""
    base, n, m = _as_int(base), _as_int(n), _as_int(m)
    _check_modulus(m)
    if m > _VECTOR_MODULUS_LIMIT:
        raise ValueError(f"modulus {m} too large for int64 vector arithmetic")
    _check_residue(base, m)
    if n <= 0:
        return np.zeros(0, dtype=np.int64)
    table = np.array([1 % m], dtype=np.int64)
    step = base % m
    while table.size < n:
        table = np.concatenate([table, table * step % m])
        step = step * step % m
    return table[:n]


def invmod_batch(values: np.ndarray, m: int) -> np.ndarray:
    """Inverse of every entry mod m, in O(log n) vectorized passes.

    Every entry must be invertible; a single bad entry poisons the running
    product and raises NotInvertible.
    """
    m = _as_int(m)
    _check_modulus(m)
    if m > _VECTOR_MODULUS_LIMIT:
        raise ValueError(f"modulus {m} too large for int64 vector arithmetic")
    a = np.asarray(values, dtype=np.int64)
    if a.size == 0:
        return a.copy()
    if a.min() < 1 or a.max() >= m:
        raise ValueError("entries must be canonical nonzero residues")
    prefix = a.copy()
    suffix = a.copy()
    shift = 1
    while shift < a.size:
        prefix[shift:] = prefix[shift:] * prefix[:-shift] % m
        suffix[:-shift] = suffix[:-shift] * suffix[shift:] % m
        shift *= 2
    inv_total = invmod(int(prefix[-1]), m)
    left = np.empty_like(a)
    right = np.empty_like(a)
    left[0] = 1
    left[1:] = prefix[:-1]
    right[-1] = 1
    right[:-1] = suffix[1:]
    return left * right % m * inv_total % m
