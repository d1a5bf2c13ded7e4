"""Dense polynomial arithmetic over Z/mZ with interchangeable multipliers.

Three multiplication routes, each correct on its own: schoolbook
convolution, Kronecker substitution through one big-integer product, and
a split-into-chunks FFT over a negacyclic ring.  `mul` dispatches on size;
the routes cross-check each other in tests.  On top of multiplication sit
the transposed middle product and Newton series inversion, which are what
the Bernoulli pipeline actually consumes.

Coefficients are canonical residues in int64 arrays; moduli fit in 31
bits so products fit in int64.  Routines that divide by two (the FFT
route, the transform-based middle product) require an odd modulus.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import transforms
from .errors import (
    LengthMismatch,
    ModulusMismatch,
    NonInvertibleLeadingTerm,
    NotInvertible,
)
from .modarith import invmod
from .transforms import (
    NegacyclicElem,
    negacyclic_mul,
    tft_forward,
    tft_inverse,
    tft_transposed,
)

__all__ = [
    "ModPoly",
    "NegacyclicElem",
    "SchonhageParams",
    "SCHOOLBOOK_MAX",
    "KRONECKER_MAX",
    "MIDDLE_TRANSFORM_MIN",
    "mul",
    "mul_schoolbook",
    "mul_kronecker",
    "mul_schonhage",
    "schonhage_params",
    "negacyclic_mul",
    "tft_forward",
    "tft_inverse",
    "tft_transposed",
    "middle_product",
    "series_inverse",
]

# Dispatch thresholds on max(len(f), len(g)), pinned by measurement on the
# build machine (see tests/test_polyring.py for the agreement sweeps).
# Schoolbook wins below ~24.  The big-integer backend is itself FFT-based,
# so the Kronecker route stays ahead of the in-process FFT route at every
# size that fits in memory here; None leaves its band unbounded.
SCHOOLBOOK_MAX = 24
KRONECKER_MAX: int | None = None

# Length at which middle products and Newton steps switch to the transposed
# transform pipeline.  Measured: a sliced Kronecker product wins at every
# feasible size on this machine, so the band is empty by default; tests and
# callers can force the transform path by passing transform_min explicitly.
MIDDLE_TRANSFORM_MIN: int | None = None


@dataclass(frozen=True, eq=False)
class ModPoly:
    """Coefficient vector over Z/mZ, constant term first.

    Lengths are significant for the transform routines, so trailing zeros
    are preserved; equality compares values, ignoring trailing zeros.
    """

    modulus: int
    coeffs: np.ndarray

    def __post_init__(self):
        if not 2 <= self.modulus < 1 << 31:
            raise ValueError(f"modulus must be in [2, 2**31), got {self.modulus}")
        arr = np.asarray(self.coeffs, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= self.modulus):
            raise ValueError("coefficients must be canonical residues")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def reduce(cls, modulus, coeffs):
        """Build from arbitrary integers, reducing into canonical form."""
        arr = np.asarray(coeffs)
        if arr.dtype == object or (arr.size and arr.dtype.kind not in "iu"):
            arr = np.array([int(c) % modulus for c in coeffs], dtype=np.int64)
        else:
            arr = arr.astype(np.int64) % modulus
        return cls(modulus, arr)

    def __len__(self):
        return self.coeffs.shape[0]

    def __eq__(self, other):
        if not isinstance(other, ModPoly):
            return NotImplemented
        if self.modulus != other.modulus:
            return False
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        return np.array_equal(a, b[: len(a)]) and not b[len(a) :].any()

    def __repr__(self):
        body = np.array2string(self.coeffs, threshold=8)
        return f"ModPoly(mod {self.modulus}, {body})"


@dataclass(frozen=True)
class SchonhageParams:
    """Split geometry for the FFT route: chunks of length M/2, K of them.

    M and K are powers of two with M*K >= 4n and K | 2M, so K-th roots of
    unity in R[y]/(y^M + 1) are monomials and both operands of an n-by-n
    product fit in the K chunk slots with room for the result.
    """

    n: int
    M: int
    K: int

    def __post_init__(self):
        assert self.M * self.K >= 4 * self.n
        assert (2 * self.M) % self.K == 0


def schonhage_params(n: int) -> SchonhageParams:
    """Smallest balanced (M, K) for multiplying length-n polynomials."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    M, K = transforms._schonhage_geometry(n)
    return SchonhageParams(n, M, K)


def _check_pair(f: ModPoly, g: ModPoly):
    if f.modulus != g.modulus:
        raise ModulusMismatch(f"moduli differ: {f.modulus} vs {g.modulus}")


def mul_schoolbook(f: ModPoly, g: ModPoly) -> ModPoly:
    """Direct convolution; the reference the fast routes are tested against."""
    _check_pair(f, g)
    m = f.modulus
    if len(f) == 0 or len(g) == 0:
        return ModPoly(m, np.empty(0, dtype=np.int64))
    if min(len(f), len(g)) * (m - 1) ** 2 < 1 << 63:
        out = np.convolve(f.coeffs, g.coeffs) % m
    else:
        exact = np.convolve(f.coeffs.astype(object), g.coeffs.astype(object))
        out = (exact % m).astype(np.int64)
    return ModPoly(m, out)


def mul_kronecker(f: ModPoly, g: ModPoly) -> ModPoly:
    """Convolution by packing coefficients into one integer product.

    Slot width is chosen so carries cannot cross slots: every convolution
    coefficient is at most min(len) * (m-1)^2.
    """
    _check_pair(f, g)
    m = f.modulus
    if len(f) == 0 or len(g) == 0:
        return ModPoly(m, np.empty(0, dtype=np.int64))
    return ModPoly(m, transforms._kron_conv(f.coeffs, g.coeffs, m))


def mul_schonhage(f: ModPoly, g: ModPoly) -> ModPoly:
    """Convolution by chunk splitting and a monomial-root FFT.

    Chunks of M/2 coefficients embed into R[y]/(y^M + 1); chunk products
    never wrap in y, and the K-point transform along the chunk axis uses
    only rotations.  Requires an odd modulus (the inverse transform halves).
    """
    _check_pair(f, g)
    m = f.modulus
    transforms._require_odd(m)
    if len(f) == 0 or len(g) == 0:
        return ModPoly(m, np.empty(0, dtype=np.int64))
    return ModPoly(m, transforms._schonhage_conv(f.coeffs, g.coeffs, m))


def mul(f: ModPoly, g: ModPoly, *, schoolbook_max=None, kronecker_max=None) -> ModPoly:
    """Product of f and g, dispatching on max(len(f), len(g)).

    Schoolbook below SCHOOLBOOK_MAX, Kronecker substitution below
    KRONECKER_MAX, the FFT route above.  Even moduli stay on the Kronecker
    route at every size, since the FFT route needs 2 invertible.
    """
    _check_pair(f, g)
    if schoolbook_max is None:
        schoolbook_max = SCHOOLBOOK_MAX
    if kronecker_max is None:
        kronecker_max = KRONECKER_MAX
    n = max(len(f), len(g))
    if n <= schoolbook_max:
        return mul_schoolbook(f, g)
    if kronecker_max is None or n <= kronecker_max or f.modulus % 2 == 0:
        return mul_kronecker(f, g)
    return mul_schonhage(f, g)


def middle_product(a: ModPoly, b: ModPoly, *, transform_min=None) -> ModPoly:
    """Coefficients n-1 .. 2n-2 of a*b, for len(a) = 2n-1 and len(b) = n.

    These are the n inner coefficients where every coefficient of b
    meets a.  Computed either as a slice of a full product or, above the
    threshold, at the cost of a single n-by-n product by transposing the
    multiply-by-b map (which also needs 2 invertible).
    """
    _check_pair(a, b)
    n = len(b)
    if n == 0 or len(a) != 2 * n - 1:
        raise LengthMismatch(f"need lengths (2n-1, n), got ({len(a)}, {len(b)})")
    if transform_min is None:
        transform_min = MIDDLE_TRANSFORM_MIN
    if transform_min is None or n < transform_min or a.modulus % 2 == 0:
        return ModPoly(a.modulus, mul(a, b).coeffs[n - 1 : 2 * n - 1])
    out = transforms._middle_product_transform(a.coeffs, b.coeffs, a.modulus)
    return ModPoly(a.modulus, out)


def series_inverse(f: ModPoly, n: int, *, transform_min=None) -> ModPoly:
    """First n coefficients of 1/f as a power series.

    Newton doubling: from g with f*g = 1 (mod x^t), the residue r =
    (f*g)[t : 2t] is a middle product, and g extends by -g*r.  Each
    doubling costs two length-t products; above the threshold both reuse
    one transform of g.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if transform_min is None:
        transform_min = MIDDLE_TRANSFORM_MIN
    if transform_min is None:
        transform_min = 1 << 62
    m = f.modulus
    lead = int(f.coeffs[0]) if len(f) else 0
    try:
        g0 = invmod(lead, m) if lead else None
    except NotInvertible:
        g0 = None
    if g0 is None:
        raise NonInvertibleLeadingTerm(
            f"constant term {lead} is not invertible modulo {m}"
        )
    g = np.array([g0], dtype=np.int64)
    fc = f.coeffs
    t = 1
    while t < n:
        extend = min(t, n - t)
        window = np.zeros(2 * t - 1, dtype=np.int64)
        avail = min(len(fc) - 1, 2 * t - 1)
        if avail > 0:
            window[:avail] = fc[1 : 1 + avail]
        delta = transforms._newton_refine(window, g, m, extend, transform_min)
        g = np.concatenate([g, delta])
        t += extend
    return ModPoly(m, g)
