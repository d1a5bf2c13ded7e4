"""Array-level transform kernels over R = Z/mZ.

The central object is a "state": an int64 ndarray of shape (..., K, M)
whose rows along the second-to-last axis are elements of the negacyclic
ring R' = R[y]/(y^M + 1).  K is a power of two dividing 2M, so y^(2M/K) is
a 2M/K-th ... a K-th root of unity in R' whose powers are monomials, and a
K-point Fourier transform over R' costs only additions, subtractions, and
index rotations.

Transforms are generated as straight-line programs over six primitive
row operations.  Each primitive is R'-linear with monomial coefficients,
so the transposed transform (needed for middle products) is obtained
mechanically: reverse the program and transpose each primitive.

Truncated transform outputs use the decimation-in-frequency enumeration:
out[j] is the evaluation at w^bitrev(j).  A prefix of this enumeration is
exactly invertible from the same-length input prefix, which is what the
inverse recursion exploits.

Everything here is integer arithmetic; moduli must be below 2**31 so that
a product of two canonical residues fits in int64.
"""

from __future__ import annotations

from dataclasses import dataclass

import gmpy2
import numpy as np

from .errors import CountOutOfRange, EvenModulus, ModulusMismatch, SizeMismatch

__all__ = [
    "NegacyclicElem",
    "negacyclic_mul",
    "tft_forward",
    "tft_inverse",
    "tft_transposed",
]

# Below this ring size, negacyclic products go through Kronecker
# substitution with an explicit sign wrap; above it, Nussbaumer recursion.
KRONECKER_NEGACYCLIC_MAX = 128


# ---------------------------------------------------------------------------
# elementwise modular helpers (conditional subtraction, no division)


def _addmod(a, b, m):
    out = a + b
    np.subtract(out, m, out=out, where=out >= m)
    return out


def _submod(a, b, m):
    out = a - b
    np.add(out, m, out=out, where=out < 0)
    return out


def _negmod(x, m):
    return np.where(x == 0, 0, m - x)


def _halfmod(x, m):
    # m is odd: odd values become even after adding m, then shift divides by 2
    return (x + (x & 1) * m) >> 1


def _mul_ypow(x, e, m):
    """x * y**e in R[y]/(y^M + 1) along the last axis; y^M = -1."""
    width = x.shape[-1]
    e %= 2 * width
    flip = e >= width
    if flip:
        e -= width
    if e == 0:
        return _negmod(x, m) if flip else x.copy()
    out = np.empty_like(x)
    head = x[..., width - e :]
    tail = x[..., : width - e]
    if flip:
        # the wrapped part is negated twice, so it lands positive
        out[..., :e] = head
        out[..., e:] = _negmod(tail, m)
    else:
        out[..., :e] = _negmod(head, m)
        out[..., e:] = tail
    return out


# ---------------------------------------------------------------------------
# straight-line transform programs
#
# op encodings ("row" means an index along axis -2):
#   ("bfly", i, j)       rows i, j <- i + j, i - j
#   ("tw", j, e)         row j *= y**e
#   ("addmul", s, d, e)  row d += y**e * row s
#   ("cptw", s, d, e)    row d <- y**e * row s
#   ("zero", j)          row j <- 0
#   ("half", j)          row j /= 2


def _execute(state, ops, m):
    for op in ops:
        kind = op[0]
        if kind == "bfly":
            _, i, j = op
            xi = state[..., i, :].copy()
            xj = state[..., j, :]
            state[..., i, :] = _addmod(xi, xj, m)
            state[..., j, :] = _submod(xi, xj, m)
        elif kind == "tw":
            _, j, e = op
            state[..., j, :] = _mul_ypow(state[..., j, :], e, m)
        elif kind == "addmul":
            _, s, d, e = op
            state[..., d, :] = _addmod(
                state[..., d, :], _mul_ypow(state[..., s, :], e, m), m
            )
        elif kind == "cptw":
            _, s, d, e = op
            state[..., d, :] = _mul_ypow(state[..., s, :], e, m)
        elif kind == "zero":
            state[..., op[1], :] = 0
        elif kind == "half":
            state[..., op[1], :] = _halfmod(state[..., op[1], :], m)
        else:  # pragma: no cover
            raise AssertionError(f"unknown op {op!r}")


def _execute_transposed(state, ops, m):
    """Apply the transpose of the linear map of `ops` (same modulus m).

    Under the R'-valued pairing sum_j a_j * b_j (negacyclic products),
    bfly/tw/zero/half are self-transpose, addmul swaps source and
    destination, and cptw becomes an addmul followed by zeroing its source.
    """
    for op in reversed(ops):
        kind = op[0]
        if kind == "bfly":
            _, i, j = op
            xi = state[..., i, :].copy()
            xj = state[..., j, :]
            state[..., i, :] = _addmod(xi, xj, m)
            state[..., j, :] = _submod(xi, xj, m)
        elif kind == "tw":
            _, j, e = op
            state[..., j, :] = _mul_ypow(state[..., j, :], e, m)
        elif kind == "addmul":
            _, s, d, e = op
            state[..., s, :] = _addmod(
                state[..., s, :], _mul_ypow(state[..., d, :], e, m), m
            )
        elif kind == "cptw":
            _, s, d, e = op
            state[..., s, :] = _addmod(
                state[..., s, :], _mul_ypow(state[..., d, :], e, m), m
            )
            state[..., d, :] = 0
        elif kind == "zero":
            state[..., op[1], :] = 0
        elif kind == "half":
            state[..., op[1], :] = _halfmod(state[..., op[1], :], m)
        else:  # pragma: no cover
            raise AssertionError(f"unknown op {op!r}")


def _tft_ops(size, base, nonzero, wanted, estep, wrap, ops):
    """Emit the pruned forward butterfly tree for one block.

    size: block length (power of two); base: first row of the block;
    nonzero: rows [base, base+nonzero) may be nonzero, the rest are zero;
    wanted: how many leading outputs of this block are needed;
    estep: exponent of this level's root (y**estep has order `size`);
    wrap: exponent with y**wrap = -1 (i.e. the ring size M).
    """
    if wanted == 0 or size == 1:
        return
    h = size // 2
    if wanted <= h:
        # only the even-evaluation half is needed: u_i = x_i + x_{i+h}
        if nonzero > h:
            for i in range(nonzero - h):
                ops.append(("addmul", base + h + i, base + i, 0))
            nonzero = h
        _tft_ops(h, base, nonzero, wanted, 2 * estep, wrap, ops)
        return
    if nonzero > h:
        for i in range(nonzero - h):
            ops.append(("bfly", base + i, base + i + h))
            if (estep * i) % (2 * wrap):
                ops.append(("tw", base + i + h, (estep * i) % (2 * wrap)))
        lo = nonzero - h
        hi = h
        z_left = z_right = h
    else:
        lo = 0
        hi = nonzero
        z_left = z_right = nonzero
    for i in range(lo, hi):
        # upper partner is zero here: u_i = x_i in place, v_i = x_i * w^i
        ops.append(("cptw", base + i, base + i + h, (estep * i) % (2 * wrap)))
    _tft_ops(h, base, z_left, h, 2 * estep, wrap, ops)
    _tft_ops(h, base + h, z_right, wanted - h, 2 * estep, wrap, ops)


def _itft_ops(size, base, wanted, estep, wrap, ops):
    """Emit the inverse: rows [base, base+wanted) hold transform outputs,
    rows [base+wanted, base+size) hold original inputs; on exit all rows
    hold original inputs."""
    if wanted == 0 or size == 1:
        return
    h = size // 2
    if wanted <= h:
        for i in range(wanted, h):
            ops.append(("addmul", base + h + i, base + i, 0))
        _itft_ops(h, base, wanted, 2 * estep, wrap, ops)
        for i in range(h):
            ops.append(("addmul", base + h + i, base + i, wrap))
        return
    _itft_ops(h, base, h, 2 * estep, wrap, ops)
    for i in range(wanted - h, h):
        # from u_i and original x_{i+h}: x_i, then v_i = (x_i - x_{i+h}) w^i
        ops.append(("addmul", base + h + i, base + i, wrap))
        ops.append(("tw", base + h + i, wrap))
        ops.append(("addmul", base + i, base + h + i, 0))
        if (estep * i) % (2 * wrap):
            ops.append(("tw", base + h + i, (estep * i) % (2 * wrap)))
    _itft_ops(h, base + h, wanted - h, 2 * estep, wrap, ops)
    for i in range(wanted - h):
        if (estep * i) % (2 * wrap):
            ops.append(("tw", base + h + i, (-estep * i) % (2 * wrap)))
        ops.append(("bfly", base + i, base + i + h))
        ops.append(("half", base + i))
        ops.append(("half", base + i + h))
    for i in range(wanted - h, h):
        # restore x_{i+h} = x_i - v_i * w^{-i}
        ops.append(("tw", base + h + i, (wrap - estep * i) % (2 * wrap)))
        ops.append(("addmul", base + i, base + h + i, 0))


def _forward_program(K, nonzero, wanted, M):
    ops: list[tuple] = []
    _tft_ops(K, 0, nonzero, wanted, 2 * M // K, M, ops)
    return ops


def _inverse_program(K, wanted, M):
    ops: list[tuple] = []
    _itft_ops(K, 0, wanted, 2 * M // K, M, ops)
    return ops


# ---------------------------------------------------------------------------
# Kronecker substitution: polynomial products through one big-integer product


def _slot_bytes(min_len, m):
    # max convolution coefficient is min_len * (m-1)**2, attained in full
    return (min_len * (m - 1) ** 2).bit_length() + 7 >> 3


def _pack_rows(rows, slot_bytes):
    """Pack each row of canonical residues into one little-endian integer."""
    count, n = rows.shape
    buf = np.zeros((count, n, slot_bytes), dtype=np.uint8)
    low = min(4, slot_bytes)
    as_bytes = rows.astype("<u4").view(np.uint8).reshape(count, n, 4)
    buf[:, :, :low] = as_bytes[:, :, :low]
    return [gmpy2.mpz.from_bytes(buf[i].tobytes(), "little") for i in range(count)]


def _unpack_slots(value, n_out, slot_bytes, m):
    raw = np.frombuffer(value.to_bytes(n_out * slot_bytes, "little"), dtype=np.uint8)
    slots = raw.reshape(n_out, slot_bytes).astype(np.int64)
    weights = np.array([pow(256, k, m) for k in range(slot_bytes)], dtype=np.int64)
    # slot bytes < 2**8, weights < m < 2**31: the dot product stays below 2**43
    return slots @ weights % m


def _kron_conv_batch(a, b, m):
    """Row-wise linear convolution of (..., n1) with (..., n2), mod m."""
    n1 = a.shape[-1]
    n2 = b.shape[-1]
    n_out = n1 + n2 - 1
    shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
    rows_a = np.broadcast_to(a, shape + (n1,)).reshape(-1, n1)
    rows_b = np.broadcast_to(b, shape + (n2,)).reshape(-1, n2)
    sb = _slot_bytes(min(n1, n2), m)
    packed_a = _pack_rows(rows_a, sb)
    packed_b = _pack_rows(rows_b, sb)
    out = np.empty((rows_a.shape[0], n_out), dtype=np.int64)
    for i, (pa, pb) in enumerate(zip(packed_a, packed_b)):
        out[i] = _unpack_slots(pa * pb, n_out, sb, m)
    return out.reshape(shape + (n_out,))


def _kron_conv(a, b, m):
    return _kron_conv_batch(a[np.newaxis, :], b[np.newaxis, :], m)[0]


def _kron_negacyclic_batch(a, b, m):
    width = a.shape[-1]
    full = _kron_conv_batch(a, b, m)
    out = full[..., :width].copy()
    if width > 1:
        out[..., : width - 1] = _submod(out[..., : width - 1], full[..., width:], m)
    return out


# ---------------------------------------------------------------------------
# negacyclic multiplication: Nussbaumer above the threshold


def _negacyclic_mul_batch(a, b, m, kronecker_max=None):
    """Products in R[y]/(y^M + 1), vectorized over leading axes."""
    width = a.shape[-1]
    if kronecker_max is None:
        kronecker_max = KRONECKER_NEGACYCLIC_MAX
    if width <= max(kronecker_max, 2):
        return _kron_negacyclic_batch(a, b, m)
    t = width.bit_length() - 1
    r = 1 << (t + 1 >> 1)
    s = 1 << (t >> 1)
    batch = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
    half_rows = 2 * s - 1

    def decimated_state(x):
        # index i*s + j becomes row j, column i: A_j(z) with z = y**s
        grid = np.broadcast_to(x, batch + (width,)).reshape(batch + (r, s))
        state = np.zeros(batch + (2 * s, r), dtype=np.int64)
        state[..., :s, :] = np.swapaxes(grid, -1, -2)
        return state

    forward = _forward_program(2 * s, s, half_rows, r)
    sa = decimated_state(a)
    sb = decimated_state(b)
    _execute(sa, forward, m)
    _execute(sb, forward, m)
    sa[..., :half_rows, :] = _negacyclic_mul_batch(
        sa[..., :half_rows, :], sb[..., :half_rows, :], m, kronecker_max
    )
    sa[..., half_rows:, :] = 0
    _execute(sa, _inverse_program(2 * s, half_rows, r), m)
    # fold C_u + z*C_{u+s}; row 2s-1 of the linear convolution is zero
    folded = _addmod(sa[..., :s, :], _mul_ypow(sa[..., s:, :], 1, m), m)
    return np.swapaxes(folded, -1, -2).reshape(batch + (width,))


@dataclass(frozen=True, eq=False)
class NegacyclicElem:
    """An element of R[y]/(y^M + 1): exactly M canonical residues mod m."""

    modulus: int
    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=np.int64)
        width = arr.shape[-1] if arr.ndim else 0
        if arr.ndim != 1 or width < 1 or width & (width - 1):
            raise ValueError("coefficient count must be a power of two")
        _check_vector_modulus(self.modulus)
        if arr.size and (arr.min() < 0 or arr.max() >= self.modulus):
            raise ValueError("coefficients must be canonical residues")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    def __len__(self):
        return self.coeffs.shape[0]

    def __eq__(self, other):
        if not isinstance(other, NegacyclicElem):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(
            self.coeffs, other.coeffs
        )


def _check_vector_modulus(m):
    if not 2 <= m < 1 << 31:
        raise ValueError(f"modulus must be in [2, 2**31), got {m}")


def _require_odd(m):
    if m % 2 == 0:
        raise EvenModulus(f"2 is not invertible modulo {m}")


def negacyclic_mul(a: NegacyclicElem, b: NegacyclicElem) -> NegacyclicElem:
    """Product in R[y]/(y^M + 1): convolution with sign-wrapped reduction."""
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"moduli differ: {a.modulus} vs {b.modulus}")
    if len(a) != len(b):
        raise SizeMismatch(f"ring sizes differ: {len(a)} vs {len(b)}")
    if len(a) > KRONECKER_NEGACYCLIC_MAX:
        _require_odd(a.modulus)
    out = _negacyclic_mul_batch(a.coeffs, b.coeffs, a.modulus)
    return NegacyclicElem(a.modulus, out)


# ---------------------------------------------------------------------------
# public truncated-transform entry points


def _as_state(data, modulus):
    if isinstance(data, np.ndarray):
        if modulus is None:
            raise ValueError("modulus is required with ndarray input")
        arr = np.asarray(data, dtype=np.int64)
    else:
        rows = list(data)
        if not rows:
            raise ValueError("empty transform input")
        moduli = {row.modulus for row in rows}
        if len(moduli) != 1:
            raise ModulusMismatch(f"mixed moduli {sorted(moduli)}")
        inferred = moduli.pop()
        if modulus is not None and modulus != inferred:
            raise ModulusMismatch(f"modulus {modulus} vs rows {inferred}")
        modulus = inferred
        arr = np.stack([row.coeffs for row in rows])
    if arr.ndim != 2:
        raise ValueError("transform input must be a K-vector of ring elements")
    _check_vector_modulus(modulus)
    _require_odd(modulus)
    return arr, modulus


def _check_geometry(K, width):
    if K < 1 or K & (K - 1):
        raise ValueError(f"transform length {K} is not a power of two")
    if width < 1 or width & (width - 1) or (2 * width) % K:
        raise ValueError(f"transform length {K} does not divide 2M = {2 * width}")


def _check_counts(K, *counts):
    for c in counts:
        if not 0 <= c <= K:
            raise CountOutOfRange(f"count {c} outside [0, {K}]")


def tft_forward(data, nonzero_in, wanted_out, modulus=None):
    """First wanted_out transform coefficients of the zero-padded input.

    `data` is a K-vector over R[y]/(y^M + 1) (an ndarray of shape (K, M) or
    a sequence of NegacyclicElem); rows at index >= nonzero_in are treated
    as zero.  Output row j holds the evaluation at (y^(2M/K))**bitrev(j).
    """
    arr, m = _as_state(data, modulus)
    K, width = arr.shape
    _check_geometry(K, width)
    _check_counts(K, nonzero_in, wanted_out)
    state = np.zeros_like(arr)
    state[:nonzero_in] = arr[:nonzero_in]
    _execute(state, _forward_program(K, nonzero_in, wanted_out, width), m)
    return state[:wanted_out].copy()


def tft_inverse(partial, nonzero_in, modulus=None):
    """Recover the nonzero input prefix from its transform prefix.

    Consumes the first nonzero_in rows of `partial` (extra rows are
    ignored) and inverts under the promise that input rows at index >=
    nonzero_in were zero.  The transform prefix does not depend on the K
    used by the forward call, so none needs to be supplied.
    """
    arr, m = _as_state(partial, modulus)
    width = arr.shape[1]
    if nonzero_in < 0 or nonzero_in > arr.shape[0]:
        raise CountOutOfRange(f"count {nonzero_in} outside [0, {arr.shape[0]}]")
    K = 1 << (max(nonzero_in, 1) - 1).bit_length()
    _check_geometry(K, width)
    state = np.zeros((K, width), dtype=np.int64)
    state[:nonzero_in] = arr[:nonzero_in]
    _execute(state, _inverse_program(K, nonzero_in, width), m)
    return state[:nonzero_in].copy()


def tft_transposed(data, nonzero_in, wanted_out, modulus=None):
    """Transpose of the tft_forward map with the same counts.

    tft_forward with counts (z, l) is linear from z rows to l rows; this
    applies the transposed map, taking the first l rows of `data` to z
    output rows.  For all a, b: <tft_forward(a), b> = <a, tft_transposed(b)>
    under the coordinatewise negacyclic-product pairing.
    """
    arr, m = _as_state(data, modulus)
    width = arr.shape[1]
    top = max(nonzero_in, wanted_out, 1)
    K = 1 << (top - 1).bit_length()
    _check_geometry(K, width)
    _check_counts(K, nonzero_in, wanted_out)
    if wanted_out > arr.shape[0]:
        raise CountOutOfRange(
            f"need {wanted_out} input rows, got {arr.shape[0]}"
        )
    state = np.zeros((K, width), dtype=np.int64)
    state[:wanted_out] = arr[:wanted_out]
    _execute_transposed(state, _forward_program(K, nonzero_in, wanted_out, width), m)
    return state[:nonzero_in].copy()


# ---------------------------------------------------------------------------
# Schoenhage-style long multiplication and the transposed middle product


def _schonhage_geometry(n):
    def clog2(x):
        return (x - 1).bit_length()

    M = 1 << (clog2(n) + 2) // 2
    K = 1 << clog2(max(-(-4 * n // M), 1))
    return M, K


def _split_rows(vec, half, rows, width):
    state = np.zeros((rows, width), dtype=np.int64)
    padded = np.zeros(rows * half, dtype=np.int64)
    padded[: vec.shape[0]] = vec
    state[:, :half] = padded.reshape(rows, half)
    return state


def _overlap_add(rows, half, n_out, m):
    count, width = rows.shape
    acc = np.zeros((count - 1) * half + width, dtype=np.int64)
    for u in range(count):
        # stride half with width 2*half: each slot sees at most two rows
        acc[u * half : u * half + width] += rows[u]
    np.subtract(acc, m, out=acc, where=acc >= m)
    return acc[:n_out]


def _schonhage_conv(a, b, m):
    """Linear convolution of raw coefficient vectors via the split pipeline."""
    la, lb = a.shape[0], b.shape[0]
    M, K = _schonhage_geometry(max(la, lb))
    half = M // 2
    za = -(-la // half)
    zb = -(-lb // half)
    rows = za + zb - 1
    assert rows <= K
    state_a = _split_rows(a, half, K, M)
    state_b = _split_rows(b, half, K, M)
    prog_a = _forward_program(K, za, rows, M)
    prog_b = prog_a if zb == za else _forward_program(K, zb, rows, M)
    _execute(state_a, prog_a, m)
    _execute(state_b, prog_b, m)
    state_a[:rows] = _negacyclic_mul_batch(state_a[:rows], state_b[:rows], m)
    state_a[rows:] = 0
    _execute(state_a, _inverse_program(K, rows, M), m)
    return _overlap_add(state_a[:rows], half, la + lb - 1, m)


def _reverse_negate_rows(rows, m):
    """The ring automorphism y -> y^(-1) applied to each row."""
    out = np.empty_like(rows)
    out[..., 0] = rows[..., 0]
    out[..., 1:] = _negmod(rows[..., :0:-1], m)
    return out


def _gather_rows(vec, half, rows, width):
    state = np.zeros((rows, width), dtype=np.int64)
    padded = np.zeros((rows - 1) * half + width, dtype=np.int64)
    padded[: vec.shape[0]] = vec
    for u in range(rows):
        state[u] = padded[u * half : u * half + width]
    return state


def _transposed_multiply(a, bhat, geometry, m):
    """Apply the scalar transpose of (multiply-by-b) to vector a.

    bhat is the forward transform of b's split rows.  The scalar transpose
    of each R'-linear stage is its pairing transpose conjugated by the
    reverse-negate automorphism; interior conjugations cancel, leaving one
    at each end of the chain.
    """
    M, K, half, z, rows, n = geometry
    state = np.zeros((K, M), dtype=np.int64)
    state[:rows] = _reverse_negate_rows(_gather_rows(a, half, rows, M), m)
    _execute_transposed(state, _inverse_program(K, rows, M), m)
    state[rows:] = 0
    state[:rows] = _negacyclic_mul_batch(state[:rows], bhat, m)
    _execute_transposed(state, _forward_program(K, z, rows, M), m)
    out = _reverse_negate_rows(state[:z], m)
    return out[:, :half].reshape(-1)[:n]


def _middle_geometry(n):
    M, K = _schonhage_geometry(2 * n - 1)
    half = M // 2
    z = -(-n // half)
    rows = 2 * z - 1
    assert rows <= K
    return M, K, half, z, rows, n


def _bhat(b, geometry, m):
    M, K, half, z, rows, _ = geometry
    state = _split_rows(b, half, K, M)
    _execute(state, _forward_program(K, z, rows, M), m)
    return state[:rows].copy()


def _middle_product_transform(a, b, m):
    """Coefficients n-1 .. 2n-2 of a*b for len(a) = 2n-1, len(b) = n."""
    geometry = _middle_geometry(b.shape[0])
    bhat = _bhat(b, geometry, m)
    return _transposed_multiply(a[::-1], bhat, geometry, m)[::-1].copy()


def _newton_refine(fwin, g, m, extend, transform_min):
    """One Newton step for series inversion.

    fwin = f[1 : 2t] zero-padded to length 2t-1, g the inverse to order t.
    Returns delta of length `extend` with (g + x^t delta) inverting f to
    order t + extend.  Above the threshold, the transform of g is computed
    once and shared by the middle product and the update product.
    """
    t = g.shape[0]
    if t < transform_min or m % 2 == 0:
        r = _kron_conv(fwin, g, m)[t - 1 : 2 * t - 1]
        prod = _kron_conv(g, r[: t], m)[:extend]
        return _negmod(prod, m)
    geometry = _middle_geometry(t)
    M, K, half, z, rows, _ = geometry
    ghat = _bhat(g, geometry, m)
    r = _transposed_multiply(fwin[::-1], ghat, geometry, m)[::-1]
    # g*r has the same chunk geometry (both length t), so ghat is reused
    state = _split_rows(r, half, K, M)
    _execute(state, _forward_program(K, z, rows, M), m)
    state[:rows] = _negacyclic_mul_batch(state[:rows], ghat, m)
    state[rows:] = 0
    _execute(state, _inverse_program(K, rows, M), m)
    prod = _overlap_add(state[:rows], half, extend, m)
    return _negmod(prod, m)
