# The polynomial arithmetic underneath the Bernoulli pipelines.
#
# Everything upstream reduces to multiplying polynomials over Z/m with
# m an odd word-sized prime.  Three routes coexist: schoolbook for
# tiny operands, Kronecker substitution (pack coefficients into one
# huge integer and let GMP multiply), and a Schonhage-style negacyclic
# convolution that needs no root of unity in the coefficient ring.
# The dispatcher picks by size; every route must agree exactly.

import time

import numpy as np

from bernmod import ModPoly, middle_product, mul, series_inverse
from bernmod.polyring import mul_kronecker, mul_schonhage, mul_schoolbook

m = 2**31 - 1
rng = np.random.default_rng(11)


def random_poly(n):
    return ModPoly(m, rng.integers(0, m, size=n))


f, g = random_poly(800), random_poly(800)
ref = mul_schoolbook(f, g)
assert mul_kronecker(f, g) == ref
assert mul_schonhage(f, g) == ref
assert mul(f, g) == ref
print("three multiplication routes agree on an 800-term product")

# Relative speed at a size the scans actually hit:

f, g = random_poly(1 << 15), random_poly(1 << 15)
for label, route in [("kronecker", mul_kronecker),
                     ("schonhage", mul_schonhage)]:
    t0 = time.perf_counter()
    route(f, g)
    print(f"  {label:10s} n = 2^15: {time.perf_counter() - t0:.3f}s")

# The middle product returns just the central coefficient window of
# f * g, which is all a Newton iteration step consumes:

a, b = random_poly(11), random_poly(6)
window = middle_product(a, b)
full = mul(a, b)
assert window.coeffs.tolist() == full.coeffs.tolist()[5:11]
print("middle product equals the middle slice of the full product")

# Newton inversion of a power series, the heart of the additive
# Bernoulli method: g = f^(-1) mod x^n from scratch in O(M(n)).

f = random_poly(64)
n = 50
g = series_inverse(f, n)
check = mul(f, g)
assert check.coeffs[0] == 1 and not check.coeffs[1:n].any()
print(f"series inverse verified: f * g = 1 mod x^{n}")
