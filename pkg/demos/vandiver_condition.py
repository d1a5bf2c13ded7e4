# The Kummer-Vandiver check at an irregular pair.
#
# For an irregular pair (p, k), Vandiver's conjecture for p is
# supported if the product
#
#     V = prod_{c=1}^{(p-1)/2} (z^c - z^{-c})^(c^(p-1-k))   mod q
#
# is not a p-th power mod q, where q is a prime with q = 1 mod p and z
# is a p-th root of unity mod q.  The package evaluates V by two
# iteration schemes with different loop structure and update rules and
# insists they agree before testing the power condition.

from bernmod import pth_root_of_unity, smallest_q, vandiver_test
from bernmod.vandiver import (
    vandiver_product_pow2,
    vandiver_product_sequential,
)

# The moving parts, spelled out for the first irregular pair (37, 32):

p, k = 37, 32
q = smallest_q(p)
z = pth_root_of_unity(p, q)
print(f"p = {p}, k = {k}")
print(f"smallest usable modulus q = {q} (q = 1 + {(q - 1) // p} * {p})")
print(f"p-th root of unity mod q: z = {z}")

v_seq = vandiver_product_sequential(p, k, q, z)
v_bin = vandiver_product_pow2(p, k, q, z)
print(f"product by the direct scheme:     V = {v_seq}")
print(f"product by the doubling scheme:   V = {v_bin}")

exponent = (q - 1) // p
print(f"V^((q-1)/p) mod q = {pow(v_seq, exponent, q)}  (1 would refute)")

# The verdict does not depend on which root z was picked: changing the
# root permutes the factors and multiplies V by a p-th power, which the
# final exponentiation kills.

other = pow(z, 5, q)
print("another root gives the same verdict:",
      pow(vandiver_product_sequential(p, k, q, other), exponent, q) != 1)

# The packaged test runs both schemes and checks every precondition:

for pair in [(37, 32), (59, 44), (67, 58), (101, 68), (103, 24)]:
    res = vandiver_test(*pair)
    print(f"({res.p}, {res.k}): q = {res.q:5d}, passed = {res.passed}")
