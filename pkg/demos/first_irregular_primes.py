# Irregular pairs from two independent directions.
#
# A pair (p, k) is irregular when p divides the numerator of the
# Bernoulli number B_k (k even, 2 <= k <= p-3).  The package computes
# the whole table B_2, B_4, ..., B_{p-3} mod p in one shot, by two
# methods that share no intermediate quantities, so agreement between
# them is a real check rather than a formality.

from bernmod import (
    FieldCtx,
    bernoulli_all_powerseries,
    bernoulli_all_voronoi,
    bernoulli_single,
    consistency_check,
    irregular_pairs,
)

# The multiplicative route: a twisted sum over a primitive root's
# powers, evaluated for every k at once with a chirp transform.

ctx = FieldCtx.for_prime(37)
table = bernoulli_all_voronoi(ctx)
print("B_k mod 37, k = 0, 2, ...:", table.values.tolist())

# The additive route: invert the exponential series x/(e^x - 1) mod p.
# Same numbers, different algebra.

again = bernoulli_all_powerseries(ctx)
assert (table.values == again.values).all()

# 37 is the smallest irregular prime: it divides the numerator of B_32
# (7709321041217, as it happens).

print("irregular pairs of 37:", irregular_pairs(table))
print("B_32 mod 37 =", bernoulli_single(ctx, 32))

# A third, weaker safety net: a closed-form value for the weighted sum
# of the whole table.  It cannot localize an error, but it is cheap and
# catches systematic ones.

print("table-wide checksum holds:", consistency_check(table))

# Scanning upward, every irregular prime below 200 (note 157, the
# smallest with two irregular indices):

from bernmod import primes_in_range

for p in primes_in_range(5, 200):
    p = int(p)
    pairs = irregular_pairs(bernoulli_all_voronoi(FieldCtx.for_prime(p)))
    if pairs:
        print(f"p = {p:4d}  irregular at k = {[pair.k for pair in pairs]}")
