# Pinning the lambda-invariant with three non-congruences.
#
# For each irregular pair (p, k), three conditions on the half-range
# power sums S(e) = sum_{a<=(p-1)/2} a^e mod p^2 establish that the
# pair contributes exactly 1 to the cyclotomic lambda-invariant of p.
# If they hold at every irregular index, lambda_p equals the index of
# irregularity i_p.

from bernmod import lambda_tests, lambda_verdict, power_sum

# The raw ingredients at (37, 32).  The two sums encode B_32/32 and
# B_(32+36)/(32+36) mod 37^2 up to a shared unit factor, so distinct
# nonzero values mean: B_32 is not 0 mod 37^2, and the Kummer
# congruence between consecutive levels fails mod 37^2.  Those two
# facts pin the contribution.

p, k = 37, 32
print(f"S(k-1)   mod p^2 = {power_sum(p, k - 1)}")
print(f"S(p+k-2) mod p^2 = {power_sum(p, p + k - 2)}")
print(lambda_tests(p, k))

# The per-prime verdict folds all pairs.  157 is the first prime with
# two irregular indices; both must pass.

summary = lambda_verdict(157, [62, 110])
print(f"\np = 157: verdict {summary.verdict}")
for res in summary.results:
    print(" ", res)

# The tests only work when 2^k is not 1 mod p: otherwise the shared
# unit factor vanishes and both sums are 0 mod p^2 no matter what the
# Bernoulli numbers are.  Such pairs are flagged, never guessed at.
# (17, 8) is not an irregular pair, but it shows the mechanism: 2^8 =
# 256 = 15 * 17 + 1.

print("\n", lambda_tests(17, 8))
print(" verdict when a pair is unsupported:",
      lambda_verdict(17, [8]).verdict)

# A regular prime has no pairs and its verdict is vacuously true
# (lambda = i_p = 0):

print("\np = 5:", lambda_verdict(5, []).verdict)
