"""Kummer-Vandiver: witness search, root construction, both product schemes."""

import pytest

import bernmod.vandiver as vandiver_mod
from bernmod.bernoulli import bernoulli_all_voronoi, irregular_pairs
from bernmod.errors import DegenerateFactor, SchemeDisagreement
from bernmod.modarith import (
    FieldCtx,
    invmod,
    is_prime,
    multiplicative_order,
    powmod,
    primes_in_range,
    primitive_root,
)
from bernmod.vandiver import (
    VandiverResult,
    pth_root_of_unity,
    smallest_q,
    vandiver_product_pow2,
    vandiver_product_sequential,
    vandiver_test,
)

# Pairs confirmed irregular by the Bernoulli tests' exact-rational oracle.
CLASSICAL_PAIRS = [(37, 32), (59, 44), (67, 58), (101, 68), (103, 24)]


def irregular_pairs_below(bound):
    out = []
    for p in primes_in_range(37, bound):
        table = bernoulli_all_voronoi(FieldCtx.for_prime(int(p)))
        out.extend((pair.p, pair.k) for pair in irregular_pairs(table))
    return out


def product_oracle(p, k, q, z):
    """The defining product, every piece recomputed from scratch."""
    v = 1
    for c in range(1, (p - 1) // 2 + 1):
        base = (powmod(z, c, q) - invmod(powmod(z, c, q), q)) % q
        v = v * powmod(base, powmod(c, p - 1 - k, p), q) % q
    return v


class TestSmallestQ:
    def test_hand_values(self):
        assert smallest_q(37) == 149
        assert smallest_q(5) == 11
        assert smallest_q(3) == 7

    def test_minimality_sweep(self):
        for p in primes_in_range(3, 500):
            p = int(p)
            q = smallest_q(p)
            assert is_prime(q) and q % p == 1
            assert not any(
                is_prime(r) for r in range(p + 1, q, p) if r % p == 1
            ), (p, q)

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            smallest_q(35)


class TestPthRoot:
    def test_postcondition_sweep(self):
        for p in primes_in_range(3, 300):
            p = int(p)
            q = smallest_q(p)
            z = pth_root_of_unity(p, q)
            assert z != 1 and powmod(z, p, q) == 1

    def test_order_five_elements_mod_11(self):
        z = pth_root_of_unity(5, 11)
        assert z in {3, 9, 5, 4}

    def test_order_exactly_37(self):
        z = pth_root_of_unity(37, 149)
        assert multiplicative_order(z, 149) == 37

    def test_rejects_wrong_congruence(self):
        with pytest.raises(ValueError):
            pth_root_of_unity(5, 13)


class TestProductSchemes:
    def test_sequential_matches_definition_oracle(self):
        for p, k in CLASSICAL_PAIRS:
            q = smallest_q(p)
            z = pth_root_of_unity(p, q)
            got = vandiver_product_sequential(p, k, q, z)
            assert got == product_oracle(p, k, q, z), (p, k)

    def test_pow2_matches_sequential_on_arbitrary_even_k(self):
        # agreement is structural, not special to irregular pairs
        for p in [5, 7, 11, 13, 37, 101, 257]:
            q = smallest_q(p)
            z = pth_root_of_unity(p, q)
            for k in range(2, p - 2, 2):
                seq = vandiver_product_sequential(p, k, q, z)
                p2 = vandiver_product_pow2(p, k, q, z)
                assert seq == p2, (p, k)

    def test_pow2_enumeration_covers_group_once(self):
        for p in primes_in_range(3, 500):
            p = int(p)
            g = primitive_root(p)
            t = multiplicative_order(2 % p, p)
            seen = []
            for j in range((p - 1) // t):
                c = powmod(g, j, p)
                for _ in range(t):
                    seen.append(c)
                    c = 2 * c % p
            assert sorted(seen) == list(range(1, p)), p

    def test_incremental_exponent_telescopes(self):
        # maintained exponent == c^(p-1-k) mod p at every (i, j) step
        for p in primes_in_range(3, 100):
            p = int(p)
            if p < 7:
                continue
            k = p - 5
            e = p - 1 - k
            g = primitive_root(p)
            t = multiplicative_order(2 % p, p)
            step_inner = powmod(2 % p, e, p)
            step_outer = powmod(g, e, p)
            exp_outer = 1
            cbase = 1
            for _ in range((p - 1) // t):
                exp = exp_outer
                c = cbase
                for _ in range(t):
                    assert exp == powmod(c, e, p), (p, c)
                    c = 2 * c % p
                    exp = exp * step_inner % p
                cbase = cbase * g % p
                exp_outer = exp_outer * step_outer % p

    def test_degenerate_factor_caught(self):
        # z = 10 has order 2 mod 11, so z^1 - z^-1 = 0; the products
        # never validate z and must trip the defensive check instead
        with pytest.raises(DegenerateFactor):
            vandiver_product_sequential(5, 2, 11, 10)
        with pytest.raises(DegenerateFactor):
            vandiver_product_pow2(5, 2, 11, 10)


class TestVandiverTest:
    def test_first_irregular_pair(self):
        res = vandiver_test(37, 32)
        assert res.passed and res.q == 149 and res.scheme == "both"

    def test_classical_pairs_pass(self):
        for p, k in CLASSICAL_PAIRS:
            assert vandiver_test(p, k).passed, (p, k)

    def test_all_pairs_below_2000(self):
        for p, k in irregular_pairs_below(2000):
            res = vandiver_test(p, k)
            assert res.passed and res.q == smallest_q(p), (p, k)

    def test_corruption_raises_scheme_disagreement(self, monkeypatch):
        real = vandiver_mod.vandiver_product_pow2

        def corrupted(p, k, q, z):
            return real(p, k, q, z) * 2 % q

        monkeypatch.setattr(vandiver_mod, "vandiver_product_pow2", corrupted)
        with pytest.raises(SchemeDisagreement):
            vandiver_mod.vandiver_test(37, 32)

    def test_verdict_independent_of_root(self):
        # every nontrivial p-th root gives the same verdict (and the
        # value test v^((q-1)/p) != 1 in particular)
        for p, k in irregular_pairs_below(500):
            q = smallest_q(p)
            z0 = pth_root_of_unity(p, q)
            verdicts = set()
            for a in range(1, p):
                z = powmod(z0, a, q)
                v = vandiver_product_sequential(p, k, q, z)
                verdicts.add(powmod(v, (q - 1) // p, q) != 1)
            assert verdicts == {True}, (p, k)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            vandiver_test(36, 2)
        with pytest.raises(ValueError):
            vandiver_test(37, 31)
        with pytest.raises(ValueError):
            vandiver_test(37, 36)


class TestVandiverResult:
    def test_invariants_enforced(self):
        good = vandiver_test(37, 32)
        with pytest.raises(ValueError):
            VandiverResult(p=37, k=32, q=150, z=good.z, v=good.v,
                           passed=True, scheme="both")
        with pytest.raises(ValueError):
            VandiverResult(p=37, k=32, q=149, z=1, v=good.v,
                           passed=True, scheme="both")
        with pytest.raises(ValueError):
            VandiverResult(p=37, k=32, q=149, z=good.z, v=good.v,
                           passed=False, scheme="both")
        with pytest.raises(ValueError):
            VandiverResult(p=37, k=32, q=149, z=good.z, v=good.v,
                           passed=True, scheme="mystery")
