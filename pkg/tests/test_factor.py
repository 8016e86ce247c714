"""Factorization over F_p and irreducibility over Q."""

import random
from concurrent.futures import ThreadPoolExecutor

import pytest

from bcinv.poly import (
    IntPoly,
    IrreducibilityEffort,
    ModPoly,
    discriminant,
    factor_mod_p,
    is_irreducible_over_q,
    parse_poly,
)


def brute_roots(f: IntPoly, p: int) -> list[int]:
    return [r for r in range(p) if f(r) % p == 0]


class TestFactorModP:
    def test_x2_plus_1_mod_5(self):
        # brute-force root search: roots 2 and 3, so (x+2)(x+3)
        assert brute_roots(parse_poly("x^2+1"), 5) == [2, 3]
        fac = factor_mod_p(parse_poly("x^2+1"), 5)
        assert [(list(g.coeffs), m) for g, m in fac.factors] == [([2, 1], 1), ([3, 1], 1)]

    def test_x2_plus_1_mod_3_irreducible(self):
        assert brute_roots(parse_poly("x^2+1"), 3) == []
        fac = factor_mod_p(parse_poly("x^2+1"), 3)
        assert len(fac.factors) == 1
        g, m = fac.factors[0]
        assert g.degree == 2 and m == 1

    def test_x2_plus_1_mod_2_square(self):
        # (x+1)^2 = x^2 + 2x + 1 = x^2 + 1 mod 2
        fac = factor_mod_p(parse_poly("x^2+1"), 2)
        assert [(list(g.coeffs), m) for g, m in fac.factors] == [([1, 1], 2)]

    def test_composite_p_rejected(self):
        with pytest.raises(ValueError):
            factor_mod_p(parse_poly("x^2+1"), 6)

    def test_zero_mod_p_rejected(self):
        with pytest.raises(ValueError):
            factor_mod_p(IntPoly([5, 10]), 5)

    def test_product_and_degree_sum_random(self):
        rng = random.Random(2024)
        primes = [2, 3, 5, 7, 11, 13, 17, 23, 31, 41, 47]
        for _ in range(150):
            p = rng.choice(primes)
            coeffs = [rng.randrange(p) for _ in range(rng.randint(1, 8))]
            coeffs.append(rng.randrange(1, p))
            f = IntPoly(coeffs)
            fac = factor_mod_p(f, p)
            monic = f.reduce_mod(p).monic()
            assert fac.product() == monic
            assert sum(g.degree * m for g, m in fac.factors) == monic.degree
            for g, _ in fac.factors:
                assert g.is_monic()

    def test_factors_irreducible_small(self):
        # over tiny fields, check factors really are irreducible by exhaustive
        # search for proper monic divisors
        rng = random.Random(5)
        for _ in range(25):
            p = rng.choice([2, 3, 5])
            f = IntPoly([rng.randrange(p) for _ in range(4)] + [1])
            fac = factor_mod_p(f, p)
            for g, _ in fac.factors:
                if g.degree < 2:
                    continue
                for d in range(1, g.degree):
                    for idx in range(p**d):
                        cand = []
                        v = idx
                        for _ in range(d):
                            cand.append(v % p)
                            v //= p
                        cand.append(1)
                        assert not (g % ModPoly(cand, p)).is_zero()

    def test_deterministic_and_thread_independent(self):
        f = parse_poly("x^8 - 97")
        base = factor_mod_p(f, 10007)
        again = factor_mod_p(f, 10007)
        assert base == again
        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(lambda _: factor_mod_p(f, 10007), range(16)))
        assert all(r == base for r in results)

    def test_disc_vs_squarefree(self):
        rng = random.Random(9)
        for _ in range(80):
            f = IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(2, 5))] + [1])
            d = discriminant(f)
            for p in (2, 3, 5, 7, 11, 13):
                fac = factor_mod_p(f, p)
                squarefree = all(m == 1 for _, m in fac.factors)
                assert (d % p == 0) == (not squarefree)

    def test_high_multiplicity_char_p(self):
        # x^9 - 1 = (x - 1)^9 mod 3 by the Frobenius; exercises the p-th
        # power branch of the squarefree decomposition
        f = parse_poly("x^9 - 1")
        fac = factor_mod_p(f, 3)
        assert fac.product() == f.reduce_mod(3)
        assert [(list(g.coeffs), m) for g, m in fac.factors] == [([2, 1], 9)]
        # mixed multiplicities: (x-1)^3 (x+1) x^2 mod 3
        g = parse_poly("x-1")
        mixed = g * g * g * parse_poly("x+1") * parse_poly("x^2")
        fac2 = factor_mod_p(mixed, 3)
        assert fac2.product() == mixed.reduce_mod(3)
        assert sorted((gg.degree, m) for gg, m in fac2.factors) == [(1, 1), (1, 2), (1, 3)]


class TestIrreducibleOverQ:
    def test_trivial_cases(self):
        assert is_irreducible_over_q(parse_poly("x^2+1")).status == "irreducible"
        res = is_irreducible_over_q(parse_poly("x^2-1"))
        assert res.status == "reducible"
        assert res.witness in (parse_poly("x-1"), parse_poly("x+1"))

    def test_x8_minus_97_by_sieve(self):
        res = is_irreducible_over_q(parse_poly("x^8-97"))
        assert res.status == "irreducible"
        assert res.method.startswith("degree-set sieve")

    def test_x8_minus_16_times_97(self):
        assert is_irreducible_over_q(parse_poly("x^8 - 1552")).status == "irreducible"

    def test_needs_zassenhaus(self):
        # (x^2+1)(x^2-2): no rational root, every degree pattern allows 2
        f = parse_poly("x^2+1") * parse_poly("x^2-2")
        res = is_irreducible_over_q(f)
        assert res.status == "reducible"
        assert res.witness is not None
        q, r = divmod(f, res.witness)
        assert r.is_zero() and 0 < res.witness.degree < 4

    def test_zassenhaus_products(self):
        rng = random.Random(31)
        for _ in range(15):
            a = IntPoly([rng.randint(-5, 5) for _ in range(rng.randint(2, 3))] + [1])
            b = IntPoly([rng.randint(-5, 5) for _ in range(rng.randint(2, 3))] + [1])
            f = a * b
            res = is_irreducible_over_q(f)
            assert res.status == "reducible"
            assert divmod(f, res.witness)[1].is_zero()
            assert 0 < res.witness.degree < f.degree

    def test_cyclotomic_like(self):
        assert is_irreducible_over_q(parse_poly("x^4+1")).status == "irreducible"
        assert is_irreducible_over_q(parse_poly("x^4+x^3+x^2+x+1")).status == "irreducible"
        assert is_irreducible_over_q(parse_poly("x^3-2")).status == "irreducible"

    def test_non_monic_rejected(self):
        with pytest.raises(ValueError):
            is_irreducible_over_q(parse_poly("2x^2+1"))

    def test_inconclusive_on_tiny_budget(self):
        effort = IrreducibilityEffort(
            sieve_prime_count=2, sieve_prime_bound=7, zassenhaus_max_degree=2
        )
        # degree 12, budget forbids zassenhaus; sieve with two primes may or
        # may not finish -- accept either irreducible or inconclusive, never
        # a wrong "reducible"
        f = parse_poly("x^12 - x - 1")
        res = is_irreducible_over_q(f, effort)
        assert res.status in ("irreducible", "inconclusive")
