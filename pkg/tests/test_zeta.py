"""Euler products against independent series oracles; coefficient counts."""

import math
from decimal import Decimal

import pytest

from bcinv.errors import NotPMaximal
from bcinv.numberfield import NumberField, rationals
from bcinv.poly import parse_poly
from bcinv.zeta import (
    euler_product,
    ideal_count_coefficients,
    zeta_equal_up_to,
)


def NF(text, label=None):
    return NumberField(parse_poly(text), label=label)


def zeta2_series_oracle(terms: int) -> Decimal:
    """sum_{n<=terms} n^-2 by scaled-integer arithmetic (40 guard digits)."""
    scale = 10**40
    total = sum(scale // (n * n) for n in range(1, terms + 1))
    return Decimal(total) / Decimal(scale)


def l_chi4_series_oracle(terms: int) -> Decimal:
    """L(chi_-4, 2) = 1 - 1/9 + 1/25 - ... with alternating tail bound."""
    scale = 10**40
    total = 0
    for k in range(terms):
        d = (2 * k + 1) ** 2
        total += (scale // d) if k % 2 == 0 else -(scale // d)
    return Decimal(total) / Decimal(scale)


class TestEulerProduct:
    def test_empty_product(self):
        assert euler_product(NF("x^2+1"), 2, 1) == Decimal(1)

    def test_q_matches_series(self):
        got = euler_product(rationals(), 2, 10**4)
        want = zeta2_series_oracle(10**6)
        assert abs(got - want) < Decimal("1e-4")

    def test_gaussian_matches_product_of_series(self):
        got = euler_product(NF("x^2+1"), 2, 10**4)
        want = zeta2_series_oracle(10**6) * l_chi4_series_oracle(10**4)
        assert abs(got - want) < Decimal("1e-4")

    def test_monotone_in_bound(self):
        k = NF("x^2+1")
        vals = [euler_product(k, 2, B) for B in (10, 50, 200, 1000)]
        assert all(a <= b for a, b in zip(vals, vals[1:]))

    def test_nonincreasing_in_s(self):
        k = rationals()
        vals = [euler_product(k, s, 500) for s in ("1.5", "2", "3", "4")]
        assert all(a >= b for a, b in zip(vals, vals[1:]))

    def test_s_leq_1_rejected(self):
        with pytest.raises(ValueError):
            euler_product(rationals(), 1, 100)
        with pytest.raises(ValueError):
            euler_product(rationals(), "0.5", 100)

    def test_not_maximal_propagates(self):
        with pytest.raises(NotPMaximal):
            euler_product(NF("x^2-5"), 2, 100)


class TestCoefficients:
    def test_rationals_all_one(self):
        a, skipped = ideal_count_coefficients(rationals(), 200)
        assert skipped == []
        assert all(a[n] == 1 for n in range(1, 201))

    def test_gaussian_examples(self):
        a, _ = ideal_count_coefficients(NF("x^2+1"), 20)
        assert a[5] == 2
        assert a[3] == 0

    def test_gaussian_sum_of_squares_oracle(self):
        # ideals of Z[i] of norm n <-> representations n = x^2+y^2 up to units
        a, _ = ideal_count_coefficients(NF("x^2+1"), 60)
        for n in range(1, 61):
            reps = 0
            r = math.isqrt(n)
            for x in range(-r, r + 1):
                y2 = n - x * x
                y = math.isqrt(y2)
                if y * y == y2:
                    reps += 2 if y else 1
            assert a[n] == reps // 4, n

    def test_multiplicative(self):
        for field in (NF("x^2+1"), NF("x^2+5"), NF("x^3-2")):
            a, _ = ideal_count_coefficients(field, 400)
            assert a[1] == 1
            for m in range(2, 20):
                for n in range(2, 400 // m):
                    if math.gcd(m, n) == 1:
                        assert a[m * n] == a[m] * a[n]

    def test_partial_sums_below_product(self):
        field = NF("x^2+1")
        N = 200
        a, _ = ideal_count_coefficients(field, N)
        partial = sum(Decimal(a[n]) / Decimal(n) ** 2 for n in range(1, N + 1))
        assert partial <= euler_product(field, 2, N * 2)

    def test_skip_mode_marks_unreliable(self):
        a, skipped = ideal_count_coefficients(NF("x^8-97"), 20, skip_not_maximal=True)
        assert skipped == [2]
        assert a[2] == -1 and a[4] == -1
        assert a[3] >= 0


class TestZetaEqual:
    def test_identical_fields(self):
        q = rationals()
        res = zeta_equal_up_to(q, q, 100)
        assert res.status == "agree"
        assert "not a proof" in res.caveat

    def test_gaussian_vs_eisenstein(self):
        res = zeta_equal_up_to(NF("x^2+1"), NF("x^2+x+1"), 10)
        assert res.status == "first_disagreement"
        assert res.n == 2
        assert (res.a_n_left, res.a_n_right) == (1, 0)

    def test_skips_reported(self):
        res = zeta_equal_up_to(NF("x^8-97"), NF("x^8-1552"), 50)
        assert res.skipped_left == (2,) and res.skipped_right == (2,)
        assert res.status == "agree"
        assert "outside Dedekind scope" in res.caveat
