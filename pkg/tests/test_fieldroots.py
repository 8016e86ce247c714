"""Exact root finding inside number fields."""

from fractions import Fraction

import pytest

from bcinv.fieldroots import roots_in_field
from bcinv.numberfield import NumberField, rationals
from bcinv.poly import IntPoly, parse_poly


def NF(text, label=None):
    return NumberField(parse_poly(text), label=label)


def eval_in_field(g: IntPoly, coords, f: IntPoly):
    """Independent check: evaluate g at sum coords[i] * theta^i in Q[y]/(f)
    with Fraction arithmetic."""
    fq = [Fraction(c) for c in f.coeffs]

    def mulmod(a, b):
        out = [Fraction(0)] * max(len(a) + len(b) - 1, 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        # reduce by monic fq
        n = len(fq) - 1
        for i in range(len(out) - 1, n - 1, -1):
            t = out[i]
            if t:
                out[i] = Fraction(0)
                for j in range(n):
                    out[i - n + j] -= t * fq[j]
        return out[:n]

    alpha = list(coords)
    acc = [Fraction(0)] * f.degree
    for c in reversed(g.coeffs):
        acc = mulmod(acc, alpha)
        acc[0] += c
    return all(v == 0 for v in acc)


class TestPositive:
    def test_self_root(self):
        k = NF("x^2+1")
        res = roots_in_field(parse_poly("x^2+1"), k)
        assert len(res.roots) == 2
        assert tuple(sorted(res.roots)) == (
            (Fraction(0), Fraction(-1)),
            (Fraction(0), Fraction(1)),
        )

    def test_shifted_generator(self):
        # x^2+4x+5 has roots -2 +- i in Q(i)
        k = NF("x^2+1")
        g = parse_poly("x^2+4x+5")
        res = roots_in_field(g, k)
        assert len(res.roots) == 2
        for coords in res.roots:
            assert eval_in_field(g, coords, k.defining_poly)
        assert (Fraction(-2), Fraction(1)) in res.roots

    def test_rational_field(self):
        res = roots_in_field(parse_poly("x^2-4"), rationals())
        assert sorted(c[0] for c in res.roots) == [Fraction(-2), Fraction(2)]

    def test_sqrt2_in_quartic(self):
        # x^4 - 2: theta^2 is a root of x^2 - 2
        k = NF("x^4-2")
        res = roots_in_field(parse_poly("x^2-2"), k)
        assert len(res.roots) == 2
        for coords in res.roots:
            assert eval_in_field(parse_poly("x^2-2"), coords, k.defining_poly)
        assert (Fraction(0), Fraction(0), Fraction(1), Fraction(0)) in res.roots

    def test_nontrivial_denominator(self):
        # In Q[x]/(x^2 - x - 1) the other root of f is 1 - theta; also check
        # a field where O_K needs half-integer coordinates: x^2 - 5 is not
        # used (non-maximal); instead take x^2-x-1 and g = x^2+x-1 with
        # roots -theta and theta - 1
        k = NF("x^2-x-1")
        g = parse_poly("x^2+x-1")
        res = roots_in_field(g, k)
        assert len(res.roots) == 2
        for coords in res.roots:
            assert eval_in_field(g, coords, k.defining_poly)

    def test_self_root_degree8(self):
        k = NF("x^8-97")
        res = roots_in_field(parse_poly("x^8-97"), k)
        # the two real 8th roots +-theta live in K; complex ones do not
        assert len(res.roots) == 2
        for coords in res.roots:
            assert eval_in_field(parse_poly("x^8-97"), coords, k.defining_poly)


class TestNegative:
    def test_i_not_in_real_field(self):
        res = roots_in_field(parse_poly("x^2+1"), NF("x^2-2"))
        assert res.roots == ()

    def test_sqrt2_not_in_gaussian(self):
        res = roots_in_field(parse_poly("x^2-2"), NF("x^2+1"))
        assert res.roots == ()

    def test_cbrt2_not_in_quadratic(self):
        res = roots_in_field(parse_poly("x^3-2"), NF("x^2+5"))
        assert res.roots == ()

    def test_arithmetically_equivalent_pair_non_isomorphic(self):
        # the headline witness: x^8-16*97 has no root in Q[x]/(x^8-97),
        # and conversely
        k = NF("x^8-97")
        res = roots_in_field(parse_poly("x^8-1552"), k)
        assert res.roots == ()
        assert res.candidates_checked >= 1  # local roots exist; all fail the lift
        k2 = NF("x^8-1552")
        res2 = roots_in_field(parse_poly("x^8-97"), k2)
        assert res2.roots == ()

    def test_rejects_non_monic(self):
        with pytest.raises(ValueError):
            roots_in_field(parse_poly("2x^2-1"), NF("x^2+1"))

    def test_rejects_inseparable(self):
        with pytest.raises(ValueError):
            roots_in_field(parse_poly("x^2+2x+1"), NF("x^2+1"))
