"""Spectrum strata: containment lattice, classification, components."""

import random

import pytest

from bcinv.errors import NotPMaximal
from bcinv.numberfield import NumberField, rationals
from bcinv.poly import parse_poly
from bcinv.spectrum import (
    PrimeUniverse,
    classify,
    closure,
    components_of_I2,
    contains,
    count_components_labeled,
)


def NF(text, label=None):
    return NumberField(parse_poly(text), label=label)


@pytest.fixture(scope="module")
def qi_universe():
    return PrimeUniverse.by_norm(NF("x^2+1", "Q(i)"), 5)


class TestUniverse:
    def test_by_norm_gaussian(self, qi_universe):
        assert [pi.norm for pi in qi_universe.primes] == [2, 5, 5]

    def test_by_norm_propagates(self):
        with pytest.raises(NotPMaximal):
            PrimeUniverse.by_norm(NF("x^2-5"), 10)

    def test_over_rational_skips(self):
        u = PrimeUniverse.over_rational_primes(NF("x^8-97"), 10)
        assert u.skipped == (2,)
        assert all(pi.p in (3, 5, 7) for pi in u.primes)
        # every ideal above each kept rational prime is present
        assert sum(e * f for pi in u.primes for e, f in [(pi.e, pi.f)]) == 3 * 8

    def test_membership_guard(self, qi_universe):
        other = PrimeUniverse.by_norm(NF("x^2+5"), 5)
        with pytest.raises(ValueError):
            qi_universe.finite_point(other.primes[:1])


class TestContains:
    def test_empty_in_everything(self, qi_universe):
        u = qi_universe
        empty = u.empty_point()
        for target in (u.finite_point(u.primes[:1]), u.full_point(), u.cofinite_point(u.primes[:2])):
            assert contains(empty, target)

    def test_cofinite_in_full(self, qi_universe):
        u = qi_universe
        assert contains(u.second_maximal_point(u.primes[0]), u.full_point())

    def test_distinct_complements_incomparable(self, qi_universe):
        u = qi_universe
        a = u.second_maximal_point(u.primes[0])
        b = u.second_maximal_point(u.primes[1])
        assert not contains(a, b) and not contains(b, a)

    def test_cofinite_never_in_finite(self, qi_universe):
        u = qi_universe
        assert not contains(u.full_point(), u.finite_point(u.primes))

    def test_cross_universe_rejected(self, qi_universe):
        other = PrimeUniverse.by_norm(NF("x^2+1"), 5)
        # equal universes are fine even if distinct objects
        assert contains(other.empty_point(), qi_universe.full_point())
        smaller = PrimeUniverse.by_norm(NF("x^2+1"), 2)
        with pytest.raises(ValueError):
            contains(smaller.empty_point(), qi_universe.full_point())

    def test_fixed_fiber_required(self, qi_universe):
        u = qi_universe
        with pytest.raises(ValueError):
            contains(u.empty_point("gamma"), u.full_point("delta"))

    def test_partial_order_random(self, qi_universe):
        u = PrimeUniverse.by_norm(NF("x^2+1"), 50)
        rng = random.Random(97)

        def random_point():
            kind = rng.choice(("finite", "cofinite"))
            members = [pi for pi in u.primes if rng.random() < 0.3]
            return u.finite_point(members) if kind == "finite" else u.cofinite_point(members)

        def as_set(pt):
            # subsets of an ambient infinite set: encode cofinite via flag
            return (pt.kind, frozenset(pt.members))

        def subset(pt1, pt2):
            k1, m1 = as_set(pt1)
            k2, m2 = as_set(pt2)
            if k1 == "finite" and k2 == "finite":
                return m1 <= m2
            if k1 == "finite" and k2 == "cofinite":
                return not (m1 & m2)
            if k1 == "cofinite" and k2 == "finite":
                return False
            return m2 <= m1

        pts = [random_point() for _ in range(60)]
        for a in pts:
            assert contains(a, a)
        for _ in range(3000):
            a, b, c = rng.choice(pts), rng.choice(pts), rng.choice(pts)
            assert contains(a, b) == subset(a, b)
            if contains(a, b) and contains(b, a):
                assert a == b
            if contains(a, b) and contains(b, c):
                assert contains(a, c)


class TestClassify:
    def test_examples(self, qi_universe):
        u = qi_universe
        assert classify(u.full_point()) == "maximal"
        assert classify(u.second_maximal_point(u.primes[0])) == "second_maximal"
        assert classify(u.empty_point()) == "other"
        assert classify(u.finite_point(u.primes[:1])) == "other"
        assert classify(u.cofinite_point(u.primes[:2])) == "other"


class TestClosure:
    def test_maximal_point(self, qi_universe):
        full = qi_universe.full_point()
        assert closure(full) == [full]

    def test_second_maximal(self, qi_universe):
        u = qi_universe
        pt = u.second_maximal_point(u.primes[0])
        cl = closure(pt)
        assert set(cl) == {pt, u.full_point()}

    def test_empty_contains_all_distinguished(self, qi_universe):
        u = qi_universe
        cl = set(closure(u.empty_point()))
        assert u.empty_point() in cl and u.full_point() in cl
        for pi in u.primes:
            assert u.second_maximal_point(pi) in cl


class TestComponents:
    def test_gaussian_labels(self, qi_universe):
        comps = components_of_I2(qi_universe)
        assert [c.label for c in comps] == ["Z[1/2]", "Z[1/5]", "Z[1/5]"]
        assert count_components_labeled(comps, 5) == 2
        assert count_components_labeled(comps, 2) == 1
        assert all(classify(c.point) == "second_maximal" for c in comps)

    def test_rationals(self):
        u = PrimeUniverse.by_norm(rationals(), 3)
        comps = components_of_I2(u)
        assert [c.label for c in comps] == ["Z[1/2]", "Z[1/3]"]

    def test_one_component_per_prime(self):
        u = PrimeUniverse.over_rational_primes(NF("x^2+5"), 20)
        comps = components_of_I2(u)
        assert len(comps) == len(u.primes)

    def test_second_maximal_incomparable(self, qi_universe):
        comps = components_of_I2(qi_universe)
        for i, a in enumerate(comps):
            for b in comps[i + 1 :]:
                assert not contains(a.point, b.point)
                assert not contains(b.point, a.point)
