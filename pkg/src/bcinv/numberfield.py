"""Number fields presented by monic irreducible integer polynomials, and the
splitting of rational primes into prime ideals.

Splitting is computed from the factorization of the defining polynomial mod
p (Dedekind's theorem), which is valid exactly when Z[theta] is maximal at
p; that is decided first by the Dedekind criterion, and primes failing it
raise NotPMaximal rather than silently producing wrong data.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotPMaximal, ParseError, UnsupportedField
from .poly import (
    FactorizationFp,
    IntPoly,
    IrreducibilityEffort,
    ModPoly,
    discriminant,
    factor_mod_p,
    is_irreducible_over_q,
    parse_poly,
)
from .primes import is_prime, primes_up_to


class NumberField:
    """Q[x]/(f) for monic irreducible f; degree 1 means Q itself."""

    __slots__ = ("defining_poly", "degree", "disc_poly", "label", "irreducibility", "_cache")

    def __init__(self, defining_poly: IntPoly, label: str | None = None, *, assert_irreducible: bool = False):
        if not defining_poly.is_monic() or defining_poly.degree < 1:
            raise ParseError("defining polynomial must be monic of degree >= 1")
        if assert_irreducible:
            status = "asserted"
        else:
            res = is_irreducible_over_q(defining_poly)
            if res.status == "reducible":
                raise ParseError(
                    f"defining polynomial {defining_poly} is reducible (factor {res.witness})"
                )
            if res.status == "inconclusive":
                raise UnsupportedField(
                    "irreducibility could not be certified at this effort; "
                    "set assert_irreducible to proceed"
                )
            status = "certified"
        object.__setattr__(self, "defining_poly", defining_poly)
        object.__setattr__(self, "degree", defining_poly.degree)
        object.__setattr__(self, "disc_poly", discriminant(defining_poly))
        object.__setattr__(self, "label", label or str(defining_poly))
        object.__setattr__(self, "irreducibility", status)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("NumberField is immutable")

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.defining_poly == other.defining_poly

    def __hash__(self):
        return hash(("NumberField", self.defining_poly.coeffs))

    def __repr__(self):
        return f"NumberField({self.label!r}, {self.defining_poly})"

    def is_rationals(self) -> bool:
        return self.degree == 1

    def factorization_mod(self, p: int) -> FactorizationFp:
        key = ("fac", p)
        out = self._cache.get(key)
        if out is None:
            out = factor_mod_p(self.defining_poly, p)
            self._cache[key] = out
        return out


@dataclass(frozen=True)
class PrimeIdeal:
    """(p, h(theta)) with h monic irreducible mod p; norm p^f."""

    field: NumberField
    p: int
    e: int
    f: int
    generator_mod_p: ModPoly

    @property
    def norm(self) -> int:
        return self.p**self.f

    def sort_key(self):
        return (self.norm, self.p, self.generator_mod_p.coeffs)

    def __repr__(self):
        return f"PrimeIdeal(p={self.p}, e={self.e}, f={self.f}, gen={self.generator_mod_p})"


@dataclass(frozen=True)
class SplittingType:
    """Decomposition data of a rational prime: multiset of (e_i, f_i),
    canonically sorted by (f, e)."""

    field: NumberField
    p: int
    pairs: tuple[tuple[int, int], ...]
    p_maximal_certified: bool
    ideals: tuple[PrimeIdeal, ...]

    @property
    def g(self) -> int:
        return len(self.pairs)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "g": self.g,
            "pairs": [list(pair) for pair in self.pairs],
            "p_maximal": self.p_maximal_certified,
        }


def dedekind_criterion(field: NumberField, p: int) -> bool:
    """True iff Z[theta] is maximal at p.

    With fbar = prod g_i^{e_i}: g = prod g_i, h = prod g_i^{e_i - 1},
    T = (lift(g)*lift(h) - f)/p; maximal iff gcd(Tbar, gbar, hbar) = 1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    key = ("dedekind", p)
    cached = field._cache.get(key)
    if cached is not None:
        return cached
    if field.disc_poly % p != 0:
        field._cache[key] = True
        return True
    fac = field.factorization_mod(p)
    gbar = ModPoly([1], p)
    hbar = ModPoly([1], p)
    for gi, ei in fac.factors:
        gbar = gbar * gi
        for _ in range(ei - 1):
            hbar = hbar * gi
    prod = gbar.lift() * hbar.lift()
    diff = prod - field.defining_poly
    tcoeffs = []
    for c in diff.coeffs:
        q, r = divmod(c, p)
        assert r == 0, "Dedekind lift not divisible by p"
        tcoeffs.append(q)
    tbar = ModPoly(tcoeffs, p)
    d = tbar.gcd(gbar).gcd(hbar)
    result = d.degree == 0
    field._cache[key] = result
    return result


def split_prime(field: NumberField, p: int) -> SplittingType:
    """Splitting of p via Dedekind's theorem; requires p-maximality."""
    key = ("split", p)
    cached = field._cache.get(key)
    if cached is not None:
        return cached
    if not dedekind_criterion(field, p):
        raise NotPMaximal(p)
    fac = field.factorization_mod(p)
    ideals = []
    for gi, ei in fac.factors:
        ideals.append(PrimeIdeal(field=field, p=p, e=ei, f=gi.degree, generator_mod_p=gi))
    ideals.sort(key=PrimeIdeal.sort_key)
    pairs = tuple(sorted(((pi.e, pi.f) for pi in ideals), key=lambda t: (t[1], t[0])))
    n = field.degree
    assert sum(e * f for e, f in pairs) == n, "sum e_i f_i != degree"
    st = SplittingType(
        field=field, p=p, pairs=pairs, p_maximal_certified=True, ideals=tuple(ideals)
    )
    field._cache[key] = st
    return st


def prime_ideals_up_to(field: NumberField, norm_bound: int) -> list[PrimeIdeal]:
    """All prime ideals of norm <= norm_bound, sorted by (norm, p, generator);
    raises NotPMaximal for any offending rational prime <= norm_bound."""
    if norm_bound < 2:
        raise ValueError("norm bound must be >= 2")
    out: list[PrimeIdeal] = []
    for p in primes_up_to(norm_bound):
        st = split_prime(field, p)
        out.extend(pi for pi in st.ideals if pi.norm <= norm_bound)
    out.sort(key=PrimeIdeal.sort_key)
    return out


# ---------------------------------------------------------------------------
# field definition files


def parse_field_text(text: str, *, default_label: str | None = None) -> NumberField:
    """Field definition: lines of "key = value" with keys label, poly and
    optional assert_irreducible=true.  '#' starts a comment."""
    data: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for sep in ("=", ":"):
            if sep in line:
                key, val = line.split(sep, 1)
                break
        else:
            raise ParseError(f"line {lineno}: expected 'key = value', got {raw!r}")
        data[key.strip().lower()] = val.strip()
    if "poly" not in data:
        raise ParseError("field definition is missing the 'poly' key")
    poly = parse_poly(data["poly"])
    label = data.get("label") or default_label
    asserted = data.get("assert_irreducible", "").lower() in ("1", "true", "yes")
    return NumberField(poly, label=label, assert_irreducible=asserted)


def load_field_file(path) -> NumberField:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_field_text(text, default_label=str(path))


# convenient fixtures used across tests and docs
def rationals() -> NumberField:
    return NumberField(parse_poly("x - 1"), label="Q")
