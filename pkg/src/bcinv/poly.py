"""Exact univariate polynomial arithmetic over Z and Z/q, factorization over
prime fields, resultants and discriminants, and irreducibility over Q.

Coefficient sequences are stored lowest degree first.  All arithmetic is
exact integer arithmetic; nothing in this module touches floating point.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import random
import re
from dataclasses import dataclass

from . import _backend as kern
from .errors import ParseError
from .primes import is_prime, primes_up_to

_VAR_RE = re.compile(r"[a-zA-Z]+")
_TERM_RE = re.compile(r"^([+-]?)(\d+)?(?:\*?([a-zA-Z]+)(?:\^(\d+))?)?$")


def _trimmed(coeffs) -> tuple[int, ...]:
    c = [int(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Integer polynomial; immutable, trimmed so the leading coefficient is
    nonzero (the zero polynomial is the empty sequence, degree -1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trimmed(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    def __divmod__(self, other):
        """Euclidean division; the divisor's leading coefficient must be a
        unit of Z (that is, +-1)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero polynomial")
        if other.lc not in (1, -1):
            raise ValueError("divisor leading coefficient is not invertible over Z")
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        q = [0] * max(len(r) - db, 0)
        for i in range(len(q) - 1, -1, -1):
            f = r[i + db] * b[-1]  # lc in {1,-1} so this is exact
            if f:
                q[i] = f
                for j in range(db + 1):
                    r[i + j] -= f * b[j]
        return IntPoly(q), IntPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def scale(self, k: int) -> IntPoly:
        return IntPoly([c * k for c in self.coeffs])

    def derivative(self) -> IntPoly:
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_part(self) -> IntPoly:
        c = self.content()
        if c in (0, 1):
            return self
        return IntPoly([v // c for v in self.coeffs])

    def gcd(self, other: IntPoly) -> IntPoly:
        """Greatest common divisor over Z, positive leading coefficient."""
        a, b = self, other
        if a.is_zero() and b.is_zero():
            return IntPoly()
        cont = math.gcd(a.content(), b.content())
        a, b = a.primitive_part(), b.primitive_part()
        if a.degree < b.degree:
            a, b = b, a
        while not b.is_zero():
            r = _pseudo_rem(a, b)
            a, b = b, r.primitive_part()
        g = a.scale(cont) if cont > 1 else a
        return g if g.lc > 0 else -g

    def powmod(self, e: int, modulus: IntPoly) -> IntPoly:
        """self**e mod modulus over Z; modulus leading coefficient +-1."""
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPoly([1]) % modulus
        acc = self % modulus
        while e:
            if e & 1:
                result = (result * acc) % modulus
            e >>= 1
            if e:
                acc = (acc * acc) % modulus
        return result

    def __call__(self, x: int) -> int:
        y = 0
        for c in reversed(self.coeffs):
            y = y * x + c
        return y

    def reduce_mod(self, q: int) -> ModPoly:
        return ModPoly([c % q for c in self.coeffs], q)

    def shift_compose(self, a: int) -> IntPoly:
        """f(x + a), by Horner on the polynomial ring."""
        out = IntPoly()
        xa = IntPoly([a, 1])
        for c in reversed(self.coeffs):
            out = out * xa + IntPoly([c])
        return out

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return poly_to_str(self.coeffs)


class ModPoly:
    """Polynomial with coefficients in Z/q (q >= 2), normalized into [0, q)."""

    __slots__ = ("coeffs", "q")

    def __init__(self, coeffs, q: int):
        if q < 2:
            raise ValueError("modulus must be >= 2")
        c = [int(v) % q for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("ModPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other: ModPoly):
        if self.q != other.q:
            raise ValueError("mixed moduli")

    def __eq__(self, other):
        return (
            isinstance(other, ModPoly) and self.q == other.q and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(("ModPoly", self.q, self.coeffs))

    def __neg__(self):
        return ModPoly([-c for c in self.coeffs], self.q)

    def __add__(self, other):
        self._check(other)
        a, b = list(self.coeffs), other.coeffs
        if len(a) < len(b):
            a, b = list(b), self.coeffs
        for i, v in enumerate(b):
            a[i] += v
        return ModPoly(a, self.q)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        return ModPoly(kern.pmod_mul(list(self.coeffs), list(other.coeffs), self.q), self.q)

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero polynomial")
        if math.gcd(other.lc, self.q) != 1:
            raise ValueError("divisor leading coefficient is not invertible mod q")
        qq, rr = kern.pmod_divmod(list(self.coeffs), list(other.coeffs), self.q)
        return ModPoly(qq, self.q), ModPoly(rr, self.q)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def gcd(self, other: ModPoly) -> ModPoly:
        self._check(other)
        if not is_prime(self.q):
            raise ValueError("gcd requires a prime modulus")
        return ModPoly(kern.pmod_gcd(list(self.coeffs), list(other.coeffs), self.q), self.q)

    def powmod(self, e: int, modulus: ModPoly) -> ModPoly:
        self._check(modulus)
        if math.gcd(modulus.lc, self.q) != 1:
            raise ValueError("modulus leading coefficient is not invertible mod q")
        return ModPoly(
            kern.pmod_powmod(list(self.coeffs), e, list(modulus.coeffs), self.q), self.q
        )

    def monic(self) -> ModPoly:
        if self.is_zero() or self.is_monic():
            return self
        inv = pow(self.lc, -1, self.q)
        return ModPoly([c * inv for c in self.coeffs], self.q)

    def derivative(self) -> ModPoly:
        return ModPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.q)

    def __call__(self, x: int) -> int:
        y = 0
        for c in reversed(self.coeffs):
            y = (y * x + c) % self.q
        return y

    def lift(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def lift_symmetric(self) -> IntPoly:
        half = self.q // 2
        return IntPoly([c - self.q if c > half else c for c in self.coeffs])

    def __repr__(self):
        return f"ModPoly({list(self.coeffs)}, q={self.q})"

    def __str__(self):
        return poly_to_str(self.coeffs)


@dataclass(frozen=True)
class FactorizationFp:
    """Complete factorization over F_p: monic irreducible factors with
    multiplicities, sorted by (degree, coefficient sequence)."""

    p: int
    unit: int  # leading coefficient of the input mod p
    factors: tuple[tuple[ModPoly, int], ...]

    def product(self) -> ModPoly:
        out = ModPoly([1], self.p)
        for g, m in self.factors:
            for _ in range(m):
                out = out * g
        return out

    def degree_pattern(self) -> tuple[tuple[int, int], ...]:
        """Multiset of (multiplicity, degree) pairs, sorted by (degree, mult)."""
        return tuple(sorted(((m, g.degree) for g, m in self.factors), key=lambda t: (t[1], t[0])))


# ---------------------------------------------------------------------------
# parsing and rendering


def parse_poly(text: str) -> IntPoly:
    """Parse "x^8 - 97", "x^2 + x + 1" or a lowest-first coefficient list
    "[-97,0,0,0,0,0,0,0,1]".  Whitespace-insensitive; one variable symbol."""
    if not isinstance(text, str):
        raise ParseError("polynomial must be given as text")
    s = text.replace("−", "-").strip()
    if not s:
        raise ParseError("empty polynomial")
    if s.startswith("["):
        if not s.endswith("]"):
            raise ParseError("unterminated coefficient list")
        body = s[1:-1].strip()
        if not body:
            raise ParseError("empty coefficient list")
        try:
            coeffs = [int(part.strip()) for part in body.split(",")]
        except ValueError as exc:
            raise ParseError(f"bad coefficient list: {exc}") from None
        return IntPoly(coeffs)

    compact = re.sub(r"\s+", "", s)
    names = set(_VAR_RE.findall(compact))
    if len(names) > 1:
        raise ParseError(f"more than one variable symbol: {sorted(names)}")
    terms = re.findall(r"[+-]?[^+-]+|[+-](?=[+-])", compact)
    if not terms or "".join(terms) != compact:
        raise ParseError(f"cannot parse polynomial {text!r}")
    acc: dict[int, int] = {}
    for term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ParseError(f"bad term {term!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(3) is None:
            exp = 0
        else:
            exp = int(m.group(4)) if m.group(4) is not None else 1
        acc[exp] = acc.get(exp, 0) + sign * coeff
    out = [0] * (max(acc) + 1)
    for exp, c in acc.items():
        out[exp] = c
    return IntPoly(out)


def poly_to_str(coeffs, var: str = "x") -> str:
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif i == 1:
            body = f"{var}" if mag == 1 else f"{mag}{var}"
        else:
            body = f"{var}^{i}" if mag == 1 else f"{mag}{var}^{i}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# factorization over F_p


def _seed_for(f_coeffs, p: int) -> int:
    blob = repr((p, tuple(f_coeffs))).encode()
    return int.from_bytes(hashlib.sha256(blob).digest()[:8], "big")


def factor_mod_p(f: IntPoly | ModPoly, p: int) -> FactorizationFp:
    """Complete factorization of f mod p into monic irreducibles.

    Deterministic: the equal-degree splitting draws from a PRNG seeded by
    (f mod p, p), so output is reproducible and thread-independent.
    """
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if isinstance(f, ModPoly):
        if f.q != p:
            raise ValueError("ModPoly modulus disagrees with p")
        fbar = list(f.coeffs)
    else:
        fbar = [c % p for c in f.coeffs]
        kern.trim(fbar)
    if not fbar:
        raise ValueError("polynomial is zero mod p")
    unit = fbar[-1]
    if unit != 1:
        inv = pow(unit, -1, p)
        fbar = [c * inv % p for c in fbar]
    rng = random.Random(_seed_for(fbar, p))

    found: list[tuple[tuple[int, ...], int]] = []
    for part, mult in _squarefree_parts(fbar, p):
        for g, d in _distinct_degree(part, p):
            for irr in _equal_degree(g, d, p, rng):
                found.append((tuple(irr), mult))
    found.sort(key=lambda t: (len(t[0]) - 1, t[0]))
    factors = tuple((ModPoly(c, p), m) for c, m in found)
    result = FactorizationFp(p=p, unit=unit, factors=factors)
    prod = result.product()
    assert list(prod.coeffs) == fbar, "factorization self-check failed"
    return result


def _squarefree_parts(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Squarefree decomposition in characteristic p: list of (g, m) with g
    monic squarefree, the g pairwise coprime, and prod g^m = f."""
    out: list[tuple[list[int], int]] = []

    def deriv(a):
        d = [i * c % p for i, c in enumerate(a)][1:]
        return kern.trim(d)

    def pth_root(a):
        # a is a polynomial in x^p; coefficientwise p-th root is identity on F_p
        return a[::p] if a else []

    def rec(f, scale):
        fp = deriv(f)
        if not fp:
            rec(pth_root(f), scale * p)
            return
        c = kern.pmod_gcd(f, fp, p)
        w, _ = kern.pmod_divmod(f, c, p)
        i = 1
        while len(w) > 1:
            y = kern.pmod_gcd(w, c, p)
            z, _ = kern.pmod_divmod(w, y, p)
            if len(z) > 1:
                out.append((z, i * scale))
            w = y
            c, _ = kern.pmod_divmod(c, y, p)
            i += 1
        if len(c) > 1:
            rec(pth_root(c), scale * p)

    rec(f, 1)
    return out


def _distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Distinct-degree split of monic squarefree f: list of (product, d)."""
    out = []
    v = f
    h = [0, 1]  # x
    d = 0
    while len(v) - 1 > 2 * d:
        d += 1
        h = kern.pmod_powmod(h, p, v, p)
        hx = list(h)
        # h - x
        while len(hx) < 2:
            hx.append(0)
        hx[1] = (hx[1] - 1) % p
        kern.trim(hx)
        g = kern.pmod_gcd(hx, v, p)
        if len(g) > 1:
            out.append((g, d))
            v, _ = kern.pmod_divmod(v, g, p)
            h = kern.pmod_rem(h, v, p) if len(v) > 1 else []
    if len(v) > 1:
        out.append((v, len(v) - 1))
    return out


def _equal_degree(g: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Split a product of distinct irreducibles of degree d into the factors
    (Cantor-Zassenhaus; trace map for p = 2)."""
    n = len(g) - 1
    if n == d:
        return [g]
    while True:
        r = [rng.randrange(p) for _ in range(n)]
        kern.trim(r)
        if len(r) < 2:
            continue
        if p == 2:
            w = list(r)
            acc = list(r)
            for _ in range(d - 1):
                acc = kern.pmod_mulmod(acc, acc, g, p)
                w = _add_mod(w, acc, p)
            h = kern.pmod_gcd(w, g, p)
        else:
            e = (p**d - 1) // 2
            w = kern.pmod_powmod(r, e, g, p)
            w1 = list(w)
            if not w1:
                w1 = [p - 1]
            else:
                w1[0] = (w1[0] - 1) % p
            kern.trim(w1)
            h = kern.pmod_gcd(w1, g, p)
        if 1 < len(h) < len(g):
            rest, _ = kern.pmod_divmod(g, h, p)
            return _equal_degree(h, d, p, rng) + _equal_degree(rest, d, p, rng)


def _add_mod(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return kern.trim(out)


def pmod_extgcd(a: list[int], b: list[int], p: int):
    """Extended gcd over F_p: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = kern.pmod_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub_mod(s0, kern.pmod_mul(q, s1, p), p)
        t0, t1 = t1, _sub_mod(t0, kern.pmod_mul(q, t1, p), p)
    if r0 and r0[-1] != 1:
        inv = pow(r0[-1], -1, p)
        r0 = [c * inv % p for c in r0]
        s0 = [c * inv % p for c in s0]
        t0 = [c * inv % p for c in t0]
    return r0, s0, t0


def _sub_mod(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return kern.trim(out)


# ---------------------------------------------------------------------------
# resultants and discriminants


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a by b, exact."""
    return _prem_exact(a, b)


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Res(a, b) by the subresultant PRS, exact integer arithmetic."""
    if a.is_zero() or b.is_zero():
        return 0
    s = 1
    if a.degree < b.degree:
        if (a.degree % 2) and (b.degree % 2):
            s = -s
        a, b = b, a
    if b.degree == 0:
        return s * b.lc ** a.degree
    ca, cb = a.content(), b.content()
    if a.lc < 0:
        ca = -ca
    if b.lc < 0:
        cb = -cb
    A = IntPoly([v // ca for v in a.coeffs])
    B = IntPoly([v // cb for v in b.coeffs])
    t = ca**B.degree * cb**A.degree
    g = 1
    h = 1
    while True:
        delta = A.degree - B.degree
        if (A.degree % 2) and (B.degree % 2):
            s = -s
        R = _prem_exact(A, B)
        A = B
        denom = g * h**delta
        B = IntPoly([v // denom for v in R.coeffs])
        if B.is_zero():
            if A.degree > 0:
                return 0
            break
        g = A.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        if B.degree == 0:
            break
    # here B is a nonzero constant and A has degree >= 1
    dA = A.degree
    if dA == 0:
        return s * t  # both constants after content removal: degenerate
    if dA == 1:
        hout = B.lc
    else:
        hout = B.lc**dA // h ** (dA - 1)
    return s * t * hout


def _prem_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r."""
    da, db = a.degree, b.degree
    if db < 0:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    if da < db:
        return a
    lb = b.lc
    e = da - db + 1
    r = list(a.coeffs)
    steps = 0
    while True:
        dr = len(r) - 1
        while dr >= 0 and r[dr] == 0:
            dr -= 1
        if dr < db:
            break
        top = r[dr]
        r = [v * lb for v in r]
        for j in range(db + 1):
            r[dr - db + j] -= top * b.coeffs[j]
        steps += 1
    scale = lb ** (e - steps)
    return IntPoly([v * scale for v in r])


def discriminant(f: IntPoly) -> int:
    """disc(f) = (-1)^(n(n-1)/2) * Res(f, f') / lc(f), exact."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, r = divmod(res, f.lc)
    assert r == 0
    return sign * q


# ---------------------------------------------------------------------------
# irreducibility over Q


@dataclass(frozen=True)
class IrreducibilityEffort:
    sieve_prime_count: int = 7
    sieve_prime_bound: int = 500
    zassenhaus_max_degree: int = 10


@dataclass(frozen=True)
class IrreducibilityResult:
    status: str  # "irreducible" | "reducible" | "inconclusive"
    witness: IntPoly | None = None  # a proper factor when reducible
    method: str = ""


def is_irreducible_over_q(
    f: IntPoly, effort: IrreducibilityEffort | None = None
) -> IrreducibilityResult:
    """Certify irreducibility of a monic integer polynomial over Q.

    Path: rational roots, then a degree-set sieve over several good primes,
    then Zassenhaus (Hensel lift plus recombination) up to the effort's
    degree budget.  "inconclusive" only when the budget is exhausted.
    """
    effort = effort or IrreducibilityEffort()
    if not f.is_monic():
        raise ValueError("irreducibility test requires a monic polynomial")
    n = f.degree
    if n == 1:
        return IrreducibilityResult("irreducible", method="degree 1")
    if f.coeffs[0] == 0:
        return IrreducibilityResult("reducible", IntPoly([0, 1]), method="rational root 0")
    for r in _divisors_signed(f.coeffs[0]):
        if f(r) == 0:
            return IrreducibilityResult(
                "reducible", IntPoly([-r, 1]), method=f"rational root {r}"
            )
    if n <= 3:
        return IrreducibilityResult("irreducible", method="no rational root, degree <= 3")

    disc = discriminant(f)
    good_primes = []
    for p in primes_up_to(effort.sieve_prime_bound):
        if disc % p != 0:
            good_primes.append(p)
        if len(good_primes) >= effort.sieve_prime_count:
            break

    possible = set(range(1, n))  # attainable proper factor degrees
    sieve_data = []
    for p in good_primes:
        fac = factor_mod_p(f, p)
        degs = [g.degree for g, _ in fac.factors]
        sieve_data.append((p, degs))
        attain = {0}
        for d in degs:
            attain |= {a + d for a in attain}
        possible &= attain
        if not possible:
            return IrreducibilityResult(
                "irreducible", method=f"degree-set sieve over {len(sieve_data)} primes"
            )

    if n > effort.zassenhaus_max_degree:
        return IrreducibilityResult("inconclusive", method="effort budget exhausted")

    witness = _zassenhaus_factor(f, sieve_data)
    if witness is None:
        return IrreducibilityResult("irreducible", method="zassenhaus")
    return IrreducibilityResult("reducible", witness, method="zassenhaus")


def _divisors_signed(a0: int):
    a = abs(a0)
    out = []
    for d in range(1, math.isqrt(a) + 1):
        if a % d == 0:
            out.extend((d, -d, a // d, -(a // d)))
    return sorted(set(out), key=abs)


def _zassenhaus_factor(f: IntPoly, sieve_data) -> IntPoly | None:
    """Return a proper monic factor of f over Z, or None if irreducible.
    f monic, squarefree mod every prime in sieve_data."""
    n = f.degree
    p, degs = min(
        ((p, d) for p, d in sieve_data if p % 2 == 1),
        key=lambda t: (len(t[1]), t[0]),
    )
    fac = factor_mod_p(f, p)
    modular = [list(g.coeffs) for g, _ in fac.factors]
    r = len(modular)
    if r == 1:
        return None
    norm2 = math.isqrt(sum(c * c for c in f.coeffs)) + 1
    bound = math.comb(n - 1, (n - 1) // 2) * norm2
    k = 1
    pk = p
    while pk <= 2 * bound:
        pk *= p
        k += 1
    lifted = _hensel_lift_list(f, modular, p, pk)

    pool = list(range(r))
    current = f
    found: list[IntPoly] = []
    target = pk

    def subset_product(idxs):
        acc = [1]
        for i in idxs:
            acc = _mul_mod_int(acc, lifted[i], target)
        return acc

    size = 1
    while 2 * size <= len(pool):
        progressed = False
        for combo in itertools.combinations(pool, size):
            cand = subset_product(combo)
            g = IntPoly([c - target if c > target // 2 else c for c in cand])
            if g.degree == 0 or g.degree >= current.degree:
                continue
            q, rem = divmod(current, g)
            if rem.is_zero():
                found.append(g)
                current = q
                pool = [i for i in pool if i not in combo]
                progressed = True
                break
        if not progressed:
            size += 1
    if found:
        return found[0]
    return None


def _mul_mod_int(a: list[int], b: list[int], m: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [v % m for v in out]


def _hensel_lift_list(f: IntPoly, factors: list[list[int]], p: int, pk: int) -> list[list[int]]:
    """Lift a pairwise-coprime monic factorization of f mod p to mod pk
    (pk a power of p); returns factors mod pk, product = f mod pk."""
    if len(factors) == 1:
        return [[c % pk for c in f.coeffs]]
    mid = len(factors) // 2
    left, right = factors[:mid], factors[mid:]
    g = [1]
    for a in left:
        g = kern.pmod_mul(g, a, p)
    h = [1]
    for a in right:
        h = kern.pmod_mul(h, a, p)
    one, s, t = pmod_extgcd(g, h, p)
    assert one == [1], "modular factors not coprime"
    g, h, s, t = _hensel_pair(f, g, h, s, t, p, pk)
    gp = IntPoly(g)
    hp = IntPoly(h)
    return _hensel_lift_list(gp, left, p, pk) + _hensel_lift_list(hp, right, p, pk)


def _hensel_pair(f, g, h, s, t, p, pk):
    """Quadratic Hensel lifting of f = g*h with s*g + t*h = 1 from mod p up
    to mod pk (g, h monic; all coefficient lists except f)."""
    m = p
    fc = list(f.coeffs)
    while m < pk:
        m2 = min(m * m, pk)
        e = _sub_int(fc, _mul_mod_int(g, h, m2), m2)
        q, r = _divmod_monic_int(_mul_mod_int(s, e, m2), h, m2)
        g = _add_int(g, _add_int(_mul_mod_int(t, e, m2), _mul_mod_int(q, g, m2), m2), m2)
        h = _add_int(h, r, m2)
        b = _sub_int(_add_int(_mul_mod_int(s, g, m2), _mul_mod_int(t, h, m2), m2), [1], m2)
        c, d = _divmod_monic_int(_mul_mod_int(s, b, m2), h, m2)
        s = _sub_int(s, d, m2)
        t = _sub_int(t, _add_int(_mul_mod_int(t, b, m2), _mul_mod_int(c, g, m2), m2), m2)
        m = m2
    return g, h, s, t


def _add_int(a, b, m):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % m
    return kern.trim(out)


def _sub_int(a, b, m):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % m
    return kern.trim(out)


def _divmod_monic_int(a, b, m):
    """Divide by monic b with coefficients mod m."""
    assert b and b[-1] == 1
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return [], kern.trim(r)
    q = [0] * (len(r) - db)
    for i in range(len(q) - 1, -1, -1):
        fcoef = r[i + db] % m
        if fcoef:
            q[i] = fcoef
            for j in range(db + 1):
                r[i + j] = (r[i + j] - fcoef * b[j]) % m
        else:
            r[i + db] = 0
    return kern.trim(q), kern.trim(r)
