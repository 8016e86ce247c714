"""Exact determination of the roots of a monic integer polynomial g inside a
number field K = Q[y]/(f).

Method: pick a prime p with f squarefree mod p and g separable mod p.  Any
root alpha in K is an algebraic integer, and beta = f'(theta)*alpha lies in
Z[theta] with integer coordinates bounded by an explicit Hadamard-style
bound.  Every root of g in the residue algebra F_p[y]/(f) is found by
finite-field factorization, Newton-lifted to Z[y]/(f, p^k) with p^k beyond
twice the bound, and the symmetric lift is verified exactly over Z: alpha =
b(theta)/f'(theta) is a root iff f divides sum_j g_j b^j f'^(deg g - j).
Candidates that fail are discarded; if none verifies, g has no root in K.
The negative answer is sound because a true root must reduce to one of the
enumerated residue roots and lifts uniquely (simple roots).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _backend as kern
from .errors import UnsupportedField
from .numberfield import NumberField
from .poly import IntPoly, discriminant, factor_mod_p, pmod_extgcd
from .primes import primes_up_to

import hashlib
import random


# ---------------------------------------------------------------------------
# arithmetic in F_q = F_p[y]/(m) and for polynomials over F_q


class GFq:
    """The finite field F_p[y]/(m), m monic irreducible over F_p."""

    def __init__(self, m: list[int], p: int):
        self.m = list(m)
        self.p = p
        self.deg = len(m) - 1
        self.q = p**self.deg

    def reduce(self, a: list[int]) -> tuple[int, ...]:
        return tuple(kern.pmod_rem([c % self.p for c in a], self.m, self.p))

    def add(self, a, b):
        out = list(a) + [0] * max(0, len(b) - len(a))
        for i, v in enumerate(b):
            out[i] = (out[i] + v) % self.p
        return tuple(kern.trim(out))

    def sub(self, a, b):
        out = list(a) + [0] * max(0, len(b) - len(a))
        for i, v in enumerate(b):
            out[i] = (out[i] - v) % self.p
        return tuple(kern.trim(out))

    def mul(self, a, b):
        return tuple(kern.pmod_mulmod(list(a), list(b), self.m, self.p))

    def inv(self, a):
        g, s, _ = pmod_extgcd(list(a), self.m, self.p)
        if g != [1]:
            raise ZeroDivisionError("element not invertible")
        return tuple(kern.pmod_rem(s, self.m, self.p))

    def one(self):
        return (1,)

    def zero(self):
        return ()


def _fqp_trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return c[:n]


def _fqp_mul(F: GFq, a, b):
    if not a or not b:
        return []
    out = [F.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _fqp_trim(out)


def _fqp_rem(F: GFq, a, b):
    r = list(a)
    db = len(b) - 1
    inv = F.inv(b[-1])
    while len(r) - 1 >= db:
        top = F.mul(r[-1], inv)
        shift = len(r) - 1 - db
        for j in range(db + 1):
            r[shift + j] = F.sub(r[shift + j], F.mul(top, b[j]))
        r = _fqp_trim(r)
        if not r:
            break
    return r


def _fqp_gcd(F: GFq, a, b):
    a, b = _fqp_trim(list(a)), _fqp_trim(list(b))
    while b:
        a, b = b, _fqp_rem(F, a, b)
    if a:
        inv = F.inv(a[-1])
        a = [F.mul(c, inv) for c in a]
    return a


def _fqp_powmod(F: GFq, base, e: int, mod):
    result = _fqp_rem(F, [F.one()], mod)
    acc = _fqp_rem(F, list(base), mod)
    while e:
        if e & 1:
            result = _fqp_rem(F, _fqp_mul(F, result, acc), mod)
        e >>= 1
        if e:
            acc = _fqp_rem(F, _fqp_mul(F, acc, acc), mod)
    return result


def roots_in_gfq(F: GFq, g_coeffs: list[int], rng: random.Random) -> list[tuple[int, ...]]:
    """All roots in F_q of a polynomial with F_p coefficients (given as
    integers); g must be separable there."""
    g = [(c % F.p,) if c % F.p else F.zero() for c in g_coeffs]
    g = _fqp_trim(g)
    x = [F.zero(), F.one()]
    w = _fqp_powmod(F, x, F.q, g)
    w_minus_x = list(w) + [F.zero()] * max(0, 2 - len(w))
    w_minus_x[1] = F.sub(w_minus_x[1], F.one())
    s = _fqp_gcd(F, _fqp_trim(w_minus_x), g)
    roots: list[tuple[int, ...]] = []

    def split(h):
        if len(h) - 1 == 0:
            return
        if len(h) - 1 == 1:
            # monic y + c: root is -c
            c0 = h[0]
            roots.append(F.reduce([F.p - v for v in c0]) if c0 else F.zero())
            return
        while True:
            shift = tuple(rng.randrange(F.p) for _ in range(F.deg))
            cand = [F.reduce(list(shift)), F.one()]
            t = _fqp_powmod(F, cand, (F.q - 1) // 2, h)
            t1 = list(t) or [F.zero()]
            t1[0] = F.sub(t1[0], F.one())
            d = _fqp_gcd(F, _fqp_trim(t1), h)
            if 0 < len(d) - 1 < len(h) - 1:
                rest = _fqp_divide_exact(F, h, d)
                split(d)
                split(rest)
                return

    if s:
        split(s)
    return roots


def _fqp_divide_exact(F: GFq, a, b):
    # both monic, b | a
    r = list(a)
    db = len(b) - 1
    q = [F.zero()] * (len(a) - db)
    while len(r) - 1 >= db:
        top = r[-1]
        shift = len(r) - 1 - db
        q[shift] = top
        for j in range(db + 1):
            r[shift + j] = F.sub(r[shift + j], F.mul(top, b[j]))
        r = _fqp_trim(r)
        if not r:
            break
    return _fqp_trim(q)


# ---------------------------------------------------------------------------
# lifting and verification


@dataclass(frozen=True)
class RootSearchResult:
    """Exact roots of g in the field, with the modular anchor used."""

    roots: tuple[tuple[Fraction, ...], ...]  # power-basis coordinates
    prime: int
    lift_exponent: int
    candidates_checked: int

    @property
    def has_root(self) -> bool:
        return bool(self.roots)


def _coefficient_bound(f: IntPoly, g: IntPoly) -> int:
    """Integer bound on the power-basis coordinates of f'(theta)*alpha for
    any root alpha of g (Hadamard estimate through the embedding matrix)."""
    n = f.degree
    rf = 1 + max(abs(c) for c in f.coeffs[:-1]) if n >= 1 else 1
    rg = 1 + max(abs(c) for c in g.coeffs[:-1]) if g.degree >= 1 else 1
    f1 = sum(i * abs(c) * rf ** (i - 1) for i, c in enumerate(f.coeffs) if i >= 1)
    s = rg * f1
    disc = abs(discriminant(f))
    num = math.isqrt(n**n) + 1
    num *= s * rf ** (n * (n - 1) // 2)
    den = max(math.isqrt(disc), 1)
    return num // den + 1


def _p_add(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return kern.trim(out)


def _p_sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return kern.trim(out)


def _crt_components(p: int, parts: list[tuple[list[int], list[tuple[int, ...]]]]):
    """Combine per-component residue roots into residues mod f = prod m_i.
    parts: [(m_i, roots in F_p[y]/(m_i))]; returns coefficient lists mod p."""
    combos: list[list[int]] = [[]]
    modulus = [1]
    for m, roots in parts:
        _g, s, _t = pmod_extgcd(modulus, m, p)
        assert _g == [1]
        new_combos = []
        for base in combos:
            for r in roots:
                # x = base + modulus * (s * (r - base) mod m)
                diff = _p_sub(list(r), base, p)
                corr = kern.pmod_mul(
                    modulus, kern.pmod_rem(kern.pmod_mul(s, diff, p), m, p), p
                )
                new_combos.append(_p_add(base, corr, p))
        combos = new_combos
        modulus = kern.pmod_mul(modulus, m, p)
    return combos


def roots_in_field(
    g: IntPoly,
    field: NumberField,
    *,
    candidate_cap: int = 4096,
    prime_scan: int = 600,
) -> RootSearchResult:
    """All roots of monic g in the field, exactly; empty tuple means a
    certified absence of roots."""
    if not g.is_monic() or g.degree < 1:
        raise ValueError("root search requires a monic polynomial of degree >= 1")
    f = field.defining_poly
    n = f.degree
    disc_f = abs(field.disc_poly)
    disc_g = abs(discriminant(g)) if g.degree >= 1 else 1
    if disc_g == 0:
        raise ValueError("polynomial must be separable (nonzero discriminant)")

    chosen = None
    for p in primes_up_to(prime_scan):
        if p == 2 or disc_f % p == 0 or disc_g % p == 0:
            continue
        fac = factor_mod_p(f, p)
        assert all(mult == 1 for _, mult in fac.factors)
        seed = int.from_bytes(
            hashlib.sha256(repr((p, f.coeffs, g.coeffs)).encode()).digest()[:8], "big"
        )
        rng = random.Random(seed)
        parts = []
        total = 1
        for mi, _ in fac.factors:
            F = GFq(list(mi.coeffs), p)
            rts = roots_in_gfq(F, [c % p for c in g.coeffs], rng)
            total *= len(rts)
            parts.append((list(mi.coeffs), [tuple(r) for r in rts]))
            if total == 0:
                break
        if total == 0:
            # no root in some residue component: certified absence
            return RootSearchResult(roots=(), prime=p, lift_exponent=0, candidates_checked=0)
        if total <= candidate_cap:
            chosen = (p, parts)
            break
    if chosen is None:
        raise UnsupportedField("no usable anchor prime below the scan bound")
    p, parts = chosen

    bound = _coefficient_bound(f, g)
    pk = p
    k = 1
    while pk <= 2 * bound:
        pk *= p
        k += 1

    candidates = _crt_components(p, parts)
    fprime = f.derivative()
    roots = []
    for eta0 in candidates:
        eta = _newton_lift(g, f, eta0, p, pk)
        if eta is None:
            continue
        b = _mulmod_f(eta, [c % pk for c in fprime.coeffs], f, pk)
        b_sym = [c - pk if c > pk // 2 else c for c in b]
        if any(abs(c) > bound for c in b_sym):
            continue
        if _verify_root(g, f, IntPoly(b_sym), fprime):
            roots.append(_coordinates(IntPoly(b_sym), fprime, f))
    return RootSearchResult(
        roots=tuple(roots),
        prime=p,
        lift_exponent=k,
        candidates_checked=len(candidates),
    )


def _mulmod_f(a: list[int], b: list[int], f: IntPoly, modulus: int) -> list[int]:
    out = [0] * max(len(a) + len(b) - 1, 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % modulus
    fc = list(f.coeffs)
    n = len(fc) - 1
    for i in range(len(out) - 1, n - 1, -1):
        top = out[i]
        if top:
            out[i] = 0
            for j in range(n):
                out[i - n + j] = (out[i - n + j] - top * fc[j]) % modulus
    return [c % modulus for c in out[:n]]


def _poly_eval_mod(coeffs, x: list[int], f: IntPoly, modulus: int) -> list[int]:
    out = [0] * f.degree
    for c in reversed(coeffs):
        out = _mulmod_f(out, x, f, modulus)
        out[0] = (out[0] + c) % modulus
    return out


def _newton_lift(g: IntPoly, f: IntPoly, eta0: list[int], p: int, pk: int):
    """Lift a simple residue root of g to Z[y]/(f, pk); None if the inverse
    of g'(eta) is not defined mod p (excluded by prime choice)."""
    gp = g.derivative()
    val = _poly_eval_mod([c % p for c in gp.coeffs], eta0, f, p)
    fl = [c % p for c in f.coeffs]
    gcd_, s, _ = pmod_extgcd(kern.trim(list(val)), fl, p)
    if gcd_ != [1]:
        return None
    w = kern.pmod_rem(s, fl, p)
    eta = list(eta0)
    m = p
    while m < pk:
        m2 = min(m * m, pk)
        gv = _poly_eval_mod([c % m2 for c in g.coeffs], eta, f, m2)
        eta = [
            (a - b) % m2
            for a, b in zip(eta + [0] * (f.degree - len(eta)), _mulmod_f(gv, w, f, m2))
        ]
        gpv = _poly_eval_mod([c % m2 for c in gp.coeffs], eta, f, m2)
        t = _mulmod_f(gpv, w, f, m2)
        t[0] = (2 - t[0]) % m2
        for i in range(1, len(t)):
            t[i] = (-t[i]) % m2
        w = _mulmod_f(w, t, f, m2)
        m = m2
    return [c % pk for c in eta]


def _verify_root(g: IntPoly, f: IntPoly, b: IntPoly, fprime: IntPoly) -> bool:
    """Exact check that b(theta)/f'(theta) is a root of g: f must divide
    sum_j g_j * b^j * f'^(deg g - j) over Z."""
    dg = g.degree
    total = IntPoly()
    bpow = IntPoly([1])
    fppow = [IntPoly([1])]
    for _ in range(dg):
        fppow.append(fppow[-1] * fprime)
    for j, gj in enumerate(g.coeffs):
        if gj:
            total = total + (bpow * fppow[dg - j]).scale(gj)
        if j < dg:
            bpow = (bpow * b) % f
    return (total % f).is_zero()


def _coordinates(b: IntPoly, fprime: IntPoly, f: IntPoly) -> tuple[Fraction, ...]:
    """Power-basis coordinates of b(theta)/f'(theta) via a fraction-exact
    extended Euclid inverse of f' mod f."""
    inv = _qpoly_invmod([Fraction(c) for c in fprime.coeffs], [Fraction(c) for c in f.coeffs])
    prod = _qpoly_mulmod([Fraction(c) for c in b.coeffs], inv, [Fraction(c) for c in f.coeffs])
    out = list(prod) + [Fraction(0)] * (f.degree - len(prod))
    return tuple(out[: f.degree])


def _qpoly_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _qpoly_divmod(a, b):
    r = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * max(len(r) - db, 0)
    inv = 1 / b[-1]
    for i in range(len(q) - 1, -1, -1):
        t = r[i + db] * inv
        q[i] = t
        if t:
            for j in range(db + 1):
                r[i + j] -= t * b[j]
    return _qpoly_trim(q), _qpoly_trim(r)


def _qpoly_mulmod(a, b, m):
    out = [Fraction(0)] * max(len(a) + len(b) - 1, 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _qpoly_divmod(_qpoly_trim(out), m)[1]


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _qpoly_trim(out)


def _qpoly_invmod(a, m):
    r0, r1 = list(m), _qpoly_divmod(a, m)[1]
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        prod = _qpoly_mul(q, s1)
        new = list(s0) + [Fraction(0)] * max(0, len(prod) - len(s0))
        for i, v in enumerate(prod):
            new[i] -= v
        s0, s1 = s1, _qpoly_trim(new)
    assert len(r0) == 1, "f' not invertible mod f"
    c = r0[0]
    return _qpoly_trim([v / c for v in s0])
