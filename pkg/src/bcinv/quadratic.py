"""Exact arithmetic in quadratic orders Z[omega]: HNF ideals, norm forms,
principality testing, units and continued-fraction fundamental units.

omega is the root of the (monic, quadratic, irreducible) defining
polynomial x^2 + B x + C, so omega^2 = -B*omega - C and an element
x + y*omega has norm x^2 - B*x*y + C*y^2.  Ideals are stored as HNF
triples (a, b, c): the lattice spanned by (a, 0) and (b, c) in
coordinates (x, y), with c | a, c | b, 0 <= b < a; the norm is a*c.

Everything here is plain integer arithmetic; real embeddings are compared
through exact square comparisons, never floats.
"""

from __future__ import annotations

from math import gcd, isqrt

from . import _backend as kern
from .errors import UnsupportedField
from .numberfield import NumberField, PrimeIdeal, dedekind_criterion
from .primes import primes_up_to

Ideal = tuple[int, int, int]
Elem = tuple[int, int]


class QuadraticOrder:
    """The order Z[omega] of a quadratic field; must be the maximal order."""

    __slots__ = ("field", "B", "C", "D", "real", "_sqrtD_floor", "_fund_unit")

    def __init__(self, field: NumberField):
        if field.degree != 2:
            raise UnsupportedField("quadratic order requires a degree-2 field")
        c0, c1, c2 = field.defining_poly.coeffs
        assert c2 == 1
        self.field = field
        self.B = c1
        self.C = c0
        self.D = c1 * c1 - 4 * c0
        self.real = self.D > 0
        self._sqrtD_floor = isqrt(self.D) if self.D > 0 else 0
        self._fund_unit = None
        # Dedekind-based maximality guard: Z[omega] must be maximal at every
        # prime whose square divides disc, else ideal arithmetic here would
        # not describe the maximal order.
        d = abs(self.D)
        for q in primes_up_to(isqrt(d)):
            if d % (q * q) == 0 and not dedekind_criterion(field, q):
                raise UnsupportedField(
                    f"Z[omega] for {field.label} is not maximal at {q}; oracle unsupported"
                )

    # -- elements ---------------------------------------------------------

    def mul(self, u: Elem, v: Elem) -> Elem:
        x1, y1 = u
        x2, y2 = v
        yy = y1 * y2
        return (x1 * x2 - self.C * yy, x1 * y2 + x2 * y1 - self.B * yy)

    def conj(self, u: Elem) -> Elem:
        x, y = u
        return (x - self.B * y, -y)

    def norm(self, u: Elem) -> int:
        x, y = u
        return x * x - self.B * x * y + self.C * y * y

    def signs(self, u: Elem) -> tuple[int, ...]:
        """Signs of u at the real embeddings (empty for imaginary fields).
        u must be nonzero."""
        if not self.real:
            return ()
        x, y = u
        t = 2 * x - self.B * y  # 2*sigma(u) = t +- y*sqrt(D)
        return (self._sign_of(t, y), self._sign_of(t, -y))

    def _sign_of(self, t: int, y: int) -> int:
        # sign of t + y*sqrt(D), D > 0 nonsquare, (t, y) != (0, 0)
        if y == 0:
            return 1 if t > 0 else -1
        if y > 0:
            if t >= 0:
                return 1
            return 1 if t * t < y * y * self.D else -1
        if t <= 0:
            return -1
        return -1 if t * t < y * y * self.D else 1

    def is_totally_positive(self, u: Elem) -> bool:
        return all(s > 0 for s in self.signs(u)) if self.real else True

    # -- ideals -----------------------------------------------------------

    def unit_ideal(self) -> Ideal:
        return (1, 0, 1)

    def lattice_hnf(self, vecs: list[Elem]) -> Ideal:
        """HNF (a, b, c) of the full-rank lattice generated by vecs."""
        cur = None  # running vector with y = gcd so far
        xs = []
        for x, y in vecs:
            if x == 0 and y == 0:
                continue
            if y == 0:
                xs.append(x)
                continue
            if cur is None:
                cur = (x, y)
                continue
            g, s, t = _ext_gcd(cur[1], y)
            xs.append((y // g) * cur[0] - (cur[1] // g) * x)
            cur = (s * cur[0] + t * x, g)
        if cur is None or not xs:
            raise ValueError("lattice is not full rank")
        a = 0
        for x in xs:
            a = gcd(a, x)
        if a == 0:
            raise ValueError("lattice is not full rank")
        b, c = cur
        if c < 0:
            b, c = -b, -c
        b %= a
        assert a % c == 0 and b % c == 0, "lattice is not an ideal of the order"
        return (a, b, c)

    def ideal_mul(self, i: Ideal, j: Ideal) -> Ideal:
        a1, b1, c1 = i
        a2, b2, c2 = j
        u = [(a1, 0), (b1, c1)]
        v = [(a2, 0), (b2, c2)]
        return self.lattice_hnf([self.mul(x, y) for x in u for y in v])

    def ideal_pow(self, i: Ideal, k: int) -> Ideal:
        out = self.unit_ideal()
        for _ in range(k):
            out = self.ideal_mul(out, i)
        return out

    def ideal_conj(self, i: Ideal) -> Ideal:
        a, b, c = i
        return self.lattice_hnf([self.conj((a, 0)), self.conj((b, c))])

    def ideal_norm(self, i: Ideal) -> int:
        return i[0] * i[2]

    def principal_ideal(self, u: Elem) -> Ideal:
        return self.lattice_hnf([u, self.mul(u, (0, 1))])

    def contains(self, i: Ideal, u: Elem) -> bool:
        a, b, c = i
        x, y = u
        if y % c:
            return False
        return (x - (y // c) * b) % a == 0

    def ideal_divides(self, i: Ideal, j: Ideal) -> bool:
        """True iff j is contained in i (i divides j in the maximal order)."""
        a, b, c = j
        return self.contains(i, (a, 0)) and self.contains(i, (b, c))

    def reduce_mod(self, u: Elem, i: Ideal) -> Elem:
        """Canonical representative of u modulo the ideal lattice."""
        a, b, c = i
        x, y = u
        yr = y % c
        x -= ((y - yr) // c) * b
        return (x % a, yr)

    def prime_ideal_hnf(self, pi: PrimeIdeal) -> Ideal:
        p = pi.p
        h = list(pi.generator_mod_p.coeffs)
        if len(h) == 2:
            elem: Elem = (h[0], 1)
        else:
            # degree-2 generator: h(omega) with omega^2 = -B omega - C
            elem = (h[0] - self.C, h[1] - self.B)
        gens = [(p, 0), (0, p), elem, self.mul(elem, (0, 1))]
        out = self.lattice_hnf(gens)
        assert self.ideal_norm(out) == pi.norm
        return out

    # -- enumeration ------------------------------------------------------

    def ideals_of_norm(self, n: int) -> list[Ideal]:
        """All integral ideals of norm n, by direct HNF search."""
        out = []
        c = 1
        while c * c <= n:
            if n % (c * c) == 0:
                aa = n // (c * c)  # a = c*aa
                for bp in range(aa):
                    if self.norm((bp, 1)) % aa == 0:
                        out.append((c * aa, c * bp, c))
            c += 1
        return out

    def ideals_up_to(self, bound: int) -> list[Ideal]:
        out = []
        for n in range(1, bound + 1):
            out.extend(self.ideals_of_norm(n))
        return out

    # -- units ------------------------------------------------------------

    def torsion_units(self) -> list[Elem]:
        """All roots of unity in the order (imaginary case; {1,-1} if real)."""
        if self.real:
            return [(1, 0), (-1, 0)]
        out = []
        absD = -self.D
        ymax = isqrt(4 // absD) if absD <= 4 else 0
        for y in range(-ymax, ymax + 1):
            rad = 4 - absD * y * y
            if rad < 0:
                continue
            s = isqrt(rad)
            if s * s != rad:
                continue
            for t in (self.B * y + s, self.B * y - s):
                if t % 2 == 0:
                    u = (t // 2, y)
                    if self.norm(u) == 1 and u not in out:
                        out.append(u)
        return out

    def fundamental_unit(self, max_steps: int = 100000) -> Elem:
        """Fundamental unit of the (real) order by the continued fraction of
        omega; raises UnsupportedField if the expansion does not close within
        max_steps."""
        if not self.real:
            raise UnsupportedField("fundamental unit requires a real quadratic order")
        if self._fund_unit is not None:
            return self._fund_unit
        D = self.D
        # complete quotients alpha_i = (P_i + sqrt D)/Q_i, starting at omega
        P, Q = -self.B, 2
        seen: dict[tuple[int, int], int] = {}
        # convergent matrices M_i = [[p_i, p_{i-1}], [q_i, q_{i-1}]]
        mats = [(1, 0, 0, 1)]  # M_{-1} = identity
        p_prev, p_prev2 = 1, 0
        q_prev, q_prev2 = 0, 1
        for i in range(max_steps):
            key = (P, Q)
            if key in seen:
                j = seen[key]
                T = _mat_mul(mats[i], _mat_inv(mats[j]))
                A, Bm, G, Dm = T
                # T fixes omega, hence eps = G*omega + Dm is a unit
                assert Dm - A - G * self.B == 0 and -G * self.C - Bm == 0
                eps = (Dm, G)
                n = self.norm(eps)
                assert n in (1, -1)
                self._fund_unit = self._normalize_unit(eps)
                return self._fund_unit
            seen[key] = i
            a = _floor_quadratic(P, Q, D, self._sqrtD_floor)
            pn = a * p_prev + p_prev2
            qn = a * q_prev + q_prev2
            p_prev, p_prev2 = pn, p_prev
            q_prev, q_prev2 = qn, q_prev
            mats.append((p_prev, p_prev2, q_prev, q_prev2))
            P = a * Q - P
            Q = (D - P * P) // Q
            if Q == 0:
                raise UnsupportedField("discriminant is a perfect square")
        raise UnsupportedField("continued fraction did not close within the step cap")

    def _normalize_unit(self, u: Elem) -> Elem:
        """Scale by +-1 / invert so that sigma_1(u) > 1."""
        if self.signs(u)[0] < 0:
            u = (-u[0], -u[1])
        # sigma_1(u) > 1 iff u - 1 positive at the first embedding
        if self._sign_of(2 * u[0] - self.B * u[1] - 2, u[1]) < 0:
            n = self.norm(u)
            inv = self.conj(u)
            if n == -1:
                inv = (-inv[0], -inv[1])
            u = inv
            if self.signs(u)[0] < 0:
                u = (-u[0], -u[1])
        assert self._sign_of(2 * u[0] - self.B * u[1] - 2, u[1]) > 0
        return u

    def unit_upper_bound(self) -> int:
        """Integer upper bound on sigma_1 of the fundamental unit."""
        eu, ev = self.fundamental_unit()
        # sigma_1 = eu + ev*(-B + sqrt D)/2 <= eu + |ev|*(|B| + sqrtD + 1)
        return abs(eu) + abs(ev) * ((abs(self.B) + self._sqrtD_floor + 2) // 2 + 1) + 1

    # -- principality -----------------------------------------------------

    def principal_generator(self, ideal: Ideal, unit_bound: int | None = None) -> Elem | None:
        """A generator of the ideal, or None if it is not principal."""
        n = self.ideal_norm(ideal)
        a, b, c = ideal
        if not self.real:
            hit = kern.quad_gen_search_imag(self.B, self.C, n, a, b, c)
            if hit is None:
                return None
            return (int(hit[0]), int(hit[1]))
        if unit_bound is None:
            unit_bound = self.unit_upper_bound()
        # any generator has an associate with both embeddings in
        # (-sqrt(n*eps), sqrt(n*eps)), giving |y| <= 2 sqrt(n*eps / D)
        ymax = isqrt(4 * n * unit_bound // self.D) + 1
        for y in range(-ymax, ymax + 1):
            if y % c:
                continue
            base = y * y * self.D
            for n_signed in (4 * n, -4 * n):
                rad = base + n_signed
                if rad < 0:
                    continue
                s = isqrt(rad)
                if s * s != rad:
                    continue
                for t in (self.B * y + s, self.B * y - s):
                    if t % 2:
                        continue
                    x = t // 2
                    if (x, y) == (0, 0):
                        continue
                    if self.contains(ideal, (x, y)) and abs(self.norm((x, y))) == n:
                        return (x, y)
        return None


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _mat_mul(m: tuple[int, int, int, int], n: tuple[int, int, int, int]):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _mat_inv(m: tuple[int, int, int, int]):
    a, b, c, d = m
    det = a * d - b * c
    assert det in (1, -1)
    if det == 1:
        return (d, -b, -c, a)
    return (-d, b, c, -a)


def _floor_quadratic(P: int, Q: int, D: int, sq: int) -> int:
    """floor((P + sqrt(D))/Q) for nonsquare D > 0 (sq = isqrt(D))."""
    if Q > 0:
        # sqrt(D) irrational and in (sq, sq+1), so no integer multiple of Q
        # lies between P + sq and P + sqrt(D)
        return (P + sq) // Q

    def ge(k: int) -> bool:
        # (P + sqrt D)/Q >= k  <=>  sqrt D <= k*Q - P   (Q < 0)
        rhs = k * Q - P
        return rhs >= 0 and D <= rhs * rhs

    k = (P + sq) // Q
    while ge(k + 1):
        k += 1
    while not ge(k):
        k -= 1
    return k


def hilbert_style_count_check(order: QuadraticOrder, bound: int) -> list[int]:
    """Number of integral ideals per norm up to bound (direct enumeration);
    used as an oracle against the zeta coefficients."""
    out = [0] * (bound + 1)
    for n in range(1, bound + 1):
        out[n] = len(order.ideals_of_norm(n))
    return out
