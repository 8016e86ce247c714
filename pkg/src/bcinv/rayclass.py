"""Finite levels of the ray-class tower at a prime ideal: the index chain
h_m = [J_K^p : P_K^(p^m)], its growth, and the trace-range label Z[1/p].

The oracle is exact brute force for Q and quadratic fields: integral ideals
coprime to p are enumerated up to a norm bound and classified by the
relation a ~ b iff a*b^(-1) = (k) with k totally positive and k = 1 mod
p^m.  Classification goes through ordinary-class representatives plus the
residue-and-sign coset of a generator modulo unit images; this is the same
relation, organized multiplicatively so one norm-form search per prime
ideal suffices.  Saturation is verified: every class must already appear
at half the enumeration bound, otherwise SaturationFailure is raised.

Higher-degree fields get formula mode only: the growth ratios p^f are
emitted as asserted, never as computed.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import SaturationFailure, UnsupportedField
from .numberfield import NumberField, PrimeIdeal, split_prime  # noqa: F401
from .primes import primes_up_to, sqrt_mod
from .quadratic import QuadraticOrder


def local_unit_filtration(prime_ideal: PrimeIdeal, M: int) -> list[int]:
    """Orders |U^(m)/U^(m+1)| for m = 0..M: residue-field units first, then
    the residue field's additive order p^f at every higher step."""
    if M < 0:
        raise ValueError("M must be >= 0")
    pf = prime_ideal.p ** prime_ideal.f
    return [pf - 1] + [pf] * M


@dataclass(frozen=True)
class RayLevel:
    prime_ideal: PrimeIdeal
    m: int
    h_m: int | None
    local_unit_order: int | None  # (p^f - 1) p^(f(m-1)) for m >= 1


@dataclass(frozen=True)
class RayClassChain:
    prime_ideal: PrimeIdeal
    levels: tuple[RayLevel, ...]
    ratios: tuple[int, ...]  # h_{m+1}/h_m for m >= 1
    growth_certified: bool  # every ratio equals p^f
    basis: str  # "computed" | "asserted"
    mode: str  # "oracle" | "formula"
    enumeration_bound: int | None
    discrepancies: tuple[str, ...] = ()

    @property
    def h_values(self) -> list[int | None]:
        return [lv.h_m for lv in self.levels]

    def to_json(self) -> dict:
        pi = self.prime_ideal
        return {
            "prime": {"p": pi.p, "f": pi.f, "e": pi.e},
            "h": self.h_values,
            "ratios": list(self.ratios),
            "ratio_basis": self.basis,
            "certified": bool(self.growth_certified and self.basis == "computed"),
            "local_unit_orders": [lv.local_unit_order for lv in self.levels],
            "mode": self.mode,
            "enumeration_bound": self.enumeration_bound,
            "discrepancies": list(self.discrepancies),
        }


@dataclass(frozen=True, eq=False)
class TraceRangeDescriptor:
    """The K-theory trace-range invariant presented as a localization label;
    two descriptors are equal exactly when their rational primes agree."""

    prime_ideal: PrimeIdeal
    rational_prime: int
    label: str
    chain: RayClassChain | None = dc_field(default=None, compare=False)

    def __eq__(self, other):
        return (
            isinstance(other, TraceRangeDescriptor)
            and self.rational_prime == other.rational_prime
        )

    def __hash__(self):
        return hash(("TraceRange", self.rational_prime))

    def to_json(self) -> dict:
        out = {"p": self.rational_prime, "label": self.label}
        if self.chain is not None:
            out["chain"] = self.chain.to_json()
        return out


def trace_range(
    field: NumberField, prime_ideal: PrimeIdeal, *, levels: int = 2, evidence: str = "auto"
) -> TraceRangeDescriptor:
    """Label Z[1/p] for the prime below, with the h_m chain attached as
    certification evidence when the oracle supports the field."""
    p = prime_ideal.p
    ch = None
    if evidence != "none":
        if evidence in ("auto", "oracle") and field.degree <= 2:
            try:
                mm = levels
                if prime_ideal.e > 1:
                    mm = min(levels, 1)
                ch = chain(field, prime_ideal, mm, mode="oracle")
            except (UnsupportedField, SaturationFailure):
                ch = None
        if ch is None:
            ch = chain(field, prime_ideal, levels, mode="formula")
    return TraceRangeDescriptor(
        prime_ideal=prime_ideal, rational_prime=p, label=f"Z[1/{p}]", chain=ch
    )


# ---------------------------------------------------------------------------
# oracle: Q


def _q_ray_counts(p: int, M: int, bound: int) -> tuple[list[int], list[int]]:
    """Counts of J^p / P^(p^m) classes for Q: positive integers coprime to p
    classified by residue mod p^m.  Returns (counts, first-appearance max)."""
    mods = [p**m for m in range(M + 1)]
    first: list[dict[int, int]] = [{} for _ in range(M + 1)]
    for n in range(1, bound + 1):
        if n % p == 0:
            continue
        for m in range(M + 1):
            key = n % mods[m]
            if key not in first[m]:
                first[m][key] = n
    counts = [len(d) for d in first]
    latest = [max(d.values()) if d else 0 for d in first]
    return counts, latest


# ---------------------------------------------------------------------------
# oracle: quadratic fields


class _QuadRayEngine:
    def __init__(self, fieldk: NumberField, prime_ideal: PrimeIdeal, M: int):
        self.field = fieldk
        self.prime = prime_ideal
        self.M = M
        if prime_ideal.e > 1 and M >= 2:
            raise UnsupportedField("ramified primes: oracle supports m <= 1 only")
        self.order = QuadraticOrder(fieldk)
        o = self.order
        self.p_hnf = o.prime_ideal_hnf(prime_ideal)
        self.p = prime_ideal.p
        # congruence lattices p^m, m = 0..M (index 0 unused)
        self.lat = [None] + [o.ideal_pow(self.p_hnf, m) for m in range(1, M + 1)]
        # integer modulus with p^m /\ Z = (p^ceil(m/e)) Z
        e = prime_ideal.e
        self.zmod = [1] + [self.p ** (-(-m // e)) for m in range(1, M + 1)]
        self.reps = self._class_representatives()
        self.unit_images = self._unit_image_sets()
        self.mu = self._base_pair_table()

    # -- infrastructure ---------------------------------------------------

    def _coprime_to_p(self, ideal) -> bool:
        return not self.order.ideal_divides(self.p_hnf, ideal)

    def _classify(self, ideal) -> tuple[int, tuple[int, int]] | None:
        """(class index, generator of ideal * conj(rep)) or None."""
        o = self.order
        for idx, rep in enumerate(self.reps):
            cand = o.ideal_mul(ideal, o.ideal_conj(rep))
            gen = o.principal_generator(cand)
            if gen is not None:
                return idx, gen
        return None

    def _class_representatives(self, start: int = 24, cap: int = 4096):
        o = self.order
        reps = [o.unit_ideal()]

        def scan(bound):
            added = False
            for ideal in o.ideals_up_to(bound):
                if not self._coprime_to_p(ideal):
                    continue
                hit = False
                for rep in reps:
                    if o.principal_generator(o.ideal_mul(ideal, o.ideal_conj(rep))) is not None:
                        hit = True
                        break
                if not hit:
                    reps.append(ideal)
                    added = True
            return added

        bound = start
        scan(bound)
        while bound <= cap:
            bound *= 2
            if not scan(bound):
                return reps
        raise UnsupportedField("class representative search did not stabilize")

    def _alpha_data(self, cls: int, gen: tuple[int, int]):
        """Residues per level and signs of alpha = gen / N(rep_cls)."""
        o = self.order
        nb = o.ideal_norm(self.reps[cls])
        res = [None]
        for m in range(1, self.M + 1):
            t = pow(nb, -1, self.zmod[m])
            res.append(o.reduce_mod((gen[0] * t, gen[1] * t), self.lat[m]))
        return res, o.signs(gen)

    def _unit_image_sets(self):
        """Per level m: the image of the unit group in residues x signs."""
        o = self.order
        gens: list[tuple[int, int]] = (
            [(-1, 0), o.fundamental_unit()] if o.real else o.torsion_units()
        )
        images = []
        for m in range(self.M + 1):
            def embed(u):
                r = o.reduce_mod(u, self.lat[m]) if m >= 1 else None
                return (r, o.signs(u))

            seen = {embed((1, 0))}
            # close under multiplication by the generators; track elements so
            # products stay exact, but dedupe by (residue, signs) class
            items = [((1, 0), embed((1, 0)))]
            changed = True
            while changed:
                changed = False
                for u in gens:
                    new_items = []
                    for elem, _img in items:
                        prod = o.mul(elem, u)
                        img = embed(prod)
                        if img not in seen:
                            seen.add(img)
                            new_items.append((prod, img))
                    if new_items:
                        items.extend(new_items)
                        changed = True
            images.append(sorted(seen, key=repr))
        return images

    def _base_pair_table(self):
        """mu[c1][c2] = (c3, residues per level, signs) for the fractional
        generator connecting rep_c1 * rep_c2 to rep_c3."""
        h = len(self.reps)
        o = self.order
        table = [[None] * h for _ in range(h)]
        for c1 in range(h):
            for c2 in range(h):
                prod = o.ideal_mul(self.reps[c1], self.reps[c2])
                got = self._classify(prod)
                if got is None:
                    raise UnsupportedField("class representatives are inconsistent")
                c3, gen = got
                res, signs = self._alpha_data(c3, gen)
                table[c1][c2] = (c3, res, signs)
        return table

    # -- enumeration ------------------------------------------------------

    def _prime_hnfs(self, bound: int):
        """(norm, hnf) of every prime ideal of norm <= bound.  Splitting of
        ell is decided by the discriminant Legendre symbol with roots from
        Tonelli-Shanks; the order is maximal, so this matches Dedekind."""
        o = self.order
        B, C, D = o.B, o.C, o.D
        out = []
        for ell in primes_up_to(bound):
            if ell == 2:
                roots = [r for r in (0, 1) if (r * r + B * r + C) % 2 == 0]
                if not roots:
                    if 4 <= bound:
                        out.append((4, (2, 0, 2)))
                elif len(roots) == 1:
                    out.append((2, (2, (-roots[0]) % 2, 1)))
                else:
                    for r in roots:
                        out.append((2, (2, (-r) % 2, 1)))
                continue
            d = D % ell
            if d == 0:
                r = (-B) * pow(2, -1, ell) % ell
                out.append((ell, (ell, (-r) % ell, 1)))
                continue
            s = sqrt_mod(d, ell)
            if s is None:
                if ell * ell <= bound:
                    out.append((ell * ell, (ell, 0, ell)))
            else:
                inv2 = pow(2, -1, ell)
                for r in ((-B + s) * inv2 % ell, (-B - s) * inv2 % ell):
                    out.append((ell, (ell, (-r) % ell, 1)))
        out.sort(key=lambda t: (t[0], t[1]))
        return out

    def _prime_data(self, bound: int):
        """Per prime ideal of norm <= bound, excluding p itself:
        (norm, class, residues per level, signs)."""
        out = []
        for norm, hnf in self._prime_hnfs(bound):
            if hnf == self.p_hnf:
                continue
            got = self._classify(hnf)
            if got is None:
                raise UnsupportedField("class representatives are inconsistent")
            cls, gen = got
            res, signs = self._alpha_data(cls, gen)
            out.append((norm, cls, res, signs))
        return out

    def counts(self, bound: int) -> tuple[list[int], list[int]]:
        """Distinct ray classes per level among ideals of norm <= bound,
        plus the largest first-appearance norm per level."""
        o = self.order
        M = self.M
        primes = self._prime_data(bound)
        first = [{} for _ in range(M + 1)]  # signature -> first-appearance norm
        sign_id = (1, 1) if o.real else ()

        mul = o.mul
        reduce_mod = o.reduce_mod
        lat = self.lat
        unit_images = self.unit_images
        mu = self.mu

        def coset_key(m, res, signs):
            if m == 0:
                best = None
                for _ur, us in unit_images[0]:
                    cand = tuple(a * b for a, b in zip(us, signs))
                    if best is None or cand < best:
                        best = cand
                return best
            best = None
            latm = lat[m]
            for ur, us in unit_images[m]:
                rr = reduce_mod(mul(ur, res), latm)
                cand = (rr, tuple(a * b for a, b in zip(us, signs)))
                if best is None or cand < best:
                    best = cand
            return best

        def visit(norm, cls, res, signs):
            for m in range(M + 1):
                key = (cls, coset_key(m, res[m] if m else None, signs))
                d = first[m]
                old = d.get(key)
                if old is None or norm < old:
                    d[key] = norm

        id_res = [None] + [reduce_mod((1, 0), lat[m]) for m in range(1, M + 1)]

        # iterative DFS over exponent vectors of the prime list
        stack = [(0, 1, 0, id_res, sign_id)]
        while stack:
            start, norm, cls, res, signs = stack.pop()
            visit(norm, cls, res, signs)
            for j in range(start, len(primes)):
                nq, cq, rq, sq = primes[j]
                nn = norm * nq
                if nn > bound:
                    break
                c3, rmu, smu = mu[cls][cq]
                nres = [None]
                for m in range(1, M + 1):
                    latm = lat[m]
                    v = reduce_mod(mul(res[m], rq[m]), latm)
                    v = reduce_mod(mul(v, rmu[m]), latm)
                    nres.append(v)
                nsigns = tuple(a * b * c for a, b, c in zip(signs, sq, smu))
                stack.append((j, nn, c3, nres, nsigns))
        counts = [len(d) for d in first]
        latest = [max(d.values()) if d else 0 for d in first]
        return counts, latest


# ---------------------------------------------------------------------------
# public oracle entry points


def _auto_bound(fieldk: NumberField, prime_ideal: PrimeIdeal, M: int) -> int:
    p, f = prime_ideal.p, prime_ideal.f
    if fieldk.degree == 1:
        return max(64, 24 * p**M)
    # phi is the generic class-count scale (class number and unit-image
    # factors roughly cancel); 22x gives ~15 ideals per class at half the
    # bound, and the saturation retry doubles on the rare shortfall
    phi = (p**f - 1) * p ** (f * max(M - 1, 0)) if M >= 1 else 1
    return max(256, 22 * phi)


def ray_class_counts(
    fieldk: NumberField,
    prime_ideal: PrimeIdeal,
    M: int,
    enumeration_bound: int | None = None,
    *,
    max_retries: int = 3,
) -> tuple[list[int], int]:
    """h_m for m = 0..M by the brute-force oracle; returns (values, bound).

    Saturation is enforced: every class must appear at a norm <= bound/2,
    otherwise the bound is doubled (when it was chosen automatically) or
    SaturationFailure is raised (when it was explicit).
    """
    if M < 0:
        raise ValueError("M must be >= 0")
    auto = enumeration_bound is None
    bound = _auto_bound(fieldk, prime_ideal, M) if auto else enumeration_bound
    if fieldk.degree == 1:
        runner = lambda X: _q_ray_counts(prime_ideal.p, M, X)  # noqa: E731
    elif fieldk.degree == 2:
        engine = _QuadRayEngine(fieldk, prime_ideal, M)
        runner = engine.counts
    else:
        raise UnsupportedField("oracle supports Q and quadratic fields only")
    attempts = max_retries if auto else 0
    while True:
        counts, latest = runner(bound)
        if max(latest) <= bound // 2 and counts[0] >= 1:
            return counts, bound
        if attempts <= 0:
            raise SaturationFailure(
                f"class count still growing at enumeration bound {bound}; "
                f"last new class appeared at norm {max(latest)}"
            )
        attempts -= 1
        bound *= 2


def ray_class_oracle(
    fieldk: NumberField,
    prime_ideal: PrimeIdeal,
    m: int,
    enumeration_bound: int | None = None,
) -> int:
    """Exact order of J_K^p / P_K^(p^m) for Q or a quadratic field."""
    counts, _ = ray_class_counts(fieldk, prime_ideal, m, enumeration_bound)
    return counts[m]


def chain(
    fieldk: NumberField,
    prime_ideal: PrimeIdeal,
    M: int,
    mode: str = "oracle",
    enumeration_bound: int | None = None,
) -> RayClassChain:
    """The level chain m = 0..M with growth ratios h_{m+1}/h_m for m >= 1.

    Oracle mode computes and checks; formula mode emits the ratio p^f as
    asserted-not-computed.  Any computed ratio differing from p^f is
    reported verbatim in `discrepancies`, never reconciled.
    """
    p, f = prime_ideal.p, prime_ideal.f
    pf = p**f

    def unit_order(m):
        if m == 0:
            return None
        return (pf - 1) * p ** (f * (m - 1))

    if mode == "formula":
        levels = tuple(
            RayLevel(prime_ideal, m, None, unit_order(m)) for m in range(M + 1)
        )
        return RayClassChain(
            prime_ideal=prime_ideal,
            levels=levels,
            ratios=tuple([pf] * max(M - 1, 0)),
            growth_certified=True,
            basis="asserted",
            mode="formula",
            enumeration_bound=None,
        )
    if mode != "oracle":
        raise ValueError("mode must be 'oracle' or 'formula'")
    counts, bound = ray_class_counts(fieldk, prime_ideal, M, enumeration_bound)
    levels = tuple(
        RayLevel(prime_ideal, m, counts[m], unit_order(m)) for m in range(M + 1)
    )
    ratios = []
    discrepancies = []
    for m in range(1, M):
        if counts[m + 1] % counts[m] != 0:
            discrepancies.append(
                f"h_{m + 1}={counts[m + 1]} is not a multiple of h_{m}={counts[m]}"
            )
            ratios.append(0)
            continue
        r = counts[m + 1] // counts[m]
        ratios.append(r)
        if r != pf:
            discrepancies.append(f"h_{m + 1}/h_{m} = {r}, expected p^f = {pf}")
    certified = not discrepancies and all(r == pf for r in ratios)
    return RayClassChain(
        prime_ideal=prime_ideal,
        levels=levels,
        ratios=tuple(ratios),
        growth_certified=certified,
        basis="computed",
        mode="oracle",
        enumeration_bound=bound,
        discrepancies=tuple(discrepancies),
    )
