"""Combinatorial model of the primitive-ideal space over a finite truncation
of the primes of K: strata indexed by subsets S, Jacobson-style containment,
second-maximal strata, and the component-per-prime correspondence.

Subsets of the (infinite) set of primes are encoded either as a finite list
of primes from the universe or as the complement of one, so the full set
and the complements {p}^c are exactly representable.  Fibers over a stratum
are opaque labels; nothing here enumerates them.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import NotPMaximal
from .numberfield import NumberField, PrimeIdeal, prime_ideals_up_to, split_prime
from .primes import primes_up_to
from .rayclass import TraceRangeDescriptor, trace_range


@dataclass(frozen=True)
class PrimeUniverse:
    """Finite truncation of the primes of a field, sorted by
    (norm, p, generator)."""

    field: NumberField
    primes: tuple[PrimeIdeal, ...]
    bound: int
    bound_kind: str  # "norm" | "rational"
    skipped: tuple[int, ...] = ()

    @classmethod
    def by_norm(cls, field: NumberField, bound: int) -> "PrimeUniverse":
        """All prime ideals of norm <= bound (NotPMaximal propagates)."""
        ideals = tuple(prime_ideals_up_to(field, bound))
        return cls(field=field, primes=ideals, bound=bound, bound_kind="norm")

    @classmethod
    def over_rational_primes(
        cls, field: NumberField, bound: int, *, skip_not_maximal: bool = True
    ) -> "PrimeUniverse":
        """All prime ideals above the rational primes <= bound, so splitting
        numbers are counted exactly; non-maximal primes are recorded in
        `skipped`, never silently dropped."""
        ideals: list[PrimeIdeal] = []
        skipped: list[int] = []
        for p in primes_up_to(bound):
            try:
                st = split_prime(field, p)
            except NotPMaximal:
                if not skip_not_maximal:
                    raise
                skipped.append(p)
                continue
            ideals.extend(st.ideals)
        ideals.sort(key=PrimeIdeal.sort_key)
        return cls(
            field=field,
            primes=tuple(ideals),
            bound=bound,
            bound_kind="rational",
            skipped=tuple(skipped),
        )

    def __post_init__(self):
        keys = [pi.sort_key() for pi in self.primes]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)

    # -- points -------------------------------------------------------------

    def finite_point(self, members, fiber_note: str = "gamma") -> "SpectrumPoint":
        return SpectrumPoint(
            universe=self,
            kind="finite",
            members=_canonical_members(self, members),
            fiber_note=fiber_note,
        )

    def cofinite_point(self, excluded, fiber_note: str = "gamma") -> "SpectrumPoint":
        return SpectrumPoint(
            universe=self,
            kind="cofinite",
            members=_canonical_members(self, excluded),
            fiber_note=fiber_note,
        )

    def full_point(self, fiber_note: str = "gamma") -> "SpectrumPoint":
        return self.cofinite_point((), fiber_note)

    def empty_point(self, fiber_note: str = "gamma") -> "SpectrumPoint":
        return self.finite_point((), fiber_note)

    def second_maximal_point(self, prime: PrimeIdeal, fiber_note: str = "gamma"):
        return self.cofinite_point((prime,), fiber_note)


def _canonical_members(universe: PrimeUniverse, members) -> tuple[PrimeIdeal, ...]:
    out = sorted(set(members), key=PrimeIdeal.sort_key)
    for pi in out:
        if pi not in universe.primes:
            raise ValueError(f"{pi!r} is not in the universe")
    return tuple(out)


@dataclass(frozen=True)
class SpectrumPoint:
    """A stratum P_S: S is either the finite set `members` or the complement
    of it (kind = "cofinite"); the fiber label is symbolic only."""

    universe: PrimeUniverse
    kind: str  # "finite" | "cofinite"
    members: tuple[PrimeIdeal, ...]
    fiber_note: str = "gamma"

    def describe(self) -> str:
        names = ",".join(f"({pi.p},f={pi.f})" for pi in self.members)
        if self.kind == "finite":
            return "empty" if not self.members else "{" + names + "}"
        return "full" if not self.members else "complement{" + names + "}"


def contains(inner: SpectrumPoint, outer: SpectrumPoint) -> bool:
    """P_S contained in P_T iff S is a subset of T (same universe, same
    fiber label; the containment proposition fixes the fiber)."""
    if inner.universe != outer.universe:
        raise ValueError("cross-universe comparison rejected")
    if inner.fiber_note != outer.fiber_note:
        raise ValueError("containment is only defined within a fixed fiber label")
    a, b = set(inner.members), set(outer.members)
    if inner.kind == "finite" and outer.kind == "finite":
        return a <= b
    if inner.kind == "finite" and outer.kind == "cofinite":
        return not (a & b)
    if inner.kind == "cofinite" and outer.kind == "finite":
        return False
    return b <= a


def classify(point: SpectrumPoint) -> str:
    """"maximal" for S the full set, "second_maximal" for S = {p}^c,
    "other" otherwise."""
    if point.kind == "cofinite":
        if len(point.members) == 0:
            return "maximal"
        if len(point.members) == 1:
            return "second_maximal"
    return "other"


def closure(point: SpectrumPoint) -> list[SpectrumPoint]:
    """Jacobson closure within the universe's distinguished strata: the point
    itself, every {q}^c containing S, and the full set."""
    u = point.universe
    out = [point]
    for q in u.primes:
        cand = u.cofinite_point((q,), point.fiber_note)
        if cand != point and contains(point, cand):
            out.append(cand)
    full = u.full_point(point.fiber_note)
    if full != point:
        out.append(full)
    return out


@dataclass(frozen=True)
class ComponentDescriptor:
    """A connected component of the second-maximal stratum, one per prime,
    carrying its trace-range label."""

    prime: PrimeIdeal
    trace: TraceRangeDescriptor
    point: SpectrumPoint = dc_field(compare=False)

    @property
    def label(self) -> str:
        return self.trace.label

    def to_json(self) -> dict:
        return {"prime": {"p": self.prime.p, "f": self.prime.f, "e": self.prime.e},
                "label": self.label}


def components_of_I2(
    universe: PrimeUniverse, *, evidence: str = "none"
) -> list[ComponentDescriptor]:
    """One component per prime in the universe, in universe order; the label
    Z[1/p] depends only on the rational prime below."""
    out = []
    for pi in universe.primes:
        tr = trace_range(universe.field, pi, evidence=evidence)
        out.append(
            ComponentDescriptor(prime=pi, trace=tr, point=universe.second_maximal_point(pi))
        )
    return out


def count_components_labeled(components: list[ComponentDescriptor], p: int) -> int:
    return sum(1 for c in components if c.label == f"Z[1/{p}]")
