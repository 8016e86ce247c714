"""Truncated Dedekind zeta functions: Euler products over prime ideals and
Dirichlet coefficients counting integral ideals by norm.

Euler products are evaluated in decimal fixed precision (configurable
digits, default 30); coefficients are exact integers and are compared
exactly, never through floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext

from .errors import NotPMaximal
from .numberfield import NumberField, split_prime
from .primes import primes_up_to

DEFAULT_DIGITS = 30


def _as_decimal_s(s) -> Decimal:
    if isinstance(s, Decimal):
        return s
    if isinstance(s, (int, str)):
        return Decimal(s)
    if isinstance(s, float):
        # floats are accepted for convenience but converted through repr so
        # the computation itself stays decimal
        return Decimal(repr(s))
    raise TypeError(f"cannot interpret {s!r} as a real exponent")


def euler_product(
    field: NumberField,
    s,
    prime_bound: int,
    *,
    digits: int = DEFAULT_DIGITS,
    skip_not_maximal: bool = False,
) -> Decimal:
    """prod over prime ideals of norm <= prime_bound of 1/(1 - N^(-s)).

    s > 1 required.  Factors are multiplied in ascending (norm, p) order so
    the result is reproducible regardless of any caller-side parallelism.
    """
    sd = _as_decimal_s(s)
    if sd <= 1:
        raise ValueError("Euler product requires s > 1")
    norms = ideal_norms_up_to(field, prime_bound, skip_not_maximal=skip_not_maximal)[0]
    with localcontext() as ctx:
        ctx.prec = digits + 10
        one = Decimal(1)
        acc = Decimal(1)
        for norm in norms:
            term = one / (one - Decimal(norm) ** (-sd))
            acc *= term
        result = +acc
    with localcontext() as ctx:
        ctx.prec = digits
        return +result


def ideal_norms_up_to(
    field: NumberField, bound: int, *, skip_not_maximal: bool = False
) -> tuple[list[int], list[int]]:
    """Norms of prime ideals with norm <= bound, ascending, plus the list of
    rational primes skipped as NotPMaximal (only when skipping is enabled)."""
    norms: list[int] = []
    skipped: list[int] = []
    for p in primes_up_to(bound):
        try:
            st = split_prime(field, p)
        except NotPMaximal:
            if not skip_not_maximal:
                raise
            skipped.append(p)
            continue
        norms.extend(p**f for _, f in st.pairs if p**f <= bound)
    norms.sort()
    return norms, skipped


def ideal_count_coefficients(
    field: NumberField, N: int, *, skip_not_maximal: bool = False
) -> tuple[list[int], list[int]]:
    """a_n = number of integral ideals of norm n, for 1 <= n <= N, built
    multiplicatively from the local factors prod_i 1/(1 - t^{f_i}).

    Returns (a, skipped) with a[0] = 0 and a[n] the n-th coefficient.  When
    skipping is enabled, coefficients at indices divisible by a skipped
    prime are unreliable and set to -1.
    """
    if N < 1:
        raise ValueError("coefficient bound must be >= 1")
    a = [0] * (N + 1)
    a[1] = 1
    skipped: list[int] = []
    for p in primes_up_to(N):
        try:
            st = split_prime(field, p)
        except NotPMaximal:
            if not skip_not_maximal:
                raise
            skipped.append(p)
            continue
        kmax = int(math.log(N, p)) + 1
        while p**kmax > N:
            kmax -= 1
        if kmax < 1:
            continue
        local = [0] * (kmax + 1)
        local[0] = 1
        for _, f in st.pairs:
            for k in range(f, kmax + 1):
                local[k] += local[k - f]
        snapshot = list(a)
        for k in range(1, kmax + 1):
            c = local[k]
            if c == 0:
                continue
            pk = p**k
            for n in range(1, N // pk + 1):
                if snapshot[n]:
                    a[n * pk] += snapshot[n] * c
    for q in skipped:
        for n in range(q, N + 1, q):
            a[n] = -1
    return a, skipped


@dataclass(frozen=True)
class ZetaApprox:
    """Aggregate of the two zeta views at a truncation."""

    field: NumberField
    s: Decimal
    prime_bound: int
    euler_value: Decimal
    digits: int
    coefficients: tuple[int, ...]  # a_1 .. a_N

    @property
    def coefficient_count(self) -> int:
        return len(self.coefficients)


def zeta_approx(
    field: NumberField, s, prime_bound: int, coefficient_bound: int, *, digits: int = DEFAULT_DIGITS
) -> ZetaApprox:
    value = euler_product(field, s, prime_bound, digits=digits)
    coeffs, _ = ideal_count_coefficients(field, coefficient_bound)
    return ZetaApprox(
        field=field,
        s=_as_decimal_s(s),
        prime_bound=prime_bound,
        euler_value=value,
        digits=digits,
        coefficients=tuple(coeffs[1:]),
    )


@dataclass(frozen=True)
class ZetaComparison:
    """Exact coefficient comparison up to a bound; finite-truncation evidence,
    never a proof of equality."""

    status: str  # "agree" | "first_disagreement"
    bound: int
    n: int | None
    a_n_left: int | None
    a_n_right: int | None
    skipped_left: tuple[int, ...]
    skipped_right: tuple[int, ...]
    caveat: str

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "bound": self.bound,
            "n": self.n,
            "a_n": None if self.n is None else [self.a_n_left, self.a_n_right],
            "skipped": {"left": list(self.skipped_left), "right": list(self.skipped_right)},
            "caveat": self.caveat,
        }


def zeta_equal_up_to(
    field_a: NumberField, field_b: NumberField, N: int, *, skip_not_maximal: bool = True
) -> ZetaComparison:
    """Compare ideal-count coefficients exactly for n <= N.

    Indices divisible by a prime skipped (NotPMaximal) in either field are
    excluded from the comparison and the skips are reported; agreement is
    evidence to the bound only.
    """
    ca, skipped_a = ideal_count_coefficients(field_a, N, skip_not_maximal=skip_not_maximal)
    cb, skipped_b = ideal_count_coefficients(field_b, N, skip_not_maximal=skip_not_maximal)
    excluded = set(skipped_a) | set(skipped_b)
    caveat = f"coefficient agreement checked for n <= {N}"
    if excluded:
        caveat += (
            "; primes "
            + ", ".join(str(p) for p in sorted(excluded))
            + " are outside Dedekind scope (not p-maximal) and indices they divide are excluded"
        )
    caveat += "; finite-truncation evidence, not a proof"
    for n in range(1, N + 1):
        if any(n % q == 0 for q in excluded):
            continue
        if ca[n] != cb[n]:
            return ZetaComparison(
                status="first_disagreement",
                bound=N,
                n=n,
                a_n_left=ca[n],
                a_n_right=cb[n],
                skipped_left=tuple(skipped_a),
                skipped_right=tuple(skipped_b),
                caveat=caveat,
            )
    return ZetaComparison(
        status="agree",
        bound=N,
        n=None,
        a_n_left=None,
        a_n_right=None,
        skipped_left=tuple(skipped_a),
        skipped_right=tuple(skipped_b),
        caveat=caveat,
    )
