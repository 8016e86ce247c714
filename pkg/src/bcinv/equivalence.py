"""Splitting-number comparison of two number fields up to a prime bound:
fingerprints, the two comparison modes, and the invariant-counting pipeline
that reconstructs the same numbers from spectrum components and their
Z[1/p] labels.

Agreement is always "to bound B": a finite truncation is evidence for
zeta equality, never a proof.  Primes outside Dedekind scope are skipped
and reported prominently, never silently dropped.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import NotPMaximal, PipelineMismatch
from .numberfield import NumberField, SplittingType, split_prime
from .primes import primes_up_to
from .spectrum import PrimeUniverse, components_of_I2, count_components_labeled


@dataclass(frozen=True)
class SplittingFingerprint:
    """Per-prime splitting data p -> (g, {(e_i, f_i)}) for p <= bound, with
    NotPMaximal primes listed in `skipped`."""

    field: NumberField
    bound: int
    entries: tuple[tuple[int, SplittingType], ...]  # ascending p
    skipped: tuple[int, ...]

    def g_map(self) -> dict[int, int]:
        return {p: st.g for p, st in self.entries}

    def pairs_map(self) -> dict[int, tuple[tuple[int, int], ...]]:
        return {p: st.pairs for p, st in self.entries}

    def to_json(self) -> dict:
        return {
            "field": self.field.label,
            "bound": self.bound,
            "entries": {str(p): st.to_json() for p, st in self.entries},
            "skipped": list(self.skipped),
        }


def fingerprint(field: NumberField, bound: int, *, jobs: int = 1) -> SplittingFingerprint:
    """Splitting data for every prime <= bound; parallelizable over primes
    with a deterministic, p-ordered aggregation."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    primes = primes_up_to(bound)

    def work(p):
        try:
            return p, split_prime(field, p)
        except NotPMaximal:
            return p, None

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, primes))
    else:
        results = [work(p) for p in primes]
    results.sort(key=lambda t: t[0])
    entries = tuple((p, st) for p, st in results if st is not None)
    skipped = tuple(p for p, st in results if st is None)
    return SplittingFingerprint(field=field, bound=bound, entries=entries, skipped=skipped)


@dataclass(frozen=True)
class EquivalenceVerdict:
    mode: str  # "splitting_numbers_only" | "full_splitting_types"
    result: str  # "agree_to_bound" | "disagree"
    bound: int
    witness_prime: int | None
    detail: dict | None
    skipped_left: tuple[int, ...]
    skipped_right: tuple[int, ...]
    caveat: str

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "result": self.result,
            "bound": self.bound,
            "witness_prime": self.witness_prime,
            "detail": self.detail,
            "skipped": {"left": list(self.skipped_left), "right": list(self.skipped_right)},
            "caveat": self.caveat,
        }


def compare(
    fp_a: SplittingFingerprint, fp_b: SplittingFingerprint, mode: str = "splitting_numbers_only"
) -> EquivalenceVerdict:
    """Least-prime comparison of two fingerprints at the same bound."""
    if mode not in ("splitting_numbers_only", "full_splitting_types"):
        raise ValueError(f"unknown mode {mode!r}")
    if fp_a.bound != fp_b.bound:
        raise ValueError("fingerprints have different bounds")
    skipped = set(fp_a.skipped) | set(fp_b.skipped)
    caveat = f"agreement is evidence to bound {fp_a.bound} only, not a proof"
    if skipped:
        caveat += "; primes excluded as not p-maximal: " + ", ".join(
            str(p) for p in sorted(skipped)
        )
    amap, bmap = dict(fp_a.entries), dict(fp_b.entries)
    for p in primes_up_to(fp_a.bound):
        if p in skipped:
            continue
        sa, sb = amap[p], bmap[p]
        if mode == "splitting_numbers_only":
            if sa.g != sb.g:
                return EquivalenceVerdict(
                    mode=mode,
                    result="disagree",
                    bound=fp_a.bound,
                    witness_prime=p,
                    detail={"g": [sa.g, sb.g]},
                    skipped_left=fp_a.skipped,
                    skipped_right=fp_b.skipped,
                    caveat=caveat,
                )
        else:
            if sa.pairs != sb.pairs:
                return EquivalenceVerdict(
                    mode=mode,
                    result="disagree",
                    bound=fp_a.bound,
                    witness_prime=p,
                    detail={"pairs": [[list(t) for t in sa.pairs], [list(t) for t in sb.pairs]]},
                    skipped_left=fp_a.skipped,
                    skipped_right=fp_b.skipped,
                    caveat=caveat,
                )
    return EquivalenceVerdict(
        mode=mode,
        result="agree_to_bound",
        bound=fp_a.bound,
        witness_prime=None,
        detail=None,
        skipped_left=fp_a.skipped,
        skipped_right=fp_b.skipped,
        caveat=caveat,
    )


@dataclass(frozen=True)
class PipelineReport:
    """Splitting numbers recovered by counting Z[1/p]-labeled spectrum
    components, per field, plus the cross-check against compare()."""

    field_left: NumberField
    field_right: NumberField
    bound: int
    counts: tuple[tuple[int, int, int], ...]  # (p, count_left, count_right)
    verdict: EquivalenceVerdict
    skipped: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "fields": [self.field_left.label, self.field_right.label],
            "bound": self.bound,
            "counts": [list(row) for row in self.counts],
            "verdict": self.verdict.to_json(),
            "skipped": list(self.skipped),
        }


def invariant_pipeline(
    field_a: NumberField, field_b: NumberField, bound: int, *, jobs: int = 1
) -> PipelineReport:
    """For each rational p <= bound, count second-maximal components labeled
    Z[1/p] in each field's spectrum truncation and compare the counts; the
    result must coincide with compare() in splitting-numbers mode, which is
    asserted at runtime (PipelineMismatch on violation)."""
    fp_a = fingerprint(field_a, bound, jobs=jobs)
    fp_b = fingerprint(field_b, bound, jobs=jobs)
    uni_a = PrimeUniverse.over_rational_primes(field_a, bound)
    uni_b = PrimeUniverse.over_rational_primes(field_b, bound)
    comp_a = components_of_I2(uni_a)
    comp_b = components_of_I2(uni_b)
    if tuple(uni_a.skipped) != fp_a.skipped or tuple(uni_b.skipped) != fp_b.skipped:
        raise PipelineMismatch("universe and fingerprint disagree about skipped primes")

    ga, gb = fp_a.g_map(), fp_b.g_map()
    skipped = set(fp_a.skipped) | set(fp_b.skipped)
    counts = []
    witness = None
    for p in primes_up_to(bound):
        if p in skipped:
            continue
        ca = count_components_labeled(comp_a, p)
        cb = count_components_labeled(comp_b, p)
        counts.append((p, ca, cb))
        if ca != ga[p] or cb != gb[p]:
            raise PipelineMismatch(
                f"component count at p={p} disagrees with fingerprint: "
                f"({ca}, {cb}) vs ({ga[p]}, {gb[p]})"
            )
        if witness is None and ca != cb:
            witness = p
    verdict = compare(fp_a, fp_b, "splitting_numbers_only")
    if witness is None and verdict.result != "agree_to_bound":
        raise PipelineMismatch("pipeline agrees but compare() disagrees")
    if witness is not None and (verdict.result != "disagree" or verdict.witness_prime != witness):
        raise PipelineMismatch(
            f"pipeline witness {witness} differs from compare() verdict {verdict.to_json()}"
        )
    return PipelineReport(
        field_left=field_a,
        field_right=field_b,
        bound=bound,
        counts=tuple(counts),
        verdict=verdict,
        skipped=tuple(sorted(skipped)),
    )
