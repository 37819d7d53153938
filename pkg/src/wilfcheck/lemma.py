"""Witness covers for the bound (e-1)(f+1-g) >= m-1.

Every x in X = {f+1, ..., f+m} that is not a multiple of m can be written
x = a_i + l with a non-minimal atom a_i (i >= 2) and a sporadic l. Hence the
m - 1 such x all lie in Y = union of (a_i + L) over i >= 2, and
m - 1 <= |Y| <= (e-1)|L|.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bounds import check_lemma3
from .core import NumericalSemigroup, iter_bits
from .errors import IsFullSemigroup, MismatchedInputs, WitnessNotFound
from .invariants import InvariantSet, invariants_of


@dataclass(frozen=True)
class WitnessCover:
    semigroup: NumericalSemigroup
    window: tuple[int, ...]
    excluded: int
    assignments: dict[int, tuple[int, int]]
    cover_set: tuple[int, ...]

    @property
    def cover_size(self) -> int:
        return len(self.cover_set)


@dataclass(frozen=True)
class LemmaChainCheck:
    """m - 1 <= |Y| <= (e-1)(f+1-g)."""

    lower: int
    cover_size: int
    upper: int
    lower_holds: bool
    upper_holds: bool

    @property
    def holds(self) -> bool:
        return self.lower_holds and self.upper_holds

    @property
    def lower_tight(self) -> bool:
        return self.lower == self.cover_size

    @property
    def upper_tight(self) -> bool:
        return self.cover_size == self.upper


def cover_masks(s: NumericalSemigroup) -> tuple[int, int, int]:
    """Bitmasks ``(sporadic, needed, cover)`` for L, X minus its multiple of m, and Y."""
    c, m = s.conductor, s.multiplicity
    sporadic = s.membership & ((1 << c) - 1)
    cover = 0
    for a in s.atoms[1:]:
        cover |= sporadic << a
    mult = m * (-(-c // m))
    needed = (((1 << m) - 1) << c) ^ (1 << mult)
    return sporadic, needed, cover


def build_witness_cover(s: NumericalSemigroup) -> WitnessCover:
    if s.conductor == 0:
        raise IsFullSemigroup()
    c, m = s.conductor, s.multiplicity
    sporadic, needed, cover = cover_masks(s)
    window = tuple(range(c, c + m))
    multiples = [x for x in window if x % m == 0]
    if len(multiples) != 1:
        raise AssertionError(f"{s}: window {window} has multiples {multiples}")

    assignments = {}
    for x in iter_bits(needed):
        for a in s.atoms[1:]:
            if a > x:
                break
            if (sporadic >> (x - a)) & 1:
                assignments[x] = (a, x - a)
                break
        else:
            raise WitnessNotFound(x)
    return WitnessCover(
        semigroup=s,
        window=window,
        excluded=multiples[0],
        assignments=assignments,
        cover_set=tuple(iter_bits(cover)),
    )


def verify_lemma_bound(cover: WitnessCover, inv: InvariantSet | None = None) -> LemmaChainCheck:
    s = cover.semigroup
    if inv is None:
        inv = invariants_of(s)
    elif inv.atoms != s.atoms:
        raise MismatchedInputs(
            f"cover built for {s} but invariants describe {inv.label()}")
    lower = inv.multiplicity - 1
    upper = (inv.embedding_dim - 1) * inv.sporadic_count
    size = cover.cover_size
    result = LemmaChainCheck(lower, size, upper, lower <= size, size <= upper)
    if result.holds and not check_lemma3(inv).holds:
        raise AssertionError(f"{s}: cover chain holds but (e-1)(f+1-g) < m-1")
    return result
