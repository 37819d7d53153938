"""Exact invariants: Frobenius number, genus, multiplicity, embedding dimension, Wilf density."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import NumericalSemigroup, iter_bits
from .errors import IsFullSemigroup


@dataclass(frozen=True)
class InvariantSet:
    frobenius: int
    genus: int
    multiplicity: int
    embedding_dim: int
    atoms: tuple[int, ...]
    sporadic_count: int
    wilf_density: Fraction

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    def label(self) -> str:
        return "<" + ",".join(map(str, self.atoms)) + ">"


@dataclass(frozen=True)
class SporadicSet:
    """Members of S below the conductor (0 included)."""

    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements


def _require_proper(s: NumericalSemigroup) -> None:
    if s.conductor == 0:
        raise IsFullSemigroup()


def invariants_of(s: NumericalSemigroup) -> InvariantSet:
    _require_proper(s)
    c = s.conductor
    sporadic = c - s.genus
    return InvariantSet(
        frobenius=c - 1,
        genus=s.genus,
        multiplicity=s.multiplicity,
        embedding_dim=len(s.atoms),
        atoms=s.atoms,
        sporadic_count=sporadic,
        wilf_density=Fraction(sporadic, c),
    )


def sporadic_elements(s: NumericalSemigroup) -> SporadicSet:
    _require_proper(s)
    c = s.conductor
    elements = tuple(iter_bits(s.membership & ((1 << c) - 1)))
    if len(elements) != c - s.genus:
        raise AssertionError(
            f"{s}: {len(elements)} sporadic elements but f+1-g = {c - s.genus}")
    return SporadicSet(elements)


def wilf_number(s: NumericalSemigroup) -> int:
    """e(f+1-g) - (f+1); nonnegative iff d >= 1/e."""
    _require_proper(s)
    c = s.conductor
    return len(s.atoms) * (c - s.genus) - c
