"""Numerical semigroups stored as a membership bitmap up to conductor + multiplicity.

Bit ``n`` of ``membership`` is set iff ``n`` is in the semigroup, for
``0 <= n < conductor + multiplicity``; everything from the conductor on
is a member. Bitmaps are plain Python ints.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from math import gcd

from .errors import GcdNotOne, InvalidGapSet, SemigroupOverflow

#: Largest bitmap window any construction may allocate.
MAX_WINDOW = 1 << 22

_new = object.__new__
_set = object.__setattr__


def iter_bits(x: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``x`` in ascending order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _low_mask(n: int) -> int:
    return (1 << n) - 1


class NumericalSemigroup:
    """Immutable co-finite additive submonoid of the nonnegative integers.

    Build instances with :func:`from_generators` or :func:`from_gaps`.
    Two semigroups are equal iff they have the same members.
    """

    __slots__ = ("conductor", "multiplicity", "membership", "atoms", "genus")

    conductor: int
    multiplicity: int
    membership: int
    atoms: tuple[int, ...]
    genus: int

    def __init__(self, conductor: int, multiplicity: int, membership: int,
                 atoms: Iterable[int]) -> None:
        # Trusted constructor: no closure check. Use check_invariants() to audit.
        _set(self, "conductor", conductor)
        _set(self, "multiplicity", multiplicity)
        _set(self, "membership", membership)
        _set(self, "atoms", tuple(atoms))
        _set(self, "genus", conductor - (membership & _low_mask(conductor)).bit_count())

    @classmethod
    def _make(cls, conductor: int, multiplicity: int, membership: int,
              atoms: tuple[int, ...], genus: int) -> NumericalSemigroup:
        s = _new(cls)
        _set(s, "conductor", conductor)
        _set(s, "multiplicity", multiplicity)
        _set(s, "membership", membership)
        _set(s, "atoms", atoms)
        _set(s, "genus", genus)
        return s

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("NumericalSemigroup is immutable")

    def __delattr__(self, name: str) -> None:
        raise AttributeError("NumericalSemigroup is immutable")

    def __reduce__(self):
        return (NumericalSemigroup._make,
                (self.conductor, self.multiplicity, self.membership, self.atoms, self.genus))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.conductor == other.conductor and self.membership == other.membership

    def __hash__(self) -> int:
        return hash((self.conductor, self.membership))

    def __contains__(self, n: int) -> bool:
        return contains(self, n)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.atoms)) + ">"

    def __repr__(self) -> str:
        return f"NumericalSemigroup({self})"

    @property
    def is_full(self) -> bool:
        """True for the semigroup of all nonnegative integers."""
        return self.conductor == 0

    @property
    def frobenius(self) -> int:
        """Largest gap; -1 for the full semigroup."""
        return self.conductor - 1

    @property
    def embedding_dim(self) -> int:
        return len(self.atoms)

    def gaps(self) -> list[int]:
        missing = ~self.membership & _low_mask(self.conductor)
        return list(iter_bits(missing))

    def check_invariants(self) -> None:
        """Raise ``AssertionError`` if any representation invariant is broken."""
        c, m, mask = self.conductor, self.multiplicity, self.membership
        window = c + m
        assert mask & 1, "0 must be a member"
        assert mask >> window == 0, "bits set beyond the window"
        assert (mask >> c) == _low_mask(m), "window tail [c, c+m) must be full"
        if c > 0:
            assert not (mask >> (c - 1)) & 1, "conductor is not tight"
        assert c != 1, "conductor 1 is impossible (1 in S forces S = N)"
        star = mask & ~1
        if c == 0:
            assert m == 1 and self.atoms == (1,)
            return
        assert star & -star == 1 << m, "multiplicity is not the smallest positive member"
        for a in iter_bits(star):
            if 2 * a >= window:
                break
            assert ((star >> a) << (2 * a)) & _low_mask(window) & ~mask == 0, \
                f"not closed under adding {a}"
        assert self.atoms == _atoms_from_membership(mask, window), "atoms are stale"
        assert self.atoms[0] == m
        g = 0
        for a in self.atoms:
            g = gcd(g, a)
        assert g == 1, "gcd of atoms must be 1"
        assert (c >= 2) == (len(self.atoms) >= 2) == (not self.is_full)
        assert self.genus == len(self.gaps())


FULL = NumericalSemigroup(0, 1, 0b1, (1,))


def _atoms_from_membership(mask: int, window: int) -> tuple[int, ...]:
    """Members of S* in [0, window) that are not a sum of two members of S*.

    ``window`` must be at least conductor + multiplicity so that no atom is
    missed.
    """
    full = _low_mask(window)
    star = mask & ~1 & full
    sums = 0
    for s in iter_bits(star):
        if 2 * s >= window:
            break
        sums |= star << s
    return tuple(iter_bits(star & ~sums))


def from_generators(gens: Iterable[int], max_window: int = MAX_WINDOW) -> NumericalSemigroup:
    """Smallest numerical semigroup containing ``gens``.

    Redundant generators are dropped. Raises :class:`GcdNotOne` when the
    generators have a common factor and :class:`SemigroupOverflow` when the
    closure needs a window wider than ``max_window`` bits.
    """
    gens = sorted(set(gens))
    if not gens:
        raise ValueError("at least one generator is required")
    if gens[0] < 1:
        raise ValueError(f"generators must be positive, got {gens[0]}")
    d = 0
    for a in gens:
        d = gcd(d, a)
    if d != 1:
        raise GcdNotOne(d)
    if gens[0] == 1:
        return FULL

    m = gens[0]
    window = max(2 * gens[-1], 64)
    while True:
        if window > max_window:
            raise SemigroupOverflow(
                f"closure of {gens} needs more than {max_window} bits")
        full = _low_mask(window)
        reach = 1
        atoms = []
        for a in gens:
            if (reach >> a) & 1:
                continue  # already a sum of smaller generators
            atoms.append(a)
            step = a
            while step < window:
                reach = (reach | (reach << step)) & full
                step <<= 1
        # m consecutive members at the top: everything beyond is in S
        if reach >> (window - m) == _low_mask(m):
            break
        window *= 2

    conductor = (~reach & full).bit_length()
    membership = reach & _low_mask(conductor + m)
    return NumericalSemigroup(conductor, m, membership, atoms)


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """The semigroup N \\ gaps, if that set is additively closed.

    Raises :class:`InvalidGapSet` carrying the lexicographically first pair
    ``(a, b)`` with ``a <= b`` both outside ``gaps`` and ``a + b`` in ``gaps``.
    """
    gapmask = 0
    for x in gaps:
        if x < 1:
            raise ValueError(f"gaps must be positive integers, got {x}")
        gapmask |= 1 << x
    if not gapmask:
        return FULL
    c = gapmask.bit_length()
    low = _low_mask(c)
    members = low & ~gapmask
    for a in iter_bits(members & ~1):
        if 2 * a >= c:
            break
        hit = ((members >> a) << (2 * a)) & gapmask
        if hit:
            p = (hit & -hit).bit_length() - 1
            raise InvalidGapSet((a, p - a))
    star = members & ~1
    m = (star & -star).bit_length() - 1 if star else c
    window = c + m
    membership = members | (_low_mask(window) & ~low)
    return NumericalSemigroup(c, m, membership, _atoms_from_membership(membership, window))


def gaps_of(s: NumericalSemigroup) -> list[int]:
    return s.gaps()


def contains(s: NumericalSemigroup, n: int) -> bool:
    if n >= s.conductor:
        return True
    if n < 0:
        return False
    return bool((s.membership >> n) & 1)


def minimal_generators(s: NumericalSemigroup) -> list[int]:
    """The atoms S* \\ (S* + S*), ascending. Cached on the instance."""
    return list(s.atoms)


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Inverse of ``str()``: accepts ``"<3,5,7>"`` or ``"3,5,7"``."""
    body = text.strip().removeprefix("<").removesuffix(">")
    try:
        gens = [int(tok) for tok in body.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"cannot parse generator list {text!r}") from None
    return from_generators(gens)
