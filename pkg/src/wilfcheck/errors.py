"""Exception hierarchy shared by all modules."""
from __future__ import annotations


class SemigroupError(Exception):
    """Base class for every error raised by wilfcheck."""


class GcdNotOne(SemigroupError, ValueError):
    def __init__(self, gcd: int) -> None:
        super().__init__(f"gcd of generators is {gcd}")
        self.gcd = gcd


class InvalidGapSet(SemigroupError, ValueError):
    """The complement of the gap set is not additively closed."""

    def __init__(self, pair: tuple[int, int]) -> None:
        a, b = pair
        super().__init__(f"complement of gap set is not closed: {a} + {b} = {a + b} is a gap")
        self.pair = pair


class SemigroupOverflow(SemigroupError, OverflowError):
    pass


class IsFullSemigroup(SemigroupError, ValueError):
    def __init__(self) -> None:
        super().__init__("S = N has no Frobenius number")


class UnsupportedEmbeddingDim(SemigroupError, ValueError):
    def __init__(self, e: int) -> None:
        super().__init__(f"bound requires embedding dimension 4 or 5, got {e}")
        self.embedding_dim = e


class WitnessNotFound(SemigroupError, RuntimeError):
    """No atom a_i (i >= 2) with x - a_i sporadic. Indicates a bug."""

    def __init__(self, x: int) -> None:
        super().__init__(f"no witness atom for {x}")
        self.x = x


class MismatchedInputs(SemigroupError, ValueError):
    pass


class CapExceeded(SemigroupError, ValueError):
    pass
