"""Exact evaluation of the Wilf-density inequalities.

Each ``check_*`` function evaluates one inequality with :class:`Fraction`
arithmetic, keeping the two sides exactly as the inequality is written.
:data:`SLACK_KERNELS` holds the same inequalities cleared of denominators,
as plain integer functions of ``(c, g, e, m)`` with ``c = f + 1``; the
scanner uses those in its hot loop. The test suite checks that both
agree on every small semigroup.
"""
from __future__ import annotations

import enum
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedEmbeddingDim
from .invariants import InvariantSet


class BoundId(enum.Enum):
    WILF_1 = "WILF_1"
    ZHAI_2 = "ZHAI_2"
    LEMMA_3 = "LEMMA_3"
    TWO_STAR = "TWO_STAR"
    THREE_STAR = "THREE_STAR"
    PROP_A = "PROP_A"
    PROP_B = "PROP_B"

    @property
    def order(self) -> int:
        return _ORDER[self]

    @classmethod
    def parse(cls, name: str) -> BoundId:
        key = name.strip().lower().replace("-", "_")
        try:
            return _ALIASES[key]
        except KeyError:
            raise ValueError(f"unknown bound {name!r}") from None


_ORDER = {b: i for i, b in enumerate(BoundId)}
_ALIASES = {b.value.lower(): b for b in BoundId}
_ALIASES.update({
    "wilf": BoundId.WILF_1, "zhai": BoundId.ZHAI_2, "lemma": BoundId.LEMMA_3,
    "lemma3": BoundId.LEMMA_3, "2star": BoundId.TWO_STAR, "3star": BoundId.THREE_STAR,
    "prop_a": BoundId.PROP_A, "prop_b": BoundId.PROP_B,
})


class PropABranch(enum.Enum):
    CONDUCTOR_LE_3M = "CONDUCTOR_LE_3M"
    CONDUCTOR_GT_3M = "CONDUCTOR_GT_3M"


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated inequality ``lhs <relation> rhs``.

    ``slack`` is oriented so that the inequality holds iff ``slack >= 0``
    (``> 0`` when ``strict``): ``lhs - rhs`` for ``>=``/``>``, ``rhs - lhs``
    for ``<=``.
    """

    bound_id: BoundId
    lhs: Fraction
    rhs: Fraction
    relation: str
    holds: bool
    is_equality: bool
    slack: Fraction
    strict: bool
    branch: PropABranch | None = None


def _make(bound_id: BoundId, lhs, rhs, relation: str,
          branch: PropABranch | None = None) -> BoundCheck:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    if relation == "<=":
        slack = rhs - lhs
    elif relation in (">=", ">"):
        slack = lhs - rhs
    else:
        raise ValueError(f"unknown relation {relation!r}")
    strict = relation == ">"
    return BoundCheck(
        bound_id=bound_id, lhs=lhs, rhs=rhs, relation=relation,
        holds=slack > 0 if strict else slack >= 0,
        is_equality=slack == 0, slack=slack, strict=strict, branch=branch,
    )


def check_wilf(inv: InvariantSet) -> BoundCheck:
    return _make(BoundId.WILF_1, inv.wilf_density, Fraction(1, inv.embedding_dim), ">=")


def check_zhai(inv: InvariantSet) -> BoundCheck:
    e, m, c = inv.embedding_dim, inv.multiplicity, inv.conductor
    rhs = Fraction(1, e) - Fraction(m - 1, c) * Fraction(e - 2, 2 * e)
    return _make(BoundId.ZHAI_2, inv.wilf_density, rhs, ">=")


def check_lemma3(inv: InvariantSet) -> BoundCheck:
    e, m = inv.embedding_dim, inv.multiplicity
    return _make(BoundId.LEMMA_3, (e - 1) * inv.sporadic_count, m - 1, ">=")


def check_2star(inv: InvariantSet) -> BoundCheck:
    e, m, c = inv.embedding_dim, inv.multiplicity, inv.conductor
    return _make(BoundId.TWO_STAR, 2 * c,
                 2 * e * inv.sporadic_count + (e - 2) * (m - 1), "<=")


def check_3star(inv: InvariantSet) -> BoundCheck:
    e, m = inv.embedding_dim, inv.multiplicity
    return _make(BoundId.THREE_STAR, m - 1, (e - 1) * inv.sporadic_count, "<=")


def check_prop_a(inv: InvariantSet) -> BoundCheck:
    """Case split on f+1 <= 3m; only defined for e in {4, 5}."""
    e = inv.embedding_dim
    if e not in (4, 5):
        raise UnsupportedEmbeddingDim(e)
    if inv.conductor <= 3 * inv.multiplicity:
        return _make(BoundId.PROP_A, inv.wilf_density, Fraction(1, e), ">=",
                     PropABranch.CONDUCTOR_LE_3M)
    return _make(BoundId.PROP_A, inv.wilf_density, Fraction(8 - e, 6 * e), ">",
                 PropABranch.CONDUCTOR_GT_3M)


def check_prop_b(inv: InvariantSet) -> BoundCheck:
    e = inv.embedding_dim
    return _make(BoundId.PROP_B, inv.wilf_density, Fraction(2, e * e - e + 2), ">=")


CHECKS: dict[BoundId, Callable[[InvariantSet], BoundCheck]] = {
    BoundId.WILF_1: check_wilf,
    BoundId.ZHAI_2: check_zhai,
    BoundId.LEMMA_3: check_lemma3,
    BoundId.TWO_STAR: check_2star,
    BoundId.THREE_STAR: check_3star,
    BoundId.PROP_A: check_prop_a,
    BoundId.PROP_B: check_prop_b,
}


def applies(bound_id: BoundId, embedding_dim: int) -> bool:
    return bound_id is not BoundId.PROP_A or embedding_dim in (4, 5)


def check_all(inv: InvariantSet) -> list[BoundCheck]:
    return [fn(inv) for bid, fn in CHECKS.items() if applies(bid, inv.embedding_dim)]


# Integer kernels: (c, g, e, m) -> (numerator, denominator > 0, strict, branch),
# slack = numerator / denominator, or None when the bound does not apply.

def _k_wilf(c, g, e, m):
    return e * (c - g) - c, c * e, False, None


def _k_zhai(c, g, e, m):
    return 2 * e * (c - g) - 2 * c + (m - 1) * (e - 2), 2 * e * c, False, None


def _k_lemma(c, g, e, m):
    return (e - 1) * (c - g) - (m - 1), 1, False, None


def _k_two_star(c, g, e, m):
    return 2 * e * (c - g) + (e - 2) * (m - 1) - 2 * c, 1, False, None


def _k_three_star(c, g, e, m):
    return (e - 1) * (c - g) - (m - 1), 1, False, None


def _k_prop_a(c, g, e, m):
    if e != 4 and e != 5:
        return None
    if c <= 3 * m:
        return e * (c - g) - c, c * e, False, PropABranch.CONDUCTOR_LE_3M
    return 6 * e * (c - g) - (8 - e) * c, 6 * e * c, True, PropABranch.CONDUCTOR_GT_3M


def _k_prop_b(c, g, e, m):
    q = e * e - e + 2
    return (c - g) * q - 2 * c, c * q, False, None


SLACK_KERNELS = {
    BoundId.WILF_1: _k_wilf,
    BoundId.ZHAI_2: _k_zhai,
    BoundId.LEMMA_3: _k_lemma,
    BoundId.TWO_STAR: _k_two_star,
    BoundId.THREE_STAR: _k_three_star,
    BoundId.PROP_A: _k_prop_a,
    BoundId.PROP_B: _k_prop_b,
}
