from fractions import Fraction

import pytest

from oracles import naive_invariants
from wilfcheck.bounds import check_wilf
from wilfcheck.core import FULL, from_generators
from wilfcheck.errors import IsFullSemigroup
from wilfcheck.invariants import invariants_of, sporadic_elements, wilf_number


@pytest.mark.parametrize("gens, f, g, m, e, sporadic, d", [
    ([2, 3], 1, 1, 2, 2, 1, Fraction(1, 2)),
    ([3, 5, 7], 4, 3, 3, 3, 2, Fraction(2, 5)),
    ([4, 5, 6, 7], 3, 3, 4, 4, 1, Fraction(1, 4)),
])
def test_invariants_examples(gens, f, g, m, e, sporadic, d):
    inv = invariants_of(from_generators(gens))
    assert (inv.frobenius, inv.genus, inv.multiplicity, inv.embedding_dim) == (f, g, m, e)
    assert inv.sporadic_count == sporadic
    assert inv.wilf_density == d
    assert inv.atoms == tuple(sorted(gens))


def test_full_semigroup_has_no_invariants():
    for fn in (invariants_of, sporadic_elements, wilf_number):
        with pytest.raises(IsFullSemigroup):
            fn(FULL)


@pytest.mark.parametrize("gens, expected", [
    ([2, 3], (0,)),
    ([3, 5, 7], (0, 3)),
    ([2, 11], (0, 2, 4, 6, 8)),
])
def test_sporadic_examples(gens, expected):
    assert sporadic_elements(from_generators(gens)).elements == expected


@pytest.mark.parametrize("gens, w", [([2, 3], 0), ([3, 5, 7], 1), ([4, 5, 6, 7], 0)])
def test_wilf_number_examples(gens, w):
    assert wilf_number(from_generators(gens)) == w


def test_invariants_against_oracle(small_semigroups):
    for s in small_semigroups[1:]:
        inv = invariants_of(s)
        ref = naive_invariants(s.atoms)
        assert inv.frobenius == ref["f"]
        assert inv.genus == ref["g"]
        assert inv.multiplicity == ref["m"]
        assert list(inv.atoms) == ref["atoms"]
        assert list(sporadic_elements(s)) == ref["sporadic"]
        assert inv.wilf_density == ref["d"]


def test_structural_invariants(small_semigroups):
    for s in small_semigroups[1:]:
        inv = invariants_of(s)
        f, g, e, m = inv.frobenius, inv.genus, inv.embedding_dim, inv.multiplicity
        assert f not in s and f + 1 in s
        assert 1 <= inv.sporadic_count <= f + 1
        assert 0 < inv.wilf_density <= 1
        assert inv.wilf_density == Fraction(inv.sporadic_count, f + 1)
        assert 2 <= e <= m
        assert len({a % m for a in inv.atoms}) == e
        assert g >= e - 1 and f >= m - 1
        L = sporadic_elements(s)
        assert len(L) == f + 1 - g and 0 in L
        assert all(x in s and x <= f for x in L)
        assert (wilf_number(s) >= 0) == check_wilf(inv).holds
