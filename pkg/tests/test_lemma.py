import pytest

from wilfcheck.bounds import check_lemma3
from wilfcheck.core import FULL, from_generators
from wilfcheck.errors import IsFullSemigroup, MismatchedInputs
from wilfcheck.invariants import invariants_of, sporadic_elements
from wilfcheck.lemma import build_witness_cover, verify_lemma_bound


def test_two_three():
    cover = build_witness_cover(from_generators([2, 3]))
    assert cover.window == (2, 3)
    assert cover.excluded == 2
    assert cover.assignments == {3: (3, 0)}
    assert cover.cover_set == (3,)
    chk = verify_lemma_bound(cover)
    assert (chk.lower, chk.cover_size, chk.upper) == (1, 1, 1)
    assert chk.holds and chk.lower_tight and chk.upper_tight


def test_three_five_seven():
    cover = build_witness_cover(from_generators([3, 5, 7]))
    assert cover.window == (5, 6, 7)
    assert cover.assignments == {5: (5, 0), 7: (7, 0)}
    assert cover.cover_set == (5, 7, 8, 10)
    chk = verify_lemma_bound(cover)
    assert (chk.lower, chk.cover_size, chk.upper) == (2, 4, 4)


def test_maximal_embedding_dimension():
    cover = build_witness_cover(from_generators([5, 6, 7, 8, 9]))
    assert cover.window == (5, 6, 7, 8, 9)
    assert cover.assignments == {x: (x, 0) for x in (6, 7, 8, 9)}
    chk = verify_lemma_bound(cover)
    assert (chk.lower, chk.cover_size, chk.upper) == (4, 4, 4)


def test_tie_break_prefers_smallest_atom():
    # <4,6,9,11>: f = 7, L = {0,4,6}; 10 is covered only via 6+4, 9 and 11 by themselves
    s = from_generators([4, 6, 9, 11])
    cover = build_witness_cover(s)
    for x, (a, ell) in cover.assignments.items():
        smaller = [b for b in s.atoms[1:] if b < a and (x - b) in sporadic_elements(s)]
        assert not smaller


def test_full_semigroup_rejected():
    with pytest.raises(IsFullSemigroup):
        build_witness_cover(FULL)


def test_mismatched_inputs():
    cover = build_witness_cover(from_generators([3, 5, 7]))
    with pytest.raises(MismatchedInputs):
        verify_lemma_bound(cover, invariants_of(from_generators([2, 3])))


def test_cover_properties(small_semigroups):
    for s in small_semigroups[1:]:
        inv = invariants_of(s)
        L = set(sporadic_elements(s))
        cover = build_witness_cover(s)
        m, f = inv.multiplicity, inv.frobenius
        assert len(cover.window) == m
        assert [x for x in cover.window if x % m == 0] == [cover.excluded]
        assert set(cover.assignments) == set(cover.window) - {cover.excluded}
        for x, (a, ell) in cover.assignments.items():
            assert a + ell == x and ell in L and ell < f + 1 and ell in s
            assert a in inv.atoms[1:]
        for a in inv.atoms[1:]:
            if a in cover.assignments:
                assert cover.assignments[a] == (a, 0)
        expected_y = {a + ell for a in inv.atoms[1:] for ell in L}
        assert set(cover.cover_set) == expected_y
        chk = verify_lemma_bound(cover, inv)
        assert chk.holds
        assert check_lemma3(inv).holds
