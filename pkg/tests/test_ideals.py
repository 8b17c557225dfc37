import pytest

from semihyper.core import EmptyOperandError, HypothesisError, PreconditionError, SizeLimitError
from semihyper.ideals import (
    enumerate_hyperideals,
    enumerate_one_sided,
    ideal_generated,
    ideal_product,
    ideal_sum,
    is_hyperideal,
    is_left_hyperideal,
    is_subsemihyperring,
    left_annihilator,
    principal_left,
    principal_right,
    restrict,
    right_annihilator,
    subsemihyperring_plus_ideal,
)
from semihyper.oracle import generated_ideal_oracle
from conftest import fz


def test_lattice_goldens(TOP2, KQ5, KQ6):
    assert enumerate_hyperideals(TOP2).ideals == (fz(0), fz(0, 1), fz(0, 1, 2))
    assert enumerate_hyperideals(KQ5).ideals == (fz(0), fz(0, 1, 2))
    assert enumerate_hyperideals(KQ6).ideals == (fz(0), fz(0, 2), fz(0, 3), fz(0, 1, 2, 3))


def test_lattice_contains_matrix(KQ6):
    lat = enumerate_hyperideals(KQ6)
    assert lat.contains[0][3] and lat.contains[1][3]
    assert not lat.contains[1][2] and not lat.contains[2][1]
    assert lat.minimal_over(fz(0)) == (fz(0, 2), fz(0, 3))


def test_lattice_closed_under_meet_and_sum(TOP2, KQ5, KQ6):
    for S in (TOP2, KQ5, KQ6):
        lat = enumerate_hyperideals(S)
        for I in lat.ideals:
            for J in lat.ideals:
                assert is_hyperideal(S, I & J)
                assert S.subset_add(I, J) in lat.ideals


def test_enumeration_cap():
    from semihyper.construct import QuotientSpec, quotient_hyperring

    S = quotient_hyperring(QuotientSpec(5, fz(1)))
    with pytest.raises(SizeLimitError, match="--cap"):
        enumerate_hyperideals(S, cap=4)


def test_lattice_index_api(KQ6):
    lat = enumerate_hyperideals(KQ6)
    for i, I in enumerate(lat.ideals):
        assert lat.index(I) == i
    with pytest.raises(KeyError):
        lat.index(fz(0, 1))


def test_one_sided_enumeration_cap():
    from semihyper.construct import QuotientSpec, quotient_hyperring

    S = quotient_hyperring(QuotientSpec(7, fz(1)))
    with pytest.raises(SizeLimitError):
        enumerate_one_sided(S, "left", cap=4)


def test_more_empty_operand_errors(TOP2):
    from semihyper.ideals import is_right_hyperideal, is_subsemihyperring

    with pytest.raises(EmptyOperandError):
        is_right_hyperideal(TOP2, fz())
    with pytest.raises(EmptyOperandError):
        is_subsemihyperring(TOP2, fz())
    with pytest.raises(EmptyOperandError):
        ideal_generated(TOP2, fz())
    with pytest.raises(EmptyOperandError):
        left_annihilator(TOP2, fz())
    with pytest.raises(EmptyOperandError):
        right_annihilator(TOP2, fz())


def test_ideal_product_preconditions(KQ6):
    with pytest.raises(PreconditionError):
        ideal_product(KQ6, fz(0, 1), fz(0))
    with pytest.raises(PreconditionError):
        ideal_product(KQ6, fz(0), fz(0, 1))


def test_restrict_preconditions(TOP2, KQ6):
    with pytest.raises(PreconditionError):
        restrict(TOP2, fz(1, 2))  # zero missing
    with pytest.raises(PreconditionError):
        restrict(KQ6, fz(0, 1))  # U+U = {O,V} escapes, not a subsemihyperring


def test_sided_predicates(TOP2, KQ5, KQ6):
    assert is_left_hyperideal(TOP2, fz(0, 1))
    assert not is_left_hyperideal(TOP2, fz(0, 2))  # e1*e2 = e1 escapes
    assert is_hyperideal(KQ6, fz(0, 2))
    assert not is_hyperideal(KQ6, fz(0, 1))  # U+U = {O,V} escapes
    assert is_hyperideal(KQ5, fz(0))
    for S in (TOP2, KQ5, KQ6):
        assert is_hyperideal(S, S.carrier)
    with pytest.raises(EmptyOperandError):
        is_hyperideal(TOP2, fz())


def test_subsemihyperring(TOP2, KQ5, KQ6):
    assert is_subsemihyperring(TOP2, fz(0, 2))
    assert not is_subsemihyperring(KQ6, fz(0, 1))
    # every hyperideal is a subsemihyperring
    for S in (TOP2, KQ5, KQ6):
        for I in enumerate_hyperideals(S).ideals:
            assert is_subsemihyperring(S, I)


def test_ideal_generated_matches_oracle(TOP2, KQ5, KQ6):
    assert ideal_generated(KQ6, fz(3)) == fz(0, 3)
    assert ideal_generated(KQ5, fz(1)) == KQ5.carrier
    for S in (TOP2, KQ5, KQ6):
        assert ideal_generated(S, fz(S.zero)) == fz(S.zero)
        n = S.order
        for mask in range(1, 1 << n):
            X = frozenset(i for i in range(n) if mask >> i & 1)
            assert ideal_generated(S, X) == generated_ideal_oracle(S, X)


def test_principal_ideals(TOP2, KQ5, KQ6):
    assert principal_right(TOP2, 1) == fz(0, 1)
    assert principal_right(KQ5, 1) == KQ5.carrier
    assert principal_right(KQ6, 3) == fz(0, 3)
    assert principal_left(KQ6, 3) == fz(0, 3)


def test_principal_minimality(KQ6):
    for a in KQ6.elements():
        r = principal_right(KQ6, a)
        assert a in r
        for K in enumerate_one_sided(KQ6, "right"):
            if a in K:
                assert r <= K


def test_principal_requires_unity(M3EX):
    with pytest.raises(HypothesisError):
        principal_right(M3EX, 1)


def test_ideal_sum(TOP2, KQ6):
    assert ideal_sum(KQ6, fz(0, 2), fz(0, 3)) == KQ6.carrier
    assert ideal_sum(TOP2, fz(0), fz(0, 1)) == fz(0, 1)
    for I in enumerate_hyperideals(KQ6).ideals:
        assert ideal_sum(KQ6, I, fz(0)) == I
    with pytest.raises(PreconditionError):
        ideal_sum(KQ6, fz(0, 1), fz(0))


def test_ideal_sum_minimality(KQ6):
    lat = enumerate_hyperideals(KQ6)
    for A in lat.ideals:
        for B in lat.ideals:
            total = ideal_sum(KQ6, A, B)
            assert is_hyperideal(KQ6, total) and (A | B) <= total
            meet_of_bounds = KQ6.carrier
            for K in lat.ideals:
                if (A | B) <= K:
                    assert total <= K
                    meet_of_bounds &= K
            assert total == meet_of_bounds


def test_ideal_product(TOP2, KQ6):
    assert ideal_product(KQ6, fz(0, 2), fz(0, 3)) == fz(0)
    assert ideal_product(TOP2, fz(0, 1), fz(0, 1)) == fz(0, 1)
    for S in (TOP2, KQ6):
        for I in enumerate_hyperideals(S).ideals:
            assert ideal_product(S, I, fz(S.zero)) == fz(S.zero)
            for J in enumerate_hyperideals(S).ideals:
                assert ideal_product(S, I, J) <= I & J


def test_annihilators(TOP2, KQ6):
    assert left_annihilator(TOP2, fz(1)) == fz(0)
    assert left_annihilator(KQ6, fz(0, 3)) == fz(0, 2)
    for S in (TOP2, KQ6):
        assert left_annihilator(S, fz(S.zero)) == S.carrier
        assert right_annihilator(S, fz(S.zero)) == S.carrier
    # left annihilators are left hyperideals for arbitrary nonempty subsets
    for S in (TOP2, KQ6):
        for mask in range(1, 1 << S.order):
            A = frozenset(i for i in range(S.order) if mask >> i & 1)
            assert is_left_hyperideal(S, left_annihilator(S, A))
    # two-sided when the argument is a left hyperideal
    for A in enumerate_one_sided(KQ6, "left"):
        assert is_hyperideal(KQ6, left_annihilator(KQ6, A))


def test_subsemihyperring_plus_ideal(TOP2, KQ6):
    assert subsemihyperring_plus_ideal(TOP2, fz(0, 2), fz(0, 1)) == fz(0, 1, 2)
    assert subsemihyperring_plus_ideal(KQ6, fz(0, 3), fz(0, 2)) == KQ6.carrier
    for I in enumerate_hyperideals(KQ6).ideals:
        assert subsemihyperring_plus_ideal(KQ6, I, I) == I
    with pytest.raises(PreconditionError):
        subsemihyperring_plus_ideal(KQ6, fz(0, 1), fz(0))


def test_restriction_ideal(TOP2):
    sub, to_sub = restrict(TOP2, fz(0, 1))
    assert sub.is_valid and sub.order == 2
    meet = frozenset((to_sub[0],))
    assert is_hyperideal(sub, meet)
