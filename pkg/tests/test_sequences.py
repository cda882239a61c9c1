from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leonard_kit.errors import DimensionMismatch, RepeatedEntry
from leonard_kit.sequences import SequenceTag, check_three_term_ratio, classify_sequence

nonzero_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(
    lambda x: x != 0
)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
q_values = st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(
    lambda x: x not in (0, 1, -1)
)


def test_arithmetic_example():
    result = classify_sequence([3, 1, -1, -3])
    assert result.tag is SequenceTag.ARITHMETIC
    assert (result.alpha, result.beta) == (-2, 3)


def test_q_classical_example():
    result = classify_sequence([1, 2, 4, 8])
    assert result.tag is SequenceTag.Q_CLASSICAL
    assert (result.q, result.alpha, result.beta) == (2, 1, 0)


def test_neither_example():
    assert classify_sequence([0, 1, 3, 4]).tag is SequenceTag.NEITHER


def test_repeated_entry_rejected():
    with pytest.raises(RepeatedEntry):
        classify_sequence([1, 2, 1])


def test_short_sequences_are_arithmetic():
    single = classify_sequence([Fraction(7, 2)])
    assert single.tag is SequenceTag.ARITHMETIC
    assert single.beta == Fraction(7, 2)
    double = classify_sequence([5, 1])
    assert double.tag is SequenceTag.ARITHMETIC
    assert (double.alpha, double.beta) == (-4, 5)


def test_length_three_geometric_is_q_classical():
    result = classify_sequence([1, 3, 9])
    assert result.tag is SequenceTag.Q_CLASSICAL
    assert result.q == 3


@given(nonzero_rationals, rationals, st.integers(min_value=2, max_value=12))
def test_arithmetic_recovery(alpha, beta, length):
    seq = [alpha * i + beta for i in range(length)]
    result = classify_sequence(seq)
    assert result.tag is SequenceTag.ARITHMETIC
    assert (result.alpha, result.beta) == (alpha, beta)
    reverse = classify_sequence(seq[::-1])
    assert reverse.tag is SequenceTag.ARITHMETIC
    assert reverse.alpha == -alpha


@given(nonzero_rationals, rationals, q_values, st.integers(min_value=3, max_value=10))
def test_q_classical_recovery_and_reversal(alpha, beta, q, length):
    seq = [alpha * q**i + beta for i in range(length)]
    result = classify_sequence(seq)
    assert result.tag is SequenceTag.Q_CLASSICAL
    assert (result.q, result.alpha, result.beta) == (q, alpha, beta)
    reverse = classify_sequence(seq[::-1])
    assert reverse.tag is SequenceTag.Q_CLASSICAL
    assert reverse.q == 1 / q


@given(nonzero_rationals, rationals, q_values, st.integers(min_value=1, max_value=10))
def test_recovered_parameters_reproduce_sequence(alpha, beta, q, length):
    seq = [alpha * q**i + beta for i in range(length)]
    result = classify_sequence(seq)
    if result.tag is SequenceTag.ARITHMETIC:
        assert all(seq[i] == result.alpha * i + result.beta for i in range(length))
    else:
        assert all(seq[i] == result.alpha * result.q**i + result.beta for i in range(length))


def test_three_term_ratio_arithmetic_pair():
    holds, common = check_three_term_ratio([0, 1, 2, 3], [0, 2, 4, 6])
    assert holds and common == 3


def test_three_term_ratio_vacuous_at_d2():
    holds, common = check_three_term_ratio([0, 1, 3], [0, 1, 3])
    assert holds and common is None


def test_three_term_ratio_single_cell_at_d3():
    # only i = 2 is checked, so this non-arithmetic sequence passes
    holds, common = check_three_term_ratio([0, 1, 3, 4], [0, 1, 3, 4])
    assert holds and common == 2


def test_three_term_ratio_fails_at_length_five():
    holds, common = check_three_term_ratio([0, 1, 3, 4, 5], [0, 1, 3, 4, 5])
    assert not holds and common is None


def test_three_term_ratio_length_mismatch():
    with pytest.raises(DimensionMismatch):
        check_three_term_ratio([0, 1], [0, 1, 2])


def test_three_term_ratio_repeated_entry():
    with pytest.raises(RepeatedEntry):
        check_three_term_ratio([0, 1, 0, 2], [0, 1, 2, 3])


def test_constant_ratio_extends_from_first_window(standard_triple):
    # once the first two difference ratios agree, the whole ratio is constant
    for d in (4, 5, 6):
        pair = standard_triple(d)[0]
        for seq in pair.eigenvalue_sequences:
            diffs = [b - a for a, b in zip(seq, seq[1:])]
            ratios = {b / a for a, b in zip(diffs, diffs[1:])}
            assert ratios == {Fraction(1)}
