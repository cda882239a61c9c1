from fractions import Fraction

import pytest

from leonard_kit.errors import (
    DecompositionNotStandard,
    DimensionMismatch,
    NotADecomposition,
    NotSimpleRationalSpectrum,
    NotTridiagonalizable,
)
from leonard_kit.leonard import (
    Decomposition,
    Kind,
    eigenvalue_sequence,
    standard_decompositions,
    verify_leonard,
)
from leonard_kit.linalg import ExactMatrix, Subspace, subspace_intersection


def test_verify_krawtchouk_d1():
    pair = verify_leonard(
        ExactMatrix.diagonal([1, -1]),
        ExactMatrix([["1/3", "2/3"], ["4/3", "-1/3"]]),
    )
    assert pair.d == 1
    assert pair.eigenvalue_sequences == ((1, -1), (-1, 1))
    assert pair.dual_eigenvalue_sequences == ((1, -1), (-1, 1))


def test_verify_rejects_diagonal_partner():
    with pytest.raises(NotTridiagonalizable):
        verify_leonard(ExactMatrix.diagonal([1, -1]), ExactMatrix.diagonal([1, -1]))


def test_verify_rejects_irrational_partner_spectrum():
    # a_star has eigenvalues +-sqrt(2), so the swapped side fails
    with pytest.raises(NotSimpleRationalSpectrum):
        verify_leonard(ExactMatrix.diagonal([1, -1]), ExactMatrix([[0, 2], [1, 0]]))


def test_verify_rejects_size_mismatch():
    with pytest.raises(DimensionMismatch):
        verify_leonard(ExactMatrix.identity(2), ExactMatrix.identity(3))


def test_verify_recovers_order_after_permutation(kraw):
    base = kraw(2, Fraction(1, 2))
    # conjugate by the permutation swapping coordinates 0 and 1
    perm = ExactMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    pair = verify_leonard(perm * base.a * perm.inverse(), perm * base.a_star * perm.inverse())
    assert pair.d == 2
    assert pair.a == ExactMatrix.diagonal([0, 2, -2])
    # the path ordering recovers the spectral order regardless of the permutation
    assert pair.eigenvalue_sequences == ((2, 0, -2), (-2, 0, 2))


def test_d0_pair_accepted():
    pair = verify_leonard(ExactMatrix([[5]]), ExactMatrix([["7/2"]]))
    assert pair.d == 0
    assert len(standard_decompositions(pair, Kind.A)) == 1
    assert len(standard_decompositions(pair, Kind.A_STAR)) == 1


def test_standard_decompositions_are_inversions(kraw):
    pair = kraw(2, Fraction(1, 2))
    for kind in Kind:
        decs = standard_decompositions(pair, kind)
        assert len(decs) == 2
        assert decs[1] == decs[0].inversion()


def test_standard_decompositions_d1_spans(kraw):
    pair = kraw(1, Fraction(1, 3))
    decs = standard_decompositions(pair, Kind.A)
    assert decs[0].components == (Subspace.line((1, 0)), Subspace.line((0, 1)))
    assert decs[1].components == (Subspace.line((0, 1)), Subspace.line((1, 0)))


def test_eigenvalue_sequence_orientations(kraw):
    pair = kraw(2, Fraction(1, 2))
    decs = standard_decompositions(pair, Kind.A)
    assert eigenvalue_sequence(pair, decs[0], Kind.A) == (2, 0, -2)
    assert eigenvalue_sequence(pair, decs[1], Kind.A) == (-2, 0, 2)


def test_dual_sequence_d1(kraw):
    pair = kraw(1, Fraction(1, 3))
    dec = standard_decompositions(pair, Kind.A_STAR)[0]
    assert eigenvalue_sequence(pair, dec, Kind.A_STAR) == (1, -1)
    assert pair.a_star.det() == -1
    assert pair.a_star.trace() == 0


def test_wrong_kind_rejected(kraw):
    pair = kraw(2, Fraction(1, 2))
    dec = standard_decompositions(pair, Kind.A_STAR)[0]
    with pytest.raises(DecompositionNotStandard):
        eigenvalue_sequence(pair, dec, Kind.A)


def test_eigenvalues_pairwise_distinct(kraw):
    for d in range(1, 6):
        pair = kraw(d, Fraction(1, 3))
        for seq in pair.eigenvalue_sequences + pair.dual_eigenvalue_sequences:
            assert len(set(seq)) == len(seq)


def test_no_common_eigenline(kraw):
    # no line is simultaneously an eigenspace of A and of A* when d >= 1
    for d in (1, 2, 3):
        pair = kraw(d, Fraction(2, 5))
        for dec_a in standard_decompositions(pair, Kind.A):
            for dec_s in standard_decompositions(pair, Kind.A_STAR):
                for u in dec_a.components:
                    for w in dec_s.components:
                        assert subspace_intersection(u, w).is_zero


def test_three_term_ratio_on_verified_pairs(kraw):
    from leonard_kit.sequences import check_three_term_ratio

    for d in (3, 4, 5):
        pair = kraw(d, Fraction(1, 3))
        for i, theta in enumerate(pair.eigenvalue_sequences):
            holds, common = check_three_term_ratio(
                theta, pair.dual_eigenvalue_sequences[i]
            )
            assert holds
            if d >= 3:
                assert common == 3  # arithmetic sequences give ratio 3


def test_decomposition_validation():
    with pytest.raises(NotADecomposition):
        Decomposition((Subspace.line((1, 0)), Subspace.line((2, 0))))
    with pytest.raises(NotADecomposition):
        Decomposition((Subspace.line((1, 0)),))
    with pytest.raises(NotADecomposition):
        Decomposition((Subspace.full(2), Subspace.line((1, 0))))


def test_swapped_pair_is_verified_view(kraw):
    pair = kraw(2, Fraction(1, 2))
    swapped = pair.swapped()
    assert swapped.a == pair.a_star
    assert swapped.eigenvalue_sequences == pair.dual_eigenvalue_sequences
    # the swap agrees with verifying from scratch
    direct = verify_leonard(pair.a_star, pair.a)
    assert direct == swapped
