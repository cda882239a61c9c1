"""Split classification of decompositions with respect to a Leonard pair.

A decomposition is LU-split when the pair acts (in the induced basis)
as a lower bidiagonal A and an upper bidiagonal A*, and UL-split in the
transposed situation.  The same verdict can be reached through flags:
[xy] is LU-split exactly when x is A*-standard and y is A-standard.
"""

from __future__ import annotations

from enum import Enum

from .errors import NotADecomposition
from .flags import induced_flag, standard_flag_set
from .leonard import Decomposition, LeonardPair
from .linalg import ExactMatrix


class BidiagonalShape(Enum):
    LOWER = "lower"
    UPPER = "upper"
    BOTH = "both"
    NEITHER = "neither"


class SplitType(Enum):
    LU = "lu"
    UL = "ul"
    BOTH = "both"
    NONE = "none"


def bidiagonal_shape(m: ExactMatrix) -> BidiagonalShape:
    """Classify the zero pattern; diagonal matrices count as both."""
    if not m.is_square:
        raise ValueError("shape classification needs a square matrix")
    n = m.rows
    lower = all(m[i, j] == 0 for i in range(n) for j in range(n) if j - i not in (0, -1))
    upper = all(m[i, j] == 0 for i in range(n) for j in range(n) if j - i not in (0, 1))
    if lower and upper:
        return BidiagonalShape.BOTH
    if lower:
        return BidiagonalShape.LOWER
    if upper:
        return BidiagonalShape.UPPER
    return BidiagonalShape.NEITHER


def _is_lower(shape: BidiagonalShape) -> bool:
    return shape in (BidiagonalShape.LOWER, BidiagonalShape.BOTH)


def _is_upper(shape: BidiagonalShape) -> bool:
    return shape in (BidiagonalShape.UPPER, BidiagonalShape.BOTH)


def _check_ambient(dec: Decomposition, pair: LeonardPair) -> None:
    if dec.ambient_dim != pair.ambient_dim:
        raise NotADecomposition(
            f"decomposition of Q^{dec.ambient_dim} does not fit a pair on Q^{pair.ambient_dim}"
        )


def split_type(dec: Decomposition, pair: LeonardPair) -> SplitType:
    """Classify by representing both operators in the induced basis.

    The verdict depends only on the zero patterns, hence only on the
    component lines and not on the chosen representatives.
    """
    _check_ambient(dec, pair)
    s = dec.basis_matrix()
    s_inv = s.inverse()
    shape_a = bidiagonal_shape(s_inv * pair.a * s)
    shape_a_star = bidiagonal_shape(s_inv * pair.a_star * s)
    lu = _is_lower(shape_a) and _is_upper(shape_a_star)
    ul = _is_upper(shape_a) and _is_lower(shape_a_star)
    if lu and ul:
        # any nonzero off-diagonal entry forbids the opposite shape
        assert pair.d == 0, "both split types can only coexist at d = 0"
        return SplitType.BOTH
    if lu:
        return SplitType.LU
    if ul:
        return SplitType.UL
    return SplitType.NONE


def split_type_via_flags(dec: Decomposition, pair: LeonardPair) -> SplitType:
    """Classify by searching the standard flags for a pair (x, y) with
    [xy] equal to the decomposition.

    Since decompositions biject with ordered opposite flag pairs, [xy]
    equals the decomposition exactly when x and y are the flags induced
    by it and by its inversion.
    """
    _check_ambient(dec, pair)
    flag_set = standard_flag_set(pair)
    f = induced_flag(dec)
    g = induced_flag(dec.inversion())
    lu = any(x == f for x in flag_set.a_star_flags) and any(
        y == g for y in flag_set.a_flags
    )
    ul = any(x == f for x in flag_set.a_flags) and any(
        y == g for y in flag_set.a_star_flags
    )
    if lu and ul:
        assert pair.d == 0, "both split types can only coexist at d = 0"
        return SplitType.BOTH
    if lu:
        return SplitType.LU
    if ul:
        return SplitType.UL
    return SplitType.NONE
