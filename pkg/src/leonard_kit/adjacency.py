"""Adjacency of Leonard pairs.

Two pairs on the same space are adjacent when every standard
decomposition of each is split for the other; equivalently, when they
share the same four standard flags but induce different principal
relations.  Adjacent pairs admit a unique role labeling w, x, y, z of
the shared flags from which four scalar sequences are read off; those
sequences satisfy an exact product identity and fall jointly into the
arithmetic or the q-classical branch.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .errors import (
    DegenerateDimension,
    DichotomyViolation,
    DimensionMismatch,
    NotAdjacent,
    TheoremViolation,
)
from .flags import Flag, decomposition_from_flags, principal_relation, standard_flag_set
from .leonard import Kind, LeonardPair, eigenvalue_sequence, standard_decompositions
from .sequences import SequenceClass, SequenceTag, classify_sequence
from .split import SplitType, split_type


@dataclass(frozen=True)
class AdjacencyLabeling:
    """Role labeling of the shared flag set of two adjacent pairs.

    w and x are the A-standard flags, y and z the A*-standard ones;
    w and z are B-standard, x and y are B*-standard.  theta, theta_star,
    eta, and eta_star are the sequences read along [wx], [yz], [zw],
    and [xy] respectively.
    """

    w: Flag
    x: Flag
    y: Flag
    z: Flag
    theta: tuple[Fraction, ...]
    theta_star: tuple[Fraction, ...]
    eta: tuple[Fraction, ...]
    eta_star: tuple[Fraction, ...]

    @property
    def d(self) -> int:
        return len(self.theta) - 1


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of the exact transition identity over all index cells."""

    holds: bool
    cells: int
    first_failure: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class DichotomyResult:
    """Joint branch of the four labeled sequences."""

    tag: SequenceTag
    q: Optional[Fraction] = None


def _require_same_space(p1: LeonardPair, p2: LeonardPair) -> None:
    if p1.ambient_dim != p2.ambient_dim:
        raise DimensionMismatch(
            f"pairs act on spaces of dimension {p1.ambient_dim} and {p2.ambient_dim}"
        )


def _all_standard_decompositions(pair: LeonardPair):
    return standard_decompositions(pair, Kind.A) + standard_decompositions(
        pair, Kind.A_STAR
    )


def are_adjacent(p1: LeonardPair, p2: LeonardPair) -> bool:
    """Definition route: every standard decomposition of one pair is
    split for the other.  The condition is symmetric; both directions
    are computed and must agree."""
    _require_same_space(p1, p2)
    if p1.d == 0:
        warnings.warn(
            "adjacency is vacuous on a one-dimensional space", stacklevel=2
        )
        return True
    forward = all(
        split_type(dec, p2) is not SplitType.NONE
        for dec in _all_standard_decompositions(p1)
    )
    backward = all(
        split_type(dec, p1) is not SplitType.NONE
        for dec in _all_standard_decompositions(p2)
    )
    assert forward == backward, "adjacency must be symmetric"
    return forward


def are_adjacent_via_flags(p1: LeonardPair, p2: LeonardPair) -> bool:
    """Flag route: equal standard flag sets and different principal relations."""
    _require_same_space(p1, p2)
    if p1.d == 0:
        raise DegenerateDimension("the flag route needs dimension at least 2")
    if standard_flag_set(p1).as_set() != standard_flag_set(p2).as_set():
        return False
    return principal_relation(p1) != principal_relation(p2)


def _sole(flags: Sequence[Flag], others: Sequence[Flag]) -> Flag:
    hits = [f for f in flags if f in others]
    assert len(hits) == 1, "role intersection must contain exactly one flag"
    return hits[0]


def build_labeling(p1: LeonardPair, p2: LeonardPair) -> AdjacencyLabeling:
    """Assign the roles w, x, y, z and extract the four sequences.

    Each role is the unique flag in the intersection of one standard
    pair of p1 with one of p2, so the labeling is determined once the
    two pairs are fixed.
    """
    if p1.d == 0:
        raise DegenerateDimension("labeling needs dimension at least 2")
    if not are_adjacent(p1, p2):
        raise NotAdjacent("the pairs are not adjacent")
    fs1, fs2 = standard_flag_set(p1), standard_flag_set(p2)
    w = _sole(fs1.a_flags, fs2.a_flags)
    x = _sole(fs1.a_flags, fs2.a_star_flags)
    y = _sole(fs1.a_star_flags, fs2.a_star_flags)
    z = _sole(fs1.a_star_flags, fs2.a_flags)
    theta = eigenvalue_sequence(p1, decomposition_from_flags(w, x), Kind.A)
    theta_star = eigenvalue_sequence(p1, decomposition_from_flags(y, z), Kind.A_STAR)
    eta = eigenvalue_sequence(p2, decomposition_from_flags(z, w), Kind.A)
    eta_star = eigenvalue_sequence(p2, decomposition_from_flags(x, y), Kind.A_STAR)
    return AdjacencyLabeling(w, x, y, z, theta, theta_star, eta, eta_star)


def verify_transition_identity(lab: AdjacencyLabeling) -> IdentityCheck:
    """Exact check, for all 0 <= j <= i <= d, of

        prod_{k<j} (theta_{d-i} - theta_{d-k}) / (theta_{d-j} - theta_{d-k})
            = prod_{j<k<=i} (eta_0 - eta_k) / (eta_j - eta_k)

    with empty products equal to one."""
    theta, eta = lab.theta, lab.eta
    d = lab.d
    cells = 0
    first_failure = None
    for i in range(d + 1):
        for j in range(i + 1):
            cells += 1
            if first_failure is not None:
                continue
            lhs_num = lhs_den = Fraction(1)
            for k in range(j):
                lhs_num *= theta[d - i] - theta[d - k]
                lhs_den *= theta[d - j] - theta[d - k]
            rhs_num = rhs_den = Fraction(1)
            for k in range(j + 1, i + 1):
                rhs_num *= eta[0] - eta[k]
                rhs_den *= eta[j] - eta[k]
            if lhs_num * rhs_den != rhs_num * lhs_den:
                first_failure = (i, j)
    return IdentityCheck(first_failure is None, cells, first_failure)


def classify_dichotomy(lab: AdjacencyLabeling) -> DichotomyResult:
    """Classify all four sequences and require a single joint branch.

    In the q-classical branch the four recovered bases must agree up to
    the q <-> 1/q flip that reorienting a sequence causes; the reported
    q is the one of theta as labeled.
    """
    classes: list[SequenceClass] = [
        classify_sequence(seq)
        for seq in (lab.theta, lab.theta_star, lab.eta, lab.eta_star)
    ]
    if all(c.tag is SequenceTag.ARITHMETIC for c in classes):
        return DichotomyResult(SequenceTag.ARITHMETIC)
    if all(c.tag is SequenceTag.Q_CLASSICAL for c in classes):
        q = classes[0].q
        assert q is not None
        if all(c.q in (q, 1 / q) for c in classes):
            return DichotomyResult(SequenceTag.Q_CLASSICAL, q=q)
    raise DichotomyViolation(
        "labeled sequences classify as "
        + ", ".join(c.tag.value for c in classes)
        + " with no common branch"
    )


def check_mutually_adjacent(pairs: Sequence[LeonardPair]) -> bool:
    """True when the pairs are pairwise adjacent.

    More than three pairwise adjacent pairs cannot exist, so that
    outcome raises TheoremViolation instead of being reported.
    """
    pairs = list(pairs)
    for p in pairs[1:]:
        _require_same_space(pairs[0], p)
    if pairs and pairs[0].d == 0:
        raise DegenerateDimension("mutual adjacency needs dimension at least 2")
    verdict = all(are_adjacent(p, q) for p, q in combinations(pairs, 2))
    if verdict and len(pairs) > 3:
        raise TheoremViolation(
            f"{len(pairs)} pairwise adjacent Leonard pairs cannot exist"
        )
    return verdict
