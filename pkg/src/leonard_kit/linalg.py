"""Exact dense linear algebra over the rationals.

Everything in this package reduces to computations done here: reduced
row echelon forms, canonical subspaces of a rational coordinate space,
exact eigendecomposition for matrices with simple rational spectra,
and changes of basis.  Matrices and subspaces are immutable, entries
are ``fractions.Fraction``, and every result is exact, so equality of
canonical forms decides equality of the underlying objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from .errors import AmbientMismatch, NotSimpleRationalSpectrum, SingularBasis

Rational = Fraction
Scalar = Union[Fraction, int, str]
Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(x: Scalar) -> Fraction:
    """Coerce an int, string ("p/q" or "-3"), or Fraction to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def as_vector(entries: Iterable[Scalar]) -> Vector:
    return tuple(as_fraction(x) for x in entries)


class ExactMatrix:
    """Immutable dense matrix of rationals."""

    __slots__ = ("entries",)

    entries: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        entries = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        if not entries or not entries[0]:
            raise ValueError("a matrix needs at least one row and one column")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise ValueError("all rows must have the same length")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: Iterable[Scalar]) -> "ExactMatrix":
        vals = as_vector(values)
        n = len(vals)
        return cls([[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Iterable[Scalar]]) -> "ExactMatrix":
        cols = [as_vector(c) for c in columns]
        if not cols:
            raise ValueError("need at least one column")
        return cls([[col[i] for col in cols] for i in range(len(cols[0]))])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self.entries))

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace needs a square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), ZERO)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise AmbientMismatch(f"cannot add a {self.shape} and a {other.shape} matrix")
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-x for x in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise AmbientMismatch(
                    f"cannot multiply a {self.shape} and a {other.shape} matrix"
                )
            cols = other.transpose().entries
            return ExactMatrix(
                [
                    [sum((a * b for a, b in zip(row, col)), ZERO) for col in cols]
                    for row in self.entries
                ]
            )
        if isinstance(other, (Fraction, int)):
            c = as_fraction(other)
            return ExactMatrix([[c * x for x in row] for row in self.entries])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Fraction, int)):
            return self * other
        return NotImplemented

    def apply(self, v: Iterable[Scalar]) -> Vector:
        """Matrix times column vector."""
        vec = as_vector(v)
        if len(vec) != self.cols:
            raise AmbientMismatch(f"vector of length {len(vec)} does not fit {self.shape}")
        return tuple(sum((a * b for a, b in zip(row, vec)), ZERO) for row in self.entries)

    def inverse(self) -> "ExactMatrix":
        if not self.is_square:
            raise SingularBasis("only square matrices can be inverted")
        n = self.rows
        aug = [list(self.entries[i]) + [ONE if j == i else ZERO for j in range(n)]
               for i in range(n)]
        reduced, pivots = _rref_rows(aug)
        if pivots != list(range(n)):
            raise SingularBasis("matrix is singular")
        return ExactMatrix([row[n:] for row in reduced[:n]])

    def det(self) -> Fraction:
        if not self.is_square:
            raise ValueError("determinant needs a square matrix")
        rows = [list(r) for r in self.entries]
        n = self.rows
        sign = ONE
        result = ONE
        for col in range(n):
            piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
            if piv is None:
                return ZERO
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                sign = -sign
            pivot = rows[col][col]
            result *= pivot
            for r in range(col + 1, n):
                factor = rows[r][col] / pivot
                if factor != 0:
                    rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
        return sign * result

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)
        return f"ExactMatrix([{body}])"


def commutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a * b - b * a


def _rref_rows(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduce in place to RREF; return (rows, pivot column indices)."""
    if not rows:
        return rows, []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def rref(m: ExactMatrix) -> ExactMatrix:
    """Reduced row echelon form: unit pivots, zeros above and below."""
    rows, _ = _rref_rows([list(r) for r in m.entries])
    return ExactMatrix(rows)


def rank(m: ExactMatrix) -> int:
    _, pivots = _rref_rows([list(r) for r in m.entries])
    return len(pivots)


def kernel(m: ExactMatrix) -> tuple[Vector, ...]:
    """Basis of the right kernel {x : m x = 0}, one vector per free column."""
    rows, pivots = _rref_rows([list(r) for r in m.entries])
    n = m.cols
    pivot_set = set(pivots)
    basis = []
    for c in range(n):
        if c in pivot_set:
            continue
        x = [ZERO] * n
        x[c] = ONE
        for r, pc in enumerate(pivots):
            x[pc] = -rows[r][c]
        basis.append(tuple(x))
    return tuple(basis)


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n held in canonical form.

    The basis rows are in reduced row echelon form (unit pivots, zeros
    above and below, pivots strictly left to right), so two Subspaces
    are equal exactly when they are the same subspace.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "basis", tuple(as_vector(row) for row in self.basis)
        )
        last_pivot = -1
        for i, row in enumerate(self.basis):
            if len(row) != self.ambient_dim:
                raise AmbientMismatch("basis vector length differs from ambient dimension")
            pivot = next((j for j, x in enumerate(row) if x != 0), None)
            if pivot is None:
                raise ValueError("canonical basis cannot contain a zero row")
            if row[pivot] != 1 or pivot <= last_pivot:
                raise ValueError("basis is not in reduced row echelon form")
            if any(other[pivot] != 0 for k, other in enumerate(self.basis) if k != i):
                raise ValueError("basis is not in reduced row echelon form")
            last_pivot = pivot

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Iterable[Scalar]]) -> "Subspace":
        """Canonical subspace spanned by arbitrary vectors (zero rows dropped)."""
        vecs = [as_vector(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise AmbientMismatch("vector length differs from ambient dimension")
        if not vecs:
            return cls(ambient_dim, ())
        rows, pivots = _rref_rows([list(v) for v in vecs])
        return cls(ambient_dim, tuple(tuple(r) for r in rows[: len(pivots)]))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.span(ambient_dim, ExactMatrix.identity(ambient_dim).entries)

    @classmethod
    def line(cls, vector: Iterable[Scalar]) -> "Subspace":
        v = as_vector(vector)
        space = cls.span(len(v), [v])
        if space.dim != 1:
            raise ValueError("the zero vector spans no line")
        return space

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    def representative(self) -> Vector:
        """The canonical basis vector of a one-dimensional subspace."""
        if self.dim != 1:
            raise ValueError(f"representative needs a line, got dimension {self.dim}")
        return self.basis[0]

    def contains_vector(self, v: Iterable[Scalar]) -> bool:
        residual = list(as_vector(v))
        if len(residual) != self.ambient_dim:
            raise AmbientMismatch("vector length differs from ambient dimension")
        for row in self.basis:
            pivot = next(j for j, x in enumerate(row) if x != 0)
            coeff = residual[pivot]
            if coeff != 0:
                residual = [x - coeff * y for x, y in zip(residual, row)]
        return all(x == 0 for x in residual)

    def contains(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatch("subspaces live in different ambient spaces")
        return all(self.contains_vector(row) for row in other.basis)


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    """Canonical form of U + W."""
    if u.ambient_dim != w.ambient_dim:
        raise AmbientMismatch("subspaces live in different ambient spaces")
    return Subspace.span(u.ambient_dim, u.basis + w.basis)


def subspace_intersection(u: Subspace, w: Subspace) -> Subspace:
    """Canonical form of U ∩ W.

    A vector lies in the intersection exactly when it is a combination
    a·U = b·W; the coefficient pairs (a, b) form the kernel of the
    stacked system with columns (U^T | -W^T).
    """
    if u.ambient_dim != w.ambient_dim:
        raise AmbientMismatch("subspaces live in different ambient spaces")
    n = u.ambient_dim
    if u.is_zero or w.is_zero:
        return Subspace.zero(n)
    stacked = ExactMatrix(
        [
            [u.basis[i][r] for i in range(u.dim)]
            + [-w.basis[j][r] for j in range(w.dim)]
            for r in range(n)
        ]
    )
    vectors = []
    for coeffs in kernel(stacked):
        vec = [ZERO] * n
        for i in range(u.dim):
            if coeffs[i] != 0:
                vec = [x + coeffs[i] * y for x, y in zip(vec, u.basis[i])]
        vectors.append(tuple(vec))
    return Subspace.span(n, vectors)


def charpoly(m: ExactMatrix) -> tuple[Fraction, ...]:
    """Monic characteristic polynomial, coefficients from constant to leading.

    Computed by the trace recursion M_k = A (M_{k-1} + c_{n-k+1} I),
    c_{n-k} = -tr(M_k)/k, which is exact in characteristic zero.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    power = m
    coeffs[n - 1] = -power.trace()
    for k in range(2, n + 1):
        power = m * (power + coeffs[n - k + 1] * ExactMatrix.identity(n))
        coeffs[n - k] = -power.trace() / k
    return tuple(coeffs)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for p, e in factors.items():
        divs = [dv * p**k for dv in divs for k in range(e + 1)]
    return sorted(divs)


def _primitive_int_coeffs(coeffs: Sequence[Fraction]) -> list[int]:
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints]


def _horner(coeffs: Sequence[int], x: Fraction) -> Fraction:
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    """Exact synthetic division by (x - root); the remainder must vanish."""
    n = len(coeffs) - 1
    out = [ZERO] * n
    acc = coeffs[n]
    for k in range(n - 1, -1, -1):
        out[k] = acc
        acc = coeffs[k] + root * acc
    if acc != 0:
        raise ValueError("claimed root does not divide the polynomial")
    return out


def _rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction] | None:
    """All roots of a rational polynomial that splits over Q, else None.

    Candidate roots p/q run over divisors of the cleared trailing and
    leading coefficients; each found root is divided out before the
    next search.
    """
    work = list(coeffs)
    roots: list[Fraction] = []
    while len(work) > 1:
        ints = _primitive_int_coeffs(work)
        if ints[0] == 0:
            root = ZERO
        else:
            root = None
            seen: set[Fraction] = set()
            for p in _divisors(ints[0]):
                for q in _divisors(ints[-1]):
                    cand = Fraction(p, q)
                    if cand in seen:
                        continue
                    seen.add(cand)
                    if _horner(ints, cand) == 0:
                        root = cand
                    elif _horner(ints, -cand) == 0:
                        root = -cand
                    if root is not None:
                        break
                if root is not None:
                    break
            if root is None:
                return None
        roots.append(root)
        work = _deflate(work, root)
    return roots


def simple_rational_eigen(m: ExactMatrix) -> tuple[tuple[Fraction, Subspace], ...]:
    """Full exact eigendecomposition for a simple rational spectrum.

    Returns the n pairs (eigenvalue, one-dimensional eigenspace) in
    descending eigenvalue order.  Raises NotSimpleRationalSpectrum when
    the characteristic polynomial has fewer than n distinct rational
    roots, which means the matrix cannot belong to a Leonard pair over
    the rationals.
    """
    if not m.is_square:
        raise ValueError("eigendecomposition needs a square matrix")
    n = m.rows
    roots = _rational_roots(charpoly(m))
    if roots is None:
        raise NotSimpleRationalSpectrum(
            "the characteristic polynomial has an irrational root"
        )
    if len(set(roots)) != n:
        raise NotSimpleRationalSpectrum(
            f"only {len(set(roots))} distinct rational eigenvalues for size {n}"
        )
    result = []
    for lam in sorted(roots, reverse=True):
        shifted = m - ExactMatrix.diagonal([lam] * n)
        space = Subspace.span(n, kernel(shifted))
        if space.dim != 1:
            raise NotSimpleRationalSpectrum(
                f"eigenspace of {lam} has dimension {space.dim}"
            )
        result.append((lam, space))
    return tuple(result)


def represent_in_basis(m: ExactMatrix, basis: Sequence[Iterable[Scalar]]) -> ExactMatrix:
    """Matrix of the operator in the given basis: S^{-1} m S with the
    basis vectors as the columns of S."""
    if not m.is_square:
        raise ValueError("change of basis needs a square matrix")
    vecs = [as_vector(v) for v in basis]
    if len(vecs) != m.rows or any(len(v) != m.rows for v in vecs):
        raise AmbientMismatch("basis size differs from the matrix dimension")
    s = ExactMatrix.from_columns(vecs)
    return s.inverse() * m * s
