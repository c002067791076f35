"""Exact rational scalars, vectors and small dense matrices.

Scalars are :class:`fractions.Fraction` (always reduced, positive denominator,
so equality is structural).  Vectors are plain tuples of fractions; matrices
are immutable :class:`Mat` objects.  Matrix convention throughout the package:
column ``j`` holds the coordinates of the image of the ``j``-th basis vector.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Fraction
Vec = tuple  # tuple[Fraction, ...]
Number = Union[int, str, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


class LinAlgError(ValueError):
    pass


class SingularMatrix(LinAlgError):
    pass


class NonSquare(LinAlgError):
    pass


class SizeMismatch(LinAlgError):
    pass


def Q(value: Number) -> Fraction:
    """Coerce ``value`` to a Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact scalar {value!r}")
    return Fraction(value)


def vec(values: Iterable[Number]) -> Vec:
    return tuple(Q(v) for v in values)


def zeros(n: int) -> Vec:
    return (ZERO,) * n


def unit(n: int, i: int) -> Vec:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vadd(x: Vec, y: Vec) -> Vec:
    if len(x) != len(y):
        raise SizeMismatch(f"vector lengths {len(x)} and {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vec, y: Vec) -> Vec:
    if len(x) != len(y):
        raise SizeMismatch(f"vector lengths {len(x)} and {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def vscale(c: Number, x: Vec) -> Vec:
    c = Q(c)
    return tuple(c * a for a in x)


def dot(x: Vec, y: Vec) -> Fraction:
    if len(x) != len(y):
        raise SizeMismatch(f"vector lengths {len(x)} and {len(y)}")
    return sum((a * b for a, b in zip(x, y)), ZERO)


def is_zero_vec(x: Vec) -> bool:
    return all(a == 0 for a in x)


def mat_lincomb(coeffs: Sequence[Fraction], mats: Sequence["Mat"]) -> "Mat":
    """``sum(c * M)`` over the nonzero coefficients."""
    if len(coeffs) != len(mats):
        raise SizeMismatch("coefficient count does not match matrix count")
    terms = [(c, m) for c, m in zip(coeffs, mats) if c != 0]
    if not terms:
        return Mat.zeros(mats[0].rows, mats[0].cols)
    out = None
    for c, m in terms:
        term = m if c == 1 else m * c
        out = term if out is None else out + term
    return out


class Mat:
    """Immutable dense rational matrix."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Iterable[Iterable[Number]]):
        grid = tuple(tuple(Q(v) for v in row) for row in entries)
        if not grid or not grid[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "_e", grid)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def _trusted(cls, grid: tuple) -> "Mat":
        # grid is a nonempty rectangular tuple of tuples of Fractions
        m = object.__new__(cls)
        object.__setattr__(m, "rows", len(grid))
        object.__setattr__(m, "cols", len(grid[0]))
        object.__setattr__(m, "_e", grid)
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Mat":
        return cls._trusted(((ZERO,) * (rows if cols is None else cols),) * rows)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Number]]) -> "Mat":
        return cls(list(zip(*columns)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> "Mat":
        return Mat._trusted(tuple(zip(*self._e)))

    def __getitem__(self, key):
        i, j = key
        return self._e[i][j]

    def row(self, i: int) -> Vec:
        return self._e[i]

    def col(self, j: int) -> Vec:
        return tuple(r[j] for r in self._e)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._e]

    def __iter__(self):
        return iter(self._e)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self._e == other._e

    def __hash__(self):
        return hash(self._e)

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in r) for r in self._e)
        return f"Mat([{body}])"

    def _check_same(self, other: "Mat"):
        if self.shape != other.shape:
            raise SizeMismatch(f"shapes {self.shape} and {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat._trusted(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._e, other._e)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat._trusted(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._e, other._e)))

    def __neg__(self) -> "Mat":
        return Mat._trusted(tuple(tuple(-a for a in r) for r in self._e))

    def __mul__(self, c: Number) -> "Mat":
        c = Q(c)
        return Mat._trusted(tuple(tuple(c * a for a in r) for r in self._e))

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise SizeMismatch(f"cannot multiply {self.shape} by {other.shape}")
            ocols = list(zip(*other._e))
            return Mat._trusted(tuple(tuple(sum((a * b for a, b in zip(r, c) if a and b), ZERO) for c in ocols) for r in self._e))
        x = tuple(other)
        if len(x) != self.cols:
            raise SizeMismatch(f"cannot apply {self.shape} matrix to length-{len(x)} vector")
        return tuple(sum((a * b for a, b in zip(r, x) if a and b), ZERO) for r in self._e)

    def apply(self, x: Vec) -> Vec:
        return self @ x

    def is_zero(self) -> bool:
        return all(a == 0 for r in self._e for a in r)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    def is_skew(self) -> bool:
        return self.is_square and self == -self.T


def _require_square(A: Mat):
    if not A.is_square:
        raise NonSquare(f"matrix of shape {A.shape} is not square")


def trace(A: Mat) -> Fraction:
    _require_square(A)
    return sum((A[i, i] for i in range(A.rows)), ZERO)


def commutator(A: Mat, B: Mat) -> Mat:
    _require_square(A)
    _require_square(B)
    if A.shape != B.shape:
        raise SizeMismatch(f"shapes {A.shape} and {B.shape}")
    return A @ B - B @ A


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    pivots: list[int] = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve(A: Mat, b: Sequence[Number]) -> Vec:
    """Unique ``x`` with ``A @ x == b``; raises SingularMatrix otherwise."""
    _require_square(A)
    b = vec(b)
    if len(b) != A.rows:
        raise SizeMismatch(f"right-hand side has length {len(b)}, expected {A.rows}")
    aug = [list(A.row(i)) + [b[i]] for i in range(A.rows)]
    red, piv = _rref(aug)
    if piv[: A.cols] != list(range(A.cols)) or len(piv) < A.cols:
        raise SingularMatrix("matrix is not invertible")
    return tuple(red[i][-1] for i in range(A.cols))


def solve_many(A: Mat, B: Mat) -> Mat:
    """Solve ``A @ X == B`` column by column in one elimination pass."""
    _require_square(A)
    if B.rows != A.rows:
        raise SizeMismatch(f"right-hand side has {B.rows} rows, expected {A.rows}")
    aug = [list(A.row(i)) + list(B.row(i)) for i in range(A.rows)]
    red, piv = _rref(aug)
    if piv[: A.cols] != list(range(A.cols)):
        raise SingularMatrix("matrix is not invertible")
    return Mat([r[A.cols:] for r in red[: A.rows]])


def inverse(A: Mat) -> Mat:
    return solve_many(A, Mat.identity(A.rows))


def rank(A: Mat) -> int:
    _, piv = _rref([list(r) for r in A])
    return len(piv)


def rank_of_vectors(vectors: Sequence[Vec]) -> int:
    vectors = [v for v in vectors]
    if not vectors:
        return 0
    _, piv = _rref([list(v) for v in vectors])
    return len(piv)


def row_basis(vectors: Sequence[Vec]) -> list[Vec]:
    """A basis (reduced echelon rows) of the span of ``vectors``."""
    if not vectors:
        return []
    red, piv = _rref([list(v) for v in vectors])
    return [tuple(red[i]) for i in range(len(piv))]


def nullspace(A: Mat) -> list[Vec]:
    """Basis of ``{x : A @ x == 0}``."""
    red, piv = _rref([list(r) for r in A])
    free = [c for c in range(A.cols) if c not in piv]
    basis = []
    for f in free:
        x = [ZERO] * A.cols
        x[f] = ONE
        for i, p in enumerate(piv):
            x[p] = -red[i][f]
        basis.append(tuple(x))
    return basis


def det(A: Mat) -> Fraction:
    _require_square(A)
    rows = [list(r) for r in A]
    n = len(rows)
    result = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            result = -result
        result *= rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[c][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return result


def leading_minors(A: Mat) -> list[Fraction]:
    _require_square(A)
    return [det(Mat([A.row(i)[:k] for i in range(k)])) for k in range(1, A.rows + 1)]


def is_positive_definite(A: Mat) -> bool:
    """Sylvester's criterion on a symmetric matrix."""
    return A.is_symmetric() and all(m > 0 for m in leading_minors(A))
