"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`; vectors are tuples of fractions and
matrices are immutable :class:`RatMatrix` objects. Nothing in this module
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]


class DimensionError(ValueError):
    pass


class SingularError(ArithmeticError):
    pass


class NotSymmetricError(ValueError):
    pass


def vector(values: Iterable) -> tuple:
    """Coerce an iterable of ints/fractions/strings into an exact vector."""
    out = tuple(Fraction(v) for v in values)
    if not out:
        raise DimensionError("vectors must have length >= 1")
    return out


def ones(k: int) -> tuple:
    return (Fraction(1),) * k


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence, v: Sequence) -> tuple:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Sequence) -> tuple:
    c = Fraction(c)
    return tuple(c * a for a in u)


def norm_sq(u: Sequence) -> Fraction:
    return dot(u, u)


def combination(coeffs: Sequence, vectors: Sequence[Sequence]) -> tuple:
    """Return sum(c_i * v_i) for equally long vectors."""
    if len(coeffs) != len(vectors) or not vectors:
        raise DimensionError("need one coefficient per vector")
    k = len(vectors[0])
    acc = [Fraction(0)] * k
    for c, v in zip(coeffs, vectors):
        if len(v) != k:
            raise DimensionError("vectors differ in length")
        if c:
            for t in range(k):
                acc[t] += c * v[t]
    return tuple(acc)


class RatMatrix:
    """Immutable dense matrix of fractions stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(Fraction(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionError(
                f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "RatMatrix":
        data = [list(r) for r in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if any(len(r) != cols for r in data):
            raise DimensionError("ragged rows")
        return cls(rows, cols, (e for r in data for e in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "RatMatrix":
        return cls.from_rows(columns).T

    @classmethod
    def identity(cls, k: int) -> "RatMatrix":
        return cls(k, k, (1 if i == j else 0 for i in range(k) for j in range(k)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows,
                         (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self[i, j] == self[j, i]
            for i in range(self.rows) for j in range(i + 1, self.cols))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int] | None = None) -> "RatMatrix":
        cols = rows if cols is None else cols
        return RatMatrix(len(rows), len(cols), (self[i, j] for i in rows for j in cols))

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            ocols = [other.col(j) for j in range(other.cols)]
            return RatMatrix(self.rows, other.cols,
                             (dot(self.row(i), c) for i in range(self.rows) for c in ocols))
        if len(other) != self.cols:
            raise DimensionError(f"cannot multiply {self.shape} by vector of length {len(other)}")
        return tuple(dot(self.row(i), other) for i in range(self.rows))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return RatMatrix(self.rows, self.cols, (a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, (-a for a in self.entries))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(e) for e in self.row(i)) + "]"
                         for i in range(self.rows))
        return f"RatMatrix([{body}])"


# --- elimination core -------------------------------------------------------

def _rref(rows: list, ncols: int) -> list:
    """Reduce ``rows`` (list of lists, modified in place) to reduced row
    echelon form over the first ``ncols`` columns. Extra trailing columns
    (augmentation) are carried along. Returns the pivot column indices.

    Pivot: first nonzero entry at or below the current row, scanning
    columns left to right.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [e / piv for e in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def _kernel_from_rref(rows: list, pivots: list, ncols: int) -> list:
    """Kernel basis from an RREF: one vector per free column, that free
    variable set to 1 and the others to 0, taken in index order."""
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def rank(M: RatMatrix) -> int:
    """Exact rank over the rationals."""
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(_rref(M.to_rows(), M.cols))


def nullspace(M: RatMatrix) -> list:
    """Basis of the kernel of ``M`` (free variables set to 1 in index order)."""
    rows = M.to_rows()
    pivots = _rref(rows, M.cols)
    return _kernel_from_rref(rows, pivots, M.cols)


def determinant(M: RatMatrix) -> Fraction:
    """Determinant by Bareiss fraction-free elimination."""
    if not M.is_square():
        raise DimensionError(f"determinant of non-square {M.shape} matrix")
    n = M.rows
    if n == 0:
        return Fraction(1)
    a = M.to_rows()
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) / prev
            row_i[k] = Fraction(0)
        prev = akk
    return sign * a[n - 1][n - 1]


def inverse(M: RatMatrix) -> RatMatrix:
    """Gauss-Jordan inverse; raises :class:`SingularError` if det(M) = 0."""
    if not M.is_square():
        raise DimensionError(f"inverse of non-square {M.shape} matrix")
    n = M.rows
    aug = [list(M.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    pivots = _rref(aug, n)
    if len(pivots) < n:
        raise SingularError("matrix is singular")
    inv = RatMatrix(n, n, (e for r in aug for e in r[n:]))
    assert M @ inv == RatMatrix.identity(n)
    return inv


# --- solve -----------------------------------------------------------------

@dataclass(frozen=True)
class Unique:
    x: tuple


@dataclass(frozen=True)
class Particular:
    """One solution plus a kernel basis of the coefficient matrix.

    ``x`` is the minimum-norm solution, i.e. orthogonal to every kernel
    vector, so it does not depend on how the kernel basis was chosen.
    """
    x: tuple
    null_basis: tuple


@dataclass(frozen=True)
class Inconsistent:
    pass


def solve(M: RatMatrix, rhs: Sequence):
    """Solve ``M x = rhs`` exactly for square ``M``.

    Returns :class:`Unique`, :class:`Particular` or :class:`Inconsistent`.
    """
    if not M.is_square():
        raise DimensionError(f"solve needs a square matrix, got {M.shape}")
    if len(rhs) != M.rows:
        raise DimensionError(f"rhs length {len(rhs)} != {M.rows}")
    rhs = vector(rhs)
    n = M.cols
    aug = [list(M.row(i)) + [rhs[i]] for i in range(M.rows)]
    pivots = _rref(aug, n)
    if any(aug[i][n] != 0 for i in range(len(pivots), M.rows)):
        return Inconsistent()
    x0 = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        x0[pc] = aug[r][n]
    x0 = tuple(x0)
    if len(pivots) == n:
        assert M @ x0 == rhs
        return Unique(x0)

    kernel = _kernel_from_rref(aug, pivots, n)
    # shift x0 by the kernel component that makes it orthogonal to the kernel
    gram = RatMatrix.from_rows([[dot(u, v) for v in kernel] for u in kernel])
    shift = solve(gram, [-dot(v, x0) for v in kernel])
    x = add(x0, combination(shift.x, kernel))
    assert M @ x == rhs
    assert all(not any(M @ v) for v in kernel)
    return Particular(x, tuple(kernel))


# --- semidefiniteness --------------------------------------------------------

def psd_certificate(A: RatMatrix):
    """Decide whether symmetric ``A`` is positive semidefinite.

    Symmetric pivoted elimination (an exact LDL^T) while tracking, for every
    surviving index, the original-coordinate vector ``t`` with
    ``residual[i][j] = t_i^T A t_j``. Returns ``(True, None)`` or
    ``(False, y)`` with ``y^T A y < 0``.
    """
    if not A.is_symmetric():
        raise NotSymmetricError("matrix is not symmetric")
    n = A.rows
    S = {i: {j: A[i, j] for j in range(n)} for i in range(n)}
    T = {i: [Fraction(int(i == j)) for j in range(n)] for i in range(n)}
    alive = list(range(n))
    while alive:
        p = next((i for i in alive if S[i][i] != 0), None)
        if p is None:
            for i in alive:
                for j in alive:
                    if S[i][j] != 0:
                        # zero diagonal with a nonzero coupling: indefinite
                        s = -(S[j][j] + 1) / (2 * S[i][j])
                        y = add(scale(s, T[i]), T[j])
                        return False, y
            return True, None
        d = S[p][p]
        if d < 0:
            return False, tuple(T[p])
        alive.remove(p)
        for i in alive:
            f = S[i][p] / d
            if f:
                for j in alive:
                    S[i][j] -= f * S[p][j]
                T[i] = [a - f * b for a, b in zip(T[i], T[p])]
    return True, None


def is_negative_semidefinite(M: RatMatrix) -> bool:
    """True iff x^T M x <= 0 for every rational x."""
    ok, _ = psd_certificate(-M)
    return ok
