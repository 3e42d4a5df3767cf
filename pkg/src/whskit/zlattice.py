"""Exact integer/rational linear algebra: Hermite normal form with a
unimodular certificate, and GL_n(Z)-equivalence of vector configurations.

All arithmetic is over Fraction/int; nothing here ever touches a float.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .conventions import CONFIG_SEARCH_MAX_COLUMNS
from .errors import (
    DimensionMismatch,
    RankDeficient,
    SingularMatrix,
    SpanDeficient,
    TooManyColumns,
)


class RationalMatrix:
    """Immutable matrix of Fractions with exact operations."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(v) for v in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("ragged rows")
        self.rows = rows

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols):
        if not cols:
            raise DimensionMismatch("no columns")
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise DimensionMismatch("ragged columns")
        return cls([[c[i] for c in cols] for i in range(n)])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return RationalMatrix(
            [[self.rows[i][j] for i in range(self.nrows)]
             for j in range(self.ncols)]
        )

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch("matmul shape mismatch")
            ot = other.transpose().rows
            return RationalMatrix(
                [[sum(a * b for a, b in zip(row, col)) for col in ot]
                 for row in self.rows]
            )
        # vector
        if len(other) != self.ncols:
            raise DimensionMismatch("matvec shape mismatch")
        return tuple(sum(a * b for a, b in zip(row, other)) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def det(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.nrows
        m = [list(r) for r in self.rows]
        det = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            det *= m[col][col]
            inv = 1 / m[col][col]
            for r in range(col + 1, n):
                f = m[r][col] * inv
                if f:
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return det

    def inverse(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.nrows
        m = [list(r) + [Fraction(int(i == j)) for j in range(n)]
             for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col] != 0), None)
            if piv is None:
                raise SingularMatrix("matrix is singular")
            m[col], m[piv] = m[piv], m[col]
            inv = 1 / m[col][col]
            m[col] = [v * inv for v in m[col]]
            for r in range(n):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return RationalMatrix([row[n:] for row in m])

    def is_integral(self):
        return all(v.denominator == 1 for r in self.rows for v in r)

    def is_unimodular(self):
        return (
            self.nrows == self.ncols
            and self.is_integral()
            and abs(self.det()) == 1
        )

    def int_rows(self):
        if not self.is_integral():
            raise DimensionMismatch("matrix is not integral")
        return tuple(tuple(int(v) for v in r) for r in self.rows)

    def __repr__(self):
        return "RationalMatrix(%r)" % (self.rows,)


def rank(rows):
    """Rank over Q of a list of row vectors."""
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return 0
    nc = len(m[0])
    r = 0
    for col in range(nc):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def hnf(matrix):
    """Row-style Hermite normal form with its certificate.

    Returns (H, U), integer row tuples, with H = U @ matrix, U unimodular,
    H upper triangular with positive pivots, entries above each pivot reduced
    into [0, pivot).  Requires full column rank; raises RankDeficient
    otherwise.
    """
    H = []
    for row in matrix:
        r = []
        for v in row:
            if int(v) != v:
                raise DimensionMismatch("hnf needs integer entries, got %r" % (v,))
            r.append(int(v))
        H.append(r)
    if not H:
        raise RankDeficient("empty matrix")
    m, n = len(H), len(H[0])
    if any(len(r) != n for r in H):
        raise DimensionMismatch("ragged rows")
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    row = 0
    for col in range(n):
        if row >= m:
            raise RankDeficient("more columns than available pivot rows")
        # Euclid downwards within this column
        while True:
            nz = [r for r in range(row, m) if H[r][col] != 0]
            if not nz:
                raise RankDeficient("column %d has no pivot" % col)
            piv = min(nz, key=lambda r: abs(H[r][col]))
            if piv != row:
                H[row], H[piv] = H[piv], H[row]
                U[row], U[piv] = U[piv], U[row]
            if all(H[r][col] == 0 for r in range(row + 1, m)):
                break
            for r in range(row + 1, m):
                if H[r][col]:
                    q = H[r][col] // H[row][col]
                    H[r] = [a - q * b for a, b in zip(H[r], H[row])]
                    U[r] = [a - q * b for a, b in zip(U[r], U[row])]
        if H[row][col] < 0:
            H[row] = [-v for v in H[row]]
            U[row] = [-v for v in U[row]]
        for r in range(row):
            q = H[r][col] // H[row][col]
            if q:
                H[r] = [a - q * b for a, b in zip(H[r], H[row])]
                U[r] = [a - q * b for a, b in zip(U[r], U[row])]
        row += 1
    return (
        tuple(tuple(r) for r in H),
        tuple(tuple(r) for r in U),
    )


def _first_basis(cols, n):
    """Indices of the first n linearly independent columns (greedy)."""
    chosen = []
    rows_so_far = []
    for j, c in enumerate(cols):
        if rank(rows_so_far + [list(c)]) > len(chosen):
            chosen.append(j)
            rows_so_far.append(list(c))
            if len(chosen) == n:
                return chosen
    return None


def config_equivalent(cols_v, cols_w):
    """Search for unimodular phi and permutation sigma with
    phi @ v_i = w_{sigma(i)} for all i.

    ``cols_v`` and ``cols_w`` are sequences of equal-length rational vectors
    that each span the ambient space.  Returns (phi, sigma) on success, with
    phi integer row tuples and sigma a tuple of images, or None.  Permutations
    are searched in lexicographic order, so the witness is deterministic.
    """
    cols_v = [tuple(Fraction(x) for x in c) for c in cols_v]
    cols_w = [tuple(Fraction(x) for x in c) for c in cols_w]
    if len(cols_v) != len(cols_w):
        raise DimensionMismatch("configurations have different sizes")
    m = len(cols_v)
    if m == 0:
        raise DimensionMismatch("empty configuration")
    n = len(cols_v[0])
    if any(len(c) != n for c in itertools.chain(cols_v, cols_w)):
        raise DimensionMismatch("vectors of mixed lengths")
    if m > CONFIG_SEARCH_MAX_COLUMNS:
        raise TooManyColumns(
            "%d columns exceeds the search cap %d"
            % (m, CONFIG_SEARCH_MAX_COLUMNS)
        )
    basis = _first_basis(cols_v, n)
    if basis is None:
        raise SpanDeficient("first configuration does not span")
    if _first_basis(cols_w, n) is None:
        raise SpanDeficient("second configuration does not span")

    B = RationalMatrix.from_columns([cols_v[j] for j in basis])
    Binv = B.inverse()
    for sigma in itertools.permutations(range(m)):
        target = RationalMatrix.from_columns([cols_w[sigma[j]] for j in basis])
        phi = target @ Binv
        if not phi.is_integral():
            continue
        if abs(phi.det()) != 1:
            continue
        if all(phi @ cols_v[i] == cols_w[sigma[i]] for i in range(m)):
            return phi.int_rows(), sigma
    return None
