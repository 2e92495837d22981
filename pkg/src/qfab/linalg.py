"""Exact dense linear algebra over Q or F_p.

Matrices are immutable (tuple-of-tuples) and every operation is a pure
function, so values can be shared freely.  All echelon forms are reduced and
pivot-ordered, which makes kernel bases, solutions and ranks canonical:
re-running any computation reproduces identical output.
"""

from __future__ import annotations

from .field import QQ
from .errors import DimensionMismatch


class Matrix:
    """An immutable rows x cols matrix over an exact field."""

    __slots__ = ("rows", "cols", "data", "field")

    def __init__(self, rows, cols, data, field=QQ):
        self.rows = rows
        self.cols = cols
        self.data = tuple(tuple(r) for r in data)
        self.field = field
        if len(self.data) != rows or any(len(r) != cols for r in self.data):
            raise DimensionMismatch(f"bad shape for {rows}x{cols} matrix")

    @staticmethod
    def from_rows(rows, field=QQ, cols=None):
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else (cols if cols is not None else 0)
        coerced = [[field.coerce(x) for x in r] for r in rows]
        return Matrix(n, m, coerced, field)

    @staticmethod
    def zero(rows, cols, field=QQ):
        z = field.zero
        return Matrix(rows, cols, [[z] * cols for _ in range(rows)], field)

    @staticmethod
    def identity(n, field=QQ):
        z, o = field.zero, field.one
        return Matrix(n, n, [[o if i == j else z for j in range(n)] for i in range(n)], field)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def is_zero(self):
        z = self.field.zero
        return all(x == z for r in self.data for x in r)

    def transpose(self):
        return Matrix(self.cols, self.rows, list(zip(*self.data)) if self.data else [[] for _ in range(self.cols)], self.field)

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition shape mismatch")
        return Matrix(
            self.rows,
            self.cols,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            self.field,
        )

    def __sub__(self, other):
        return self + other.scale(-self.field.one)

    def scale(self, c):
        return Matrix(self.rows, self.cols, [[c * x for x in r] for r in self.data], self.field)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
            ot = other.transpose().data
            z = self.field.zero
            out = []
            for r in self.data:
                row = []
                for c in ot:
                    s = z
                    for a, b in zip(r, c):
                        if a != z and b != z:
                            s = s + a * b
                    row.append(s)
                out.append(row)
            return Matrix(self.rows, other.cols, out, self.field)
        return self.scale(other)

    def apply(self, vec):
        """Matrix times a column vector (list)."""
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length mismatch")
        z = self.field.zero
        out = []
        for r in self.data:
            s = z
            for a, b in zip(r, vec):
                if a != z and b != z:
                    s = s + a * b
            out.append(s)
        return out

    def hstack(self, other):
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row mismatch")
        return Matrix(self.rows, self.cols + other.cols,
                      [list(a) + list(b) for a, b in zip(self.data, other.data)], self.field)

    def vstack(self, other):
        if self.cols != other.cols:
            raise DimensionMismatch("vstack col mismatch")
        return Matrix(self.rows + other.rows, self.cols, list(self.data) + list(other.data), self.field)

    def column(self, j):
        return [r[j] for r in self.data]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]


def rref(mat):
    """Reduced row echelon form.  Returns (Matrix, pivot column list)."""
    z = mat.field.zero
    rows = [list(r) for r in mat.data]
    n, m = mat.rows, mat.cols
    pivots = []
    r = 0
    for c in range(m):
        if r >= n:
            break
        pr = None
        for i in range(r, n):
            if rows[i][c] != z:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != mat.field.one:
            inv = mat.field.one / pv
            rows[r] = [inv * x for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != z:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix(n, m, rows, mat.field), pivots


def rank(mat):
    return len(rref(mat)[1])


def kernel_basis(mat):
    """Canonical basis of the right kernel.

    Vectors come from the reduced echelon form: one per free column, in
    increasing free-column order, with the free coordinate set to one.
    """
    R, pivots = rref(mat)
    z, o = mat.field.zero, mat.field.one
    pivot_set = set(pivots)
    free = [c for c in range(mat.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [z] * mat.cols
        v[fc] = o
        for r, pc in enumerate(pivots):
            v[pc] = -R.data[r][fc]
        basis.append(v)
    return basis


def solve(mat, b):
    """One solution of mat*x = b with free variables set to zero, or None."""
    if len(b) != mat.rows:
        raise DimensionMismatch("rhs length mismatch")
    aug = mat.hstack(Matrix(mat.rows, 1, [[x] for x in b], mat.field))
    R, pivots = rref(aug)
    if mat.cols in pivots:
        return None
    z = mat.field.zero
    x = [z] * mat.cols
    for r, pc in enumerate(pivots):
        x[pc] = R.data[r][mat.cols]
    return x


def solve_matrix(mat, rhs):
    """Solve mat*X = rhs columnwise; None if any column is inconsistent."""
    cols = []
    for j in range(rhs.cols):
        x = solve(mat, rhs.column(j))
        if x is None:
            return None
        cols.append(x)
    return Matrix(mat.cols, rhs.cols, list(zip(*cols)) if cols else [[] for _ in range(mat.cols)], mat.field)


def from_columns(cols, rows, field=QQ):
    """Matrix whose columns are the given vectors."""
    if not cols:
        return Matrix(rows, 0, [[] for _ in range(rows)], field)
    return Matrix(rows, len(cols), [list(t) for t in zip(*cols)], field)


def is_invertible(mat):
    return mat.rows == mat.cols and rank(mat) == mat.rows


def inverse(mat):
    if mat.rows != mat.cols:
        raise DimensionMismatch("inverse of non-square matrix")
    aug = mat.hstack(Matrix.identity(mat.rows, mat.field))
    R, pivots = rref(aug)
    if pivots[: mat.rows] != list(range(mat.rows)):
        return None
    return Matrix(mat.rows, mat.rows, [r[mat.rows:] for r in R.data], mat.field)


class Subspace:
    """A subspace kept in reduced echelon form for membership tests.

    Rows are vectors of fixed length `dim`; `pivot_of_row[i]` is the pivot
    column of the i-th stored row.  Supports incremental insertion.
    """

    def __init__(self, dim, field=QQ):
        self.dim = dim
        self.field = field
        self.rows = []
        self.pivots = []

    def reduce(self, vec):
        """Reduce vec against the stored rows; returns the residue (a list)."""
        z = self.field.zero
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            if v[p] != z:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, vec):
        z = self.field.zero
        return all(x == z for x in self.reduce(vec))

    def insert(self, vec):
        """Insert a vector; returns True if it enlarged the span."""
        z = self.field.zero
        v = self.reduce(vec)
        p = next((i for i, x in enumerate(v) if x != z), None)
        if p is None:
            return False
        inv = self.field.one / v[p]
        v = [inv * x for x in v]
        for i, (row, rp) in enumerate(zip(self.rows, self.pivots)):
            if row[p] != z:
                f = row[p]
                self.rows[i] = [a - f * b for a, b in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(p)
        order = sorted(range(len(self.pivots)), key=lambda i: self.pivots[i])
        self.rows = [self.rows[i] for i in order]
        self.pivots = [self.pivots[i] for i in order]
        return True

    @property
    def rank(self):
        return len(self.rows)

    def basis_matrix(self):
        return Matrix(len(self.rows), self.dim, self.rows, self.field)

    def coordinates(self, vec):
        """Coordinates of vec in the stored echelon basis, or None."""
        z = self.field.zero
        v = list(vec)
        coords = [z] * len(self.rows)
        for i, (row, p) in enumerate(zip(self.rows, self.pivots)):
            if v[p] != z:
                f = v[p]
                coords[i] = f
                v = [a - f * b for a, b in zip(v, row)]
        if any(x != z for x in v):
            return None
        return coords
