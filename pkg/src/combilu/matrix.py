"""Dense matrices over the rational-function field, and the LU oracle.

The oracle is plain Doolittle elimination without pivoting: a zero
pivot is an error, never a row permutation, so that the unique
unit-lower/upper factorization it produces can be compared entrywise
against closed-form factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from combilu.poly import MultiPoly
from combilu.ratfunc import RatFunc


class ZeroPivotError(ArithmeticError):
    """Elimination met a zero pivot; the matrix has a vanishing leading minor."""

    def __init__(self, step):
        super().__init__(f"zero pivot at elimination step {step}")
        self.step = step


class SingularMatrixError(ArithmeticError):
    """The matrix has no inverse."""


def _coerce_entry(value, vars):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, MultiPoly):
        return RatFunc(value)
    if isinstance(value, (int, Fraction)):
        return RatFunc.const(vars, value)
    raise TypeError(f"cannot use {value!r} as a matrix entry")


class FieldMatrix:
    """Immutable rows x cols matrix of RatFunc entries, row major."""

    __slots__ = ("rows", "cols", "vars", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        if not all(isinstance(e, RatFunc) for e in entries):
            raise TypeError("entries must be RatFunc values")
        vars = entries[0].vars if entries else ()
        if any(e.vars != vars for e in entries):
            raise ValueError("entries come from different rings")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("FieldMatrix is immutable")

    @classmethod
    def from_rows(cls, rows, vars=None):
        """Build from nested lists; int/Fraction/MultiPoly entries are coerced.

        ``vars`` is only needed when no entry determines the ring.
        """
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        if vars is None:
            for r in rows:
                for v in r:
                    if isinstance(v, (RatFunc, MultiPoly)):
                        vars = v.vars
                        break
                if vars is not None:
                    break
            if vars is None:
                raise ValueError("cannot infer the ring; pass vars=")
        flat = [_coerce_entry(v, vars) for r in rows for v in r]
        return cls(nrows, ncols, flat)

    @classmethod
    def identity(cls, n, vars):
        one = RatFunc.const(vars, 1)
        zero = RatFunc.const(vars, 0)
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def build(cls, rows, cols, vars, entry_fn):
        """Entries from entry_fn(i, j) (0-based); values are coerced."""
        return cls(rows, cols,
                   [_coerce_entry(entry_fn(i, j), vars)
                    for i in range(rows) for j in range(cols)])

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_lists(self):
        return [self.row(i) for i in range(self.rows)]

    def transpose(self):
        return FieldMatrix(self.cols, self.rows,
                           [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def __eq__(self, other):
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(a == b for a, b in zip(self.entries, other.entries))

    def mat_mul(self, other):
        if not isinstance(other, FieldMatrix):
            raise TypeError("can only multiply by another FieldMatrix")
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.rows}x{self.cols} times "
                             f"{other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = None
                for k in range(self.cols):
                    a = self[i, k]
                    b = other[k, j]
                    if a.is_zero() or b.is_zero():
                        continue
                    term = a * b
                    acc = term if acc is None else acc + term
                out.append(acc if acc is not None else RatFunc.const(self.vars, 0))
        return FieldMatrix(self.rows, other.cols, out)

    __matmul__ = mat_mul

    def __str__(self):
        body = [", ".join(str(e) for e in self.row(i)) for i in range(self.rows)]
        return "[" + "; ".join(body) + "]"

    def __repr__(self):
        return f"FieldMatrix({self.rows}x{self.cols}: {self})"


@dataclass(frozen=True)
class LUPair:
    """Unit-lower L, upper U and the pivot list U[k,k] from elimination."""

    L: FieldMatrix
    U: FieldMatrix
    pivots: tuple


def lu_decompose(m):
    """Doolittle LU factorization without pivoting.

    Returns an LUPair with L unit lower triangular and U upper
    triangular such that L @ U == m exactly.  Raises ZeroPivotError
    when a leading principal minor vanishes.
    """
    if m.rows != m.cols:
        raise ValueError("LU decomposition requires a square matrix")
    n = m.rows
    zero = RatFunc.const(m.vars, 0)
    one = RatFunc.const(m.vars, 1)
    a = m.to_lists()
    low = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for k in range(n):
        pivot = a[k][k]
        if pivot.is_zero():
            raise ZeroPivotError(k)
        for i in range(k + 1, n):
            factor = a[i][k] / pivot
            if factor.is_zero():
                continue
            low[i][k] = factor
            a[i][k] = zero
            for j in range(k + 1, n):
                if not a[k][j].is_zero():
                    a[i][j] = a[i][j] - factor * a[k][j]
    upper = FieldMatrix(n, n, [e for r in a for e in r])
    lower = FieldMatrix(n, n, [e for r in low for e in r])
    return LUPair(lower, upper, tuple(a[k][k] for k in range(n)))


def det_from_pivots(lu):
    """Determinant as the product of the pivots of an LUPair."""
    det = None
    for p in lu.pivots:
        det = p if det is None else det * p
    if det is None:
        raise ValueError("empty LUPair")
    return det


def mat_inverse(m):
    """Exact inverse by Gauss-Jordan elimination with row swaps.

    Row swaps do not disturb the inverse, so this is total on
    invertible matrices; raises SingularMatrixError otherwise.
    """
    if m.rows != m.cols:
        raise ValueError("only square matrices have inverses")
    n = m.rows
    a = m.to_lists()
    inv = FieldMatrix.identity(n, m.vars).to_lists()
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if not a[r][k].is_zero()), None)
        if pivot_row is None:
            raise SingularMatrixError(f"column {k} has no usable pivot")
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            inv[k], inv[pivot_row] = inv[pivot_row], inv[k]
        scale = a[k][k].reciprocal()
        a[k] = [e * scale for e in a[k]]
        inv[k] = [e * scale for e in inv[k]]
        for r in range(n):
            if r == k or a[r][k].is_zero():
                continue
            f = a[r][k]
            a[r] = [x - f * y for x, y in zip(a[r], a[k])]
            inv[r] = [x - f * y for x, y in zip(inv[r], inv[k])]
    return FieldMatrix(n, n, [e for r in inv for e in r])


@dataclass(frozen=True)
class ClosedFormLU:
    """A matrix together with closed-form factors (inverses optional)."""

    M: FieldMatrix
    L: FieldMatrix
    U: FieldMatrix
    Linv: FieldMatrix | None = None
    Uinv: FieldMatrix | None = None
