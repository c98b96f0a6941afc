"""Exact linear algebra over the rationals.

Everything downstream (brackets, conic and cubic determinants, null spaces
of point-monomial matrices) funnels through this module.  All values are
Python ints or fractions.Fraction; floats are rejected outright, so every
result is exactly reproducible.

Determinants use fraction-free Bareiss elimination on an integer-scaled
copy of the matrix; 2x2 and 3x3 matrices take a closed-form cofactor path
because 3x3 determinants are by far the hottest operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


class ShapeError(ValueError):
    """Matrix input with incompatible or non-square dimensions."""


def as_exact(x: Rational) -> Fraction:
    """Coerce to Fraction, refusing anything that is not an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"exact rational required, got {type(x).__name__}: {x!r}")


@dataclass(frozen=True)
class RatMatrix:
    """Dense rational matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational]]) -> "RatMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat: list[Fraction] = []
        for r in rows:
            if len(r) != ncols:
                raise ShapeError("ragged rows")
            flat.extend(as_exact(x) for x in r)
        return cls(nrows, ncols, tuple(flat))

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]


MatrixLike = Union[RatMatrix, Sequence[Sequence[Rational]]]


def _as_row_lists(m: MatrixLike) -> list[list[Fraction]]:
    if isinstance(m, RatMatrix):
        return m.to_rows()
    rows = [[as_exact(x) for x in r] for r in m]
    if rows:
        w = len(rows[0])
        if any(len(r) != w for r in rows):
            raise ShapeError("ragged rows")
    return rows


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------

def det3(a: Sequence[Rational], b: Sequence[Rational], c: Sequence[Rational]):
    """Closed-form 3x3 determinant of three coordinate rows (hot path)."""
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def _bareiss_int(a: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of an integer matrix (mutates a)."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            rowi = a[i]
            rowk = a[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def ff_determinant(m: MatrixLike) -> Fraction:
    """Exact determinant of a square rational matrix.

    Rows are scaled to integers first (tracking the scale), then eliminated
    fraction-free, so intermediate values stay integral and bounded.
    """
    rows = _as_row_lists(m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ShapeError(f"square matrix required, got {n}x{len(rows[0]) if rows else 0}")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        return det3(rows[0], rows[1], rows[2])
    scale = 1
    ints: list[list[int]] = []
    for r in rows:
        mult = lcm(*(x.denominator for x in r))
        scale *= mult
        ints.append([int(x * mult) for x in r])
    return Fraction(_bareiss_int(ints), scale)


# ---------------------------------------------------------------------------
# reduced row echelon form, rank, null space
# ---------------------------------------------------------------------------

def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan; returns (matrix, pivot column indices).

    Pivot choice is the first nonzero entry scanning down each column, which
    keeps the result (and everything derived from it) deterministic.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def matrix_rank(m: MatrixLike) -> int:
    rows = _as_row_lists(m)
    if not rows:
        return 0
    _, pivots = _rref(rows)
    return len(pivots)


def primitive_vector(v: Iterable[Rational]) -> tuple[int, ...]:
    """Canonical representative of a rational vector up to positive scaling.

    Denominators are cleared, the integer content divided out, and the sign
    fixed so the first nonzero entry is positive.  Raises on the zero vector.
    """
    vals = [as_exact(x) for x in v]
    if all(x == 0 for x in vals):
        raise ValueError("zero vector has no primitive representative")
    mult = lcm(*(x.denominator for x in vals))
    ints = [int(x * mult) for x in vals]
    content = 0
    for x in ints:
        content = gcd(content, x)
    ints = [x // content for x in ints]
    first = next(x for x in ints if x != 0)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def right_nullspace(m: MatrixLike) -> list[tuple[int, ...]]:
    """Basis of {v : m v = 0} as primitive integer vectors.

    One basis vector per free column of the RREF, listed in free-column
    order; full column rank yields the empty list.
    """
    rows = _as_row_lists(m)
    if not rows:
        return []
    ncols = len(rows[0])
    reduced, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -reduced[i][fc]
        basis.append(primitive_vector(v))
    return basis


def mat_vec(m: MatrixLike, v: Sequence[Rational]) -> list[Fraction]:
    rows = _as_row_lists(m)
    vec = [as_exact(x) for x in v]
    if rows and len(rows[0]) != len(vec):
        raise ShapeError("matrix/vector size mismatch")
    return [sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in rows]


def mat_mul(a: MatrixLike, b: MatrixLike) -> list[list[Fraction]]:
    ra = _as_row_lists(a)
    rb = _as_row_lists(b)
    if ra and rb and len(ra[0]) != len(rb):
        raise ShapeError("inner dimensions disagree")
    cols = list(zip(*rb)) if rb else []
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in ra]
