"""Projective-plane primitives over exact rationals.

Points carry homogeneous coordinates (x : y : z).  The three standing
determinantal forms are:

  bracket(a, b, c)        3x3 coordinate determinant; zero iff collinear.
  conic_det(p1..p6)       6x6 determinant in the quadratic monomials
                          x^2, xy, xz, y^2, yz, z^2; zero iff coconic.
  singular_cubic_det      10x10 determinant: seven cubic-monomial rows for
                          the trailing points plus the three partial
                          derivative rows of the cubic monomial vector at
                          the leading point; zero iff the eight points lie
                          on a cubic singular at the leading point.

The monomial column orders above are fixed; the bracket expansions
implemented alongside each determinant are sign-exact for these orders,
which the test suite checks on random configurations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import Rational, as_exact, det3, ff_determinant

# Quadratic and cubic monomial exponent vectors, in the fixed column order.
QUADRATIC_MONOMIALS: tuple[tuple[int, int, int], ...] = (
    (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2),
)
CUBIC_MONOMIALS: tuple[tuple[int, int, int], ...] = (
    (3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
    (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3),
)


class DegenerateCrossRatioError(ValueError):
    """A cross-ratio denominator vanished; the message names the culprit."""


@dataclass(frozen=True)
class ProjPoint:
    """Point of the projective plane; coordinates exact, not all zero."""

    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", as_exact(self.x))
        object.__setattr__(self, "y", as_exact(self.y))
        object.__setattr__(self, "z", as_exact(self.z))
        if self.x == 0 and self.y == 0 and self.z == 0:
            raise ValueError("(0 : 0 : 0) is not a projective point")

    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z)

    def scaled(self, factor: Rational) -> "ProjPoint":
        f = as_exact(factor)
        return ProjPoint(self.x * f, self.y * f, self.z * f)

    def __str__(self) -> str:
        return f"({self.x} : {self.y} : {self.z})"


def point(x: Rational, y: Rational, z: Rational) -> ProjPoint:
    return ProjPoint(as_exact(x), as_exact(y), as_exact(z))


@dataclass(frozen=True)
class Config8:
    """Ordered tuple of eight points; index positions 1..8 are meaningful."""

    points: tuple[ProjPoint, ...]

    def __post_init__(self) -> None:
        if len(self.points) != 8:
            raise ValueError(f"exactly 8 points required, got {len(self.points)}")

    @classmethod
    def from_coords(cls, coords: Sequence[Sequence[Rational]]) -> "Config8":
        return cls(tuple(ProjPoint(*(as_exact(c) for c in t)) for t in coords))

    def pt(self, i: int) -> ProjPoint:
        """1-based access matching the index conventions of the formulas."""
        if not 1 <= i <= 8:
            raise IndexError(f"point index {i} out of range 1..8")
        return self.points[i - 1]

    def relabeled(self, perm: Sequence[int]) -> "Config8":
        """New configuration whose slot i holds old point perm[i] (1-based)."""
        return Config8(tuple(self.pt(p) for p in perm))


@dataclass(frozen=True)
class ProjTransform:
    """Projective transformation as a 3x3 rational matrix acting on coordinates."""

    m: tuple[tuple[Fraction, Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        if len(self.m) != 3 or any(len(r) != 3 for r in self.m):
            raise ValueError("3x3 matrix required")
        object.__setattr__(
            self, "m", tuple(tuple(as_exact(x) for x in r) for r in self.m)
        )

    def det(self) -> Fraction:
        return det3(*self.m)


def apply_transform(t: ProjTransform, p: ProjPoint) -> ProjPoint:
    """Matrix-vector product of t with the coordinate column of p."""
    if t.det() == 0:
        raise ValueError("singular transformation")
    c = p.coords()
    return ProjPoint(
        sum((a * b for a, b in zip(t.m[0], c)), Fraction(0)),
        sum((a * b for a, b in zip(t.m[1], c)), Fraction(0)),
        sum((a * b for a, b in zip(t.m[2], c)), Fraction(0)),
    )


def transform_config(t: ProjTransform, c: Config8) -> Config8:
    return Config8(tuple(apply_transform(t, p) for p in c.points))


# ---------------------------------------------------------------------------
# brackets and monomial rows
# ---------------------------------------------------------------------------

def bracket(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> Fraction:
    """[abc]: determinant of the coordinate rows in order (a, b, c)."""
    return det3(a.coords(), b.coords(), c.coords())


def quadratic_row(p: ProjPoint) -> list[Fraction]:
    x, y, z = p.coords()
    return [x * x, x * y, x * z, y * y, y * z, z * z]


def cubic_row(p: ProjPoint) -> list[Fraction]:
    x, y, z = p.coords()
    x2, y2, z2 = x * x, y * y, z * z
    return [x2 * x, x2 * y, x2 * z, x * y2, x * y * z, x * z2, y2 * y, y2 * z, y * z2, z2 * z]


def cubic_jacobian_rows(p: ProjPoint) -> list[list[Fraction]]:
    """The three partial-derivative rows of the cubic monomial vector at p."""
    c = p.coords()
    rows = []
    for var in range(3):
        row = []
        for mono in CUBIC_MONOMIALS:
            if mono[var] == 0:
                row.append(Fraction(0))
                continue
            shifted = list(mono)
            shifted[var] -= 1
            val = Fraction(mono[var])
            for coord, e in zip(c, shifted):
                val *= coord**e
            row.append(val)
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# conic and singular-cubic determinants and their bracket expansions
# ---------------------------------------------------------------------------

def conic_det(p: Sequence[ProjPoint]) -> Fraction:
    """6x6 coconic test on six points, rows in argument order."""
    if len(p) != 6:
        raise ValueError(f"six points required, got {len(p)}")
    return ff_determinant([quadratic_row(q) for q in p])


def conic_bracket_expansion(p: Sequence[ProjPoint]) -> Fraction:
    """[123][145][246][356] - [124][135][236][456] on argument positions 1..6.

    Exactly equal to conic_det for the fixed quadratic column order.
    """
    if len(p) != 6:
        raise ValueError(f"six points required, got {len(p)}")

    def b(i: int, j: int, k: int) -> Fraction:
        return bracket(p[i - 1], p[j - 1], p[k - 1])

    return b(1, 2, 3) * b(1, 4, 5) * b(2, 4, 6) * b(3, 5, 6) - b(1, 2, 4) * b(1, 3, 5) * b(2, 3, 6) * b(4, 5, 6)


def singular_cubic_det(p1: ProjPoint, rest: Sequence[ProjPoint]) -> Fraction:
    """10x10 test: do p1 and the seven trailing points lie on a cubic singular at p1?

    Rows 1-7 are the cubic monomial vectors of `rest`; rows 8-10 are the
    Jacobian of the monomial vector at p1.
    """
    if len(rest) != 7:
        raise ValueError(f"seven trailing points required, got {len(rest)}")
    return ff_determinant([cubic_row(q) for q in rest] + cubic_jacobian_rows(p1))


def singular_cubic_bracket_expansion(c: Config8) -> Fraction:
    """Bracket form of singular_cubic_det(P7; P1..P6, P8): three times a
    six-term sum of 9-bracket products, indices on the configuration slots."""

    def b(i: int, j: int, k: int) -> Fraction:
        return bracket(c.pt(i), c.pt(j), c.pt(k))

    t1 = b(6, 4, 7) * b(8, 5, 7) * b(4, 7, 8) * b(1, 2, 8) * b(1, 7, 3) * b(4, 2, 3) * b(5, 7, 3) * b(5, 2, 6) * b(1, 7, 6)
    t2 = b(6, 4, 7) * b(8, 5, 7) * b(4, 7, 3) * b(4, 2, 8) * b(1, 7, 8) * b(1, 2, 3) * b(5, 7, 3) * b(5, 2, 6) * b(1, 7, 6)
    t3 = b(6, 4, 7) * b(8, 5, 7) * b(4, 7, 3) * b(4, 2, 8) * b(1, 7, 8) * b(5, 7, 6) * b(1, 2, 6) * b(1, 7, 3) * b(5, 2, 3)
    t4 = b(6, 5, 7) * b(8, 4, 7) * b(5, 7, 3) * b(5, 2, 8) * b(1, 7, 8) * b(1, 2, 3) * b(4, 7, 3) * b(4, 2, 6) * b(1, 7, 6)
    t5 = b(6, 5, 7) * b(8, 4, 7) * b(5, 7, 8) * b(1, 2, 8) * b(1, 7, 3) * b(5, 2, 3) * b(4, 7, 3) * b(4, 2, 6) * b(1, 7, 6)
    t6 = b(6, 5, 7) * b(8, 4, 7) * b(5, 7, 3) * b(5, 2, 8) * b(1, 7, 8) * b(4, 7, 6) * b(1, 2, 6) * b(1, 7, 3) * b(4, 2, 3)
    return 3 * (t1 - t2 + t3 + t4 - t5 - t6)


# ---------------------------------------------------------------------------
# cross ratios
# ---------------------------------------------------------------------------

def cross_ratio_lines(base: ProjPoint, q: Sequence[ProjPoint]) -> Fraction:
    """Cross ratio of the four lines joining `base` to q1..q4:

        [b q1 q3][b q2 q4] / ([b q1 q4][b q2 q3])
    """
    if len(q) != 4:
        raise ValueError(f"four points required, got {len(q)}")
    d1 = bracket(base, q[0], q[3])
    d2 = bracket(base, q[1], q[2])
    if d1 == 0:
        raise DegenerateCrossRatioError("bracket (base, q1, q4) vanishes")
    if d2 == 0:
        raise DegenerateCrossRatioError("bracket (base, q2, q3) vanishes")
    return bracket(base, q[0], q[2]) * bracket(base, q[1], q[3]) / (d1 * d2)


def cross_ratio_conics(quad: Sequence[ProjPoint], q: Sequence[ProjPoint]) -> Fraction:
    """Cross ratio of the four conics through the quad and one of q1..q4:

        C(quad,q1,q3) C(quad,q2,q4) / (C(quad,q1,q4) C(quad,q2,q3))
    """
    if len(quad) != 4 or len(q) != 4:
        raise ValueError("four quad points and four argument points required")
    quad = list(quad)
    d1 = conic_det(quad + [q[0], q[3]])
    d2 = conic_det(quad + [q[1], q[2]])
    if d1 == 0:
        raise DegenerateCrossRatioError("conic (quad, q1, q4) vanishes")
    if d2 == 0:
        raise DegenerateCrossRatioError("conic (quad, q2, q3) vanishes")
    n1 = conic_det(quad + [q[0], q[2]])
    n2 = conic_det(quad + [q[1], q[3]])
    return n1 * n2 / (d1 * d2)


def coincident(a: ProjPoint, b: ProjPoint) -> bool:
    """Projective equality: the cross product of coordinate vectors vanishes."""
    ax, ay, az = a.coords()
    bx, by, bz = b.coords()
    return ax * by == ay * bx and ax * bz == az * bx and ay * bz == az * by


def all_brackets(c: Config8) -> dict[tuple[int, int, int], Fraction]:
    """Brackets of all ordered index triples, keyed 1-based."""
    coords = [p.coords() for p in c.points]
    out: dict[tuple[int, int, int], Fraction] = {}
    for i, j, k in itertools.permutations(range(8), 3):
        out[(i + 1, j + 1, k + 1)] = det3(coords[i], coords[j], coords[k])
    return out
