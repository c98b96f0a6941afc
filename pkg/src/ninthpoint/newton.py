"""Newton polytopes of the six specialized ingredient polynomials.

With the first four points frozen to the standard frame, each of the six
ingredient scalars becomes a polynomial in the 12 coordinates of the free
points P5..P8.  This module expands those determinants exactly over a
sparse integer representation, extracts the support (the set of exponent
vectors with nonzero coefficient), and counts the vertices of its convex
hull by an exact linear-programming membership test per support point.

Variable order: (x5, y5, z5, x6, y6, z6, x7, y7, z7, x8, y8, z8).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .projective import CUBIC_MONOMIALS, QUADRATIC_MONOMIALS
from .tropical import INGREDIENT_NAMES

NVARS = 12
VARIABLES = tuple(f"{axis}{i}" for i in range(5, 9) for axis in "xyz")

Exponent = tuple[int, ...]
Poly = dict[Exponent, int]  # exponent vector -> integer coefficient

_ZERO_EXP: Exponent = (0,) * NVARS


# ---------------------------------------------------------------------------
# sparse polynomial arithmetic (integer coefficients, 12 variables)
# ---------------------------------------------------------------------------

def poly_const(c: int) -> Poly:
    return {_ZERO_EXP: c} if c else {}

def poly_var(index: int) -> Poly:
    e = [0] * NVARS
    e[index] = 1
    return {tuple(e): 1}

def poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for e, c in q.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out

def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out

def poly_scale(p: Poly, k: int) -> Poly:
    return {e: c * k for e, c in p.items()} if k else {}


def poly_det(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a matrix of sparse polynomials.

    Laplace expansion down the rows with memoization on the surviving
    column tuple; zero entries prune early, so the numeric frame rows keep
    the recursion narrow.
    """
    n = len(matrix)
    memo: dict[tuple[int, tuple[int, ...]], Poly] = {}

    def minor(k: int, cols: tuple[int, ...]) -> Poly:
        if k == n:
            return poly_const(1)
        key = (k, cols)
        cached = memo.get(key)
        if cached is not None:
            return cached
        out: Poly = {}
        for pos, col in enumerate(cols):
            entry = matrix[k][col]
            if not entry:
                continue
            term = poly_mul(entry, minor(k + 1, cols[:pos] + cols[pos + 1 :]))
            if pos % 2:
                term = poly_scale(term, -1)
            out = poly_add(out, term)
        memo[key] = out
        return out

    return minor(0, tuple(range(n)))


# ---------------------------------------------------------------------------
# the six specialized polynomials
# ---------------------------------------------------------------------------

def _sym_point(i: int) -> tuple[Poly, Poly, Poly]:
    base = (i - 5) * 3
    return (poly_var(base), poly_var(base + 1), poly_var(base + 2))

def _num_point(coords: tuple[int, int, int]) -> tuple[Poly, Poly, Poly]:
    return tuple(poly_const(c) for c in coords)  # type: ignore[return-value]

_FRAME = (
    _num_point((1, 0, 0)),
    _num_point((0, 1, 0)),
    _num_point((0, 0, 1)),
    _num_point((1, 1, 1)),
)


def _mono_eval(p: tuple[Poly, Poly, Poly], mono: tuple[int, int, int]) -> Poly:
    out = poly_const(1)
    for variable, e in zip(p, mono):
        for _ in range(e):
            out = poly_mul(out, variable)
    return out

def _quad_row(p) -> list[Poly]:
    return [_mono_eval(p, m) for m in QUADRATIC_MONOMIALS]

def _cubic_row(p) -> list[Poly]:
    return [_mono_eval(p, m) for m in CUBIC_MONOMIALS]

def _jacobian_rows(p) -> list[list[Poly]]:
    rows = []
    for var in range(3):
        row = []
        for mono in CUBIC_MONOMIALS:
            if mono[var] == 0:
                row.append({})
                continue
            shifted = list(mono)
            shifted[var] -= 1
            row.append(poly_scale(_mono_eval(p, tuple(shifted)), mono[var]))
        rows.append(row)
    return rows


@lru_cache(maxsize=None)
def specialized_polynomial(name: str) -> Poly:
    """Full exact expansion of one ingredient scalar on the frame."""
    if name not in INGREDIENT_NAMES:
        raise ValueError(f"unknown ingredient {name!r}, expected one of {INGREDIENT_NAMES}")
    pts = list(_FRAME) + [_sym_point(i) for i in range(5, 9)]

    def build(lead: int, kind: str) -> list[list[Poly]]:
        rest = [4, 5, 6, 7, 8]
        if kind == "C":
            return [_quad_row(pts[lead - 1])] + [_quad_row(pts[i - 1]) for i in rest]
        second, third = {1: (2, 3), 2: (3, 1), 3: (1, 2)}[lead]
        rows = [_cubic_row(pts[second - 1]), _cubic_row(pts[third - 1])]
        rows += [_cubic_row(pts[i - 1]) for i in rest]
        rows += _jacobian_rows(pts[lead - 1])
        return rows

    lead = {"x": 1, "y": 2, "z": 3}[name[1]]
    return poly_det(build(lead, name[0]))


def newton_support(name: str) -> frozenset[Exponent]:
    """Exponent vectors with nonzero coefficient, deterministically."""
    return frozenset(specialized_polynomial(name).keys())


# ---------------------------------------------------------------------------
# convex-hull vertex counting by exact LP
# ---------------------------------------------------------------------------

def point_in_hull(q: Sequence[int], others: Sequence[Sequence[int]]) -> bool:
    """Exact feasibility of q = sum l_i p_i, sum l_i = 1, l >= 0.

    Phase-one simplex with Bland's rule on rationals: feasible iff the
    artificial objective can be driven to zero.
    """
    if not others:
        return False
    dim = len(q)
    ncols = len(others)
    rows = [[Fraction(p[i]) for p in others] for i in range(dim)]
    rhs = [Fraction(x) for x in q]
    rows.append([Fraction(1)] * ncols)
    rhs.append(Fraction(1))
    m = dim + 1
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-a for a in rows[i]]
            rhs[i] = -rhs[i]
    # tableau: real columns, artificial columns, rhs
    tab = [
        rows[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)] + [rhs[i]]
        for i in range(m)
    ]
    basis = list(range(ncols, ncols + m))
    # reduced-cost row for minimizing the artificial sum
    z = [Fraction(0)] * (ncols + m + 1)
    for row in tab:
        for j, val in enumerate(row):
            z[j] += val
    cost = [Fraction(0)] * ncols + [Fraction(1)] * m
    while True:
        enter = next((j for j in range(ncols + m) if z[j] - cost[j] > 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            break  # unbounded; cannot occur in phase one
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leave])]
        f = z[enter] - cost[enter]
        z = [a - f * b for a, b in zip(z, tab[leave])]
        basis[leave] = enter
    return z[-1] == 0


def newton_vertex_count(support: Iterable[Exponent]) -> int:
    """Number of support points that are vertices of the convex hull.

    A point is a vertex iff it is not a convex combination of the other
    support points; each point gets its own exact-LP membership test.
    """
    pts = sorted(set(map(tuple, support)))
    if not pts:
        raise ValueError("empty support")
    count = 0
    for i, q in enumerate(pts):
        others = pts[:i] + pts[i + 1 :]
        if not point_in_hull(q, others):
            count += 1
    return count
