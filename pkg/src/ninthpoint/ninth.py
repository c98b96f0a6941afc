"""The ninth base point of the pencil of cubics through eight plane points.

Classical fact (Cayley-Bacharach): for eight distinct points with no three
collinear and no six coconic, every cubic through the eight passes through
one further point.  This module computes that point by four independent
routes and certifies the answer against the pencil itself:

  p9_determinantal   coefficient formula  Cx*Dy*Dz*Pi + Dx*Cy*Dz*Pj + Dx*Dy*Cz*Pk
                     built from six conic / singular-cubic determinants;
  p9_reduced         the same vector divided exactly by the bracket of the
                     index triple (the gcd-free, fully symmetric form);
  p9_fano            signed sum over the symmetric group S8 of 21-bracket
                     Fano-plane monomials, evaluated either over all 40320
                     permutations or over 2880 dihedral-orbit representatives;
  p9_cross_ratio     Cayley's construction through two conic cross ratios.

All four agree projectively on nondegenerate input; the certifier checks a
candidate against a null-space basis of the 8x10 cubic-monomial matrix, the
rank of the 9-point stack, and the defining cross-ratio identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Optional, Sequence

from .linalg import matrix_rank, primitive_vector, right_nullspace
from .projective import (
    Config8,
    DegenerateCrossRatioError,
    ProjPoint,
    bracket,
    coincident,
    conic_det,
    cross_ratio_conics,
    cross_ratio_lines,
    cubic_row,
    singular_cubic_det,
)

Vector3 = tuple[Fraction, Fraction, Fraction]


class DegenerateConfigError(ValueError):
    """Raised when a formula degenerates; carries the degeneracy report."""

    def __init__(self, message: str, report: "DegeneracyReport | None" = None):
        super().__init__(message)
        self.report = report


# ---------------------------------------------------------------------------
# degeneracy analysis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegeneracyReport:
    coincident_pairs: tuple[tuple[int, int], ...]
    collinear_triples: tuple[tuple[int, int, int], ...]
    coconic_sextuples: tuple[tuple[int, ...], ...]

    @property
    def clean(self) -> bool:
        """True iff the points are distinct, no three collinear, no six coconic."""
        return not (self.coincident_pairs or self.collinear_triples or self.coconic_sextuples)

    def to_json(self) -> dict:
        return {
            "coincident_pairs": [list(p) for p in self.coincident_pairs],
            "collinear_triples": [list(t) for t in self.collinear_triples],
            "coconic_sextuples": [list(s) for s in self.coconic_sextuples],
            "clean": self.clean,
        }


@lru_cache(maxsize=1024)
def degeneracy_report(c: Config8) -> DegeneracyReport:
    """Exhaustive exact degeneracy scan: 28 pairs, 56 triples, 28 sextuples."""
    pairs = tuple(
        (i + 1, j + 1)
        for i, j in itertools.combinations(range(8), 2)
        if coincident(c.points[i], c.points[j])
    )
    triples = tuple(
        (i + 1, j + 1, k + 1)
        for i, j, k in itertools.combinations(range(8), 3)
        if bracket(c.points[i], c.points[j], c.points[k]) == 0
    )
    sextuples = tuple(
        tuple(i + 1 for i in sx)
        for sx in itertools.combinations(range(8), 6)
        if conic_det([c.points[i] for i in sx]) == 0
    )
    return DegeneracyReport(pairs, triples, sextuples)


# ---------------------------------------------------------------------------
# ingredients and the determinantal formulas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CBIngredients:
    """The six scalars entering the coefficient formula for a chosen triple.

    For triple (i, j, k) with the remaining five indices ascending:
      cx = C(Pi, rest)            dx = D(Pi; Pj, Pk, rest)
      cy = C(Pj, rest)            dy = D(Pj; Pk, Pi, rest)
      cz = C(Pk, rest)            dz = D(Pk; Pi, Pj, rest)
    The cyclic placement of the two remaining triple points in each D fixes
    the determinant signs so the three formula terms add coherently.
    """

    cx: Fraction
    cy: Fraction
    cz: Fraction
    dx: Fraction
    dy: Fraction
    dz: Fraction
    triple: tuple[int, int, int]


def _check_triple(triple: Sequence[int]) -> tuple[int, int, int]:
    t = tuple(triple)
    if len(t) != 3 or len(set(t)) != 3 or not all(1 <= i <= 8 for i in t):
        raise ValueError(f"triple must be three distinct indices in 1..8, got {t}")
    return t  # type: ignore[return-value]


def ingredients(c: Config8, triple: Sequence[int]) -> CBIngredients:
    i, j, k = _check_triple(triple)
    rest = [c.pt(n) for n in range(1, 9) if n not in (i, j, k)]
    pi, pj, pk = c.pt(i), c.pt(j), c.pt(k)
    return CBIngredients(
        cx=conic_det([pi] + rest),
        cy=conic_det([pj] + rest),
        cz=conic_det([pk] + rest),
        dx=singular_cubic_det(pi, [pj, pk] + rest),
        dy=singular_cubic_det(pj, [pk, pi] + rest),
        dz=singular_cubic_det(pk, [pi, pj] + rest),
        triple=(i, j, k),
    )


def canonical_point(vector: Iterable[Fraction]) -> ProjPoint:
    """Primitive-integer representative with positive leading coordinate."""
    return ProjPoint(*primitive_vector(vector))


def p9_raw_vector(c: Config8, triple: Sequence[int]) -> Vector3:
    """The unreduced coefficient-formula vector for the given triple.

    Homogeneous of degree 9 in each triple point and 8 in the others; the
    zero vector signals a degenerate configuration (or an unlucky triple).
    """
    ing = ingredients(c, triple)
    i, j, k = ing.triple
    w1 = ing.cx * ing.dy * ing.dz
    w2 = ing.dx * ing.cy * ing.dz
    w3 = ing.dx * ing.dy * ing.cz
    pi, pj, pk = c.pt(i).coords(), c.pt(j).coords(), c.pt(k).coords()
    return tuple(w1 * pi[n] + w2 * pj[n] + w3 * pk[n] for n in range(3))  # type: ignore[return-value]


def default_triple(c: Config8) -> tuple[int, int, int]:
    """First index triple in lexicographic order whose bracket is nonzero."""
    for t in itertools.combinations(range(1, 9), 3):
        if bracket(c.pt(t[0]), c.pt(t[1]), c.pt(t[2])) != 0:
            return t
    raise DegenerateConfigError("every index triple is collinear", degeneracy_report(c))


def _candidate_triples(c: Config8, triple: Optional[Sequence[int]]) -> list[tuple[int, int, int]]:
    if triple is not None:
        return [_check_triple(triple)]
    return [
        t
        for t in itertools.combinations(range(1, 9), 3)
        if bracket(c.pt(t[0]), c.pt(t[1]), c.pt(t[2])) != 0
    ]


def p9_determinantal(c: Config8, triple: Optional[Sequence[int]] = None) -> ProjPoint:
    """Canonical ninth point from the coefficient formula.

    With no triple given, noncollinear triples are tried in lexicographic
    order until one produces a nonzero vector.
    """
    for t in _candidate_triples(c, triple):
        v = p9_raw_vector(c, t)
        if any(x != 0 for x in v):
            return canonical_point(v)
    raise DegenerateConfigError(
        "coefficient formula produced the zero vector", degeneracy_report(c)
    )


def p9_reduced(c: Config8, triple: Optional[Sequence[int]] = None) -> ProjPoint:
    """Ninth point from the vector divided exactly by the triple bracket.

    The three raw coordinates are each divisible by the bracket of the
    triple; on integer input the integer quotient is checked exactly.
    """
    for t in _candidate_triples(c, triple):
        b = bracket(c.pt(t[0]), c.pt(t[1]), c.pt(t[2]))
        if b == 0:
            raise DegenerateConfigError(
                f"triple {t} is collinear, cannot divide by its bracket",
                degeneracy_report(c),
            )
        v = p9_raw_vector(c, t)
        if all(x == 0 for x in v):
            continue
        reduced = []
        for x in v:
            q = x / b
            if x.denominator == 1 and b.denominator == 1:
                assert q.denominator == 1, (
                    f"coordinate {x} not exactly divisible by bracket {b}"
                )
            reduced.append(q)
        return canonical_point(reduced)
    raise DegenerateConfigError(
        "coefficient formula produced the zero vector", degeneracy_report(c)
    )


# ---------------------------------------------------------------------------
# Fano-plane bracket summation over S8
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FanoTuple:
    """Argument list of the 21-bracket monomial: seven cycled indices plus
    the distinguished eighth; together a permutation of 1..8."""

    seven: tuple[int, int, int, int, int, int, int]
    eighth: int

    def __post_init__(self) -> None:
        if sorted(self.seven + (self.eighth,)) != list(range(1, 9)):
            raise ValueError("seven + eighth must be a permutation of 1..8")


@dataclass(frozen=True)
class FanoResult:
    """Raw summation vector (not canonicalized: the zero vector is the
    degeneracy signal) plus the number of monomial evaluations performed."""

    vector: Vector3
    evaluations: int
    mode: str

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.vector)

    def canonical_point(self) -> ProjPoint:
        if self.is_zero:
            raise DegenerateConfigError("Fano summation produced the zero vector")
        return canonical_point(self.vector)


def _fano_triples(seven: Sequence[int], eighth: int) -> list[tuple[int, int, int]]:
    """The 21 ordered bracket triples of one monomial: the cyclic row through
    the eighth point and the two cyclically-invariant Fano plane rows."""
    t = list(seven)
    triples = [(t[i], t[(i + 1) % 7], eighth) for i in range(7)]
    triples += [(t[i], t[(i + 1) % 7], t[(i + 3) % 7]) for i in range(7)]
    triples += [(t[i], t[(i + 1) % 7], t[(i + 5) % 7]) for i in range(7)]
    return triples


def _perm_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a 0-based image tuple."""
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def fano_monomial(c: Config8, t: FanoTuple) -> Fraction:
    """Exact value of the 21-bracket product for one argument tuple."""
    return prod(
        (bracket(c.pt(i), c.pt(j), c.pt(k)) for i, j, k in _fano_triples(t.seven, t.eighth)),
        start=Fraction(1),
    )


def _is_dihedral_representative(arr: Sequence[int]) -> bool:
    # Orbit of the order-14 dihedral action on the seven slots: the
    # lexicographically least element starts at the minimum and, between the
    # two rotations placing it first (plain and reversed), has the smaller
    # second entry.  Entries are distinct so both tests are strict.
    return arr[0] == min(arr) and arr[1] < arr[6]


def _config_coords(c: Config8) -> list[tuple]:
    """Coordinate triples; plain ints whenever every denominator is one.

    The summation multiplies tens of thousands of bracket values, and int
    arithmetic avoids per-product gcd normalization.
    """
    coords = [p.coords() for p in c.points]
    if all(v.denominator == 1 for triple in coords for v in triple):
        return [tuple(int(v) for v in triple) for triple in coords]
    return coords


def p9_fano(c: Config8, mode: str = "reduced") -> FanoResult:
    """Signed sum over S8 of (Fano monomial) * (eighth point).

    mode="full" enumerates all 40320 permutations; mode="reduced" evaluates
    the 2880 dihedral-orbit representatives and scales by the orbit size 14.
    Both return the identical exact vector, homogeneous of degree 8 in every
    point; a coincident pair forces the exact zero vector.
    """
    if mode not in ("reduced", "full"):
        raise ValueError(f"mode must be 'reduced' or 'full', got {mode!r}")
    coords = _config_coords(c)
    zero = 0 if isinstance(coords[0][0], int) else Fraction(0)

    table: dict[tuple[int, int, int], object] = {}
    for i, j, k in itertools.permutations(range(8), 3):
        a, b, d = coords[i], coords[j], coords[k]
        table[(i + 1, j + 1, k + 1)] = (
            a[0] * (b[1] * d[2] - b[2] * d[1])
            - a[1] * (b[0] * d[2] - b[2] * d[0])
            + a[2] * (b[0] * d[1] - b[1] * d[0])
        )

    totals = [zero, zero, zero]
    evaluations = 0
    for eighth in range(1, 9):
        others = [n for n in range(1, 9) if n != eighth]
        for arr in itertools.permutations(others):
            if mode == "reduced" and not _is_dihedral_representative(arr):
                continue
            perm = arr + (eighth,)
            sign = _perm_sign([p - 1 for p in perm])
            value = sign
            for key in _fano_triples(arr, eighth):
                value *= table[key]
            evaluations += 1
            pt = coords[eighth - 1]
            totals[0] += value * pt[0]
            totals[1] += value * pt[1]
            totals[2] += value * pt[2]
    if mode == "reduced":
        totals = [14 * t for t in totals]
    vector = tuple(Fraction(t) for t in totals)
    return FanoResult(vector, evaluations, mode)  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# Cayley's cross-ratio construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CrossRatioData:
    """The two conic cross ratios and the solution coefficients expressing
    the ninth point as a combination of the three basis points."""

    l: Fraction
    m: Fraction
    basis_coeffs: Vector3
    labels: tuple[int, ...]  # slot -> original index, identity when untouched


def _cross_ratio_solution(c: Config8) -> "CrossRatioData | str":
    """Solve for P9 = a*P6 + b*P7 + c*P8 under the current labeling.

    Returns a failure description when a precondition fails: [678] = 0, a
    vanishing denominator in either conic cross ratio, or the all-zero
    solution.
    """
    p = [c.pt(i) for i in range(1, 9)]
    if bracket(p[5], p[6], p[7]) == 0:
        return "bracket (6, 7, 8) vanishes"
    try:
        l = cross_ratio_conics((p[0], p[1], p[2], p[3]), (p[4], p[5], p[6], p[7]))
        m = cross_ratio_conics((p[0], p[1], p[2], p[4]), (p[3], p[5], p[6], p[7]))
    except DegenerateCrossRatioError as exc:
        return str(exc)

    def b(i: int, j: int, k: int) -> Fraction:
        return bracket(p[i - 1], p[j - 1], p[k - 1])

    # Fourth common solution of the two bilinear equations
    #   [657] ab + l[658] ac + (1-l)[857] bc = 0
    #   [647] ab + m[648] ac + (1-m)[847] bc = 0
    # besides the three basis points themselves.
    pf = b(6, 4, 7) * b(6, 5, 8) * l - b(6, 4, 8) * b(6, 5, 7) * m
    qf = b(6, 4, 7) * b(8, 5, 7) * (l - 1) - b(6, 5, 7) * b(8, 4, 7) * (m - 1)
    rf = b(6, 5, 8) * b(8, 4, 7) * l * (m - 1) - b(6, 4, 8) * b(8, 5, 7) * (l - 1) * m
    coeffs = (qf * rf, pf * rf, pf * qf)
    if all(x == 0 for x in coeffs):
        return "all three solution coefficients vanish"
    return CrossRatioData(l=l, m=m, basis_coeffs=coeffs, labels=tuple(range(1, 9)))


def _relabelings() -> Iterable[tuple[int, ...]]:
    """Deterministic search order over role assignments.

    Only the roles matter: the basis triple (slots 6,7,8), the two swapped
    quad members (slots 4 and 5), and the remaining three (slots 1,2,3,
    ascending).  The identity labeling comes first.
    """
    yield tuple(range(1, 9))
    for basis in itertools.combinations(range(1, 9), 3):
        remaining = [n for n in range(1, 9) if n not in basis]
        for four, five in itertools.permutations(remaining, 2):
            first3 = tuple(n for n in remaining if n not in (four, five))
            labels = first3 + (four, five) + basis
            if labels == tuple(range(1, 9)):
                continue
            yield labels


def p9_cross_ratio(c: Config8) -> ProjPoint:
    """Canonical ninth point via Cayley's two conic cross ratios.

    The construction needs [678] != 0 and four nonvanishing denominator
    conics; those are labeling artifacts, so on failure the roles are
    permuted in a deterministic order and the computation retried.  The
    result is label-independent.
    """
    report = degeneracy_report(c)
    if report.coincident_pairs:
        raise DegenerateConfigError(
            f"coincident points {report.coincident_pairs}", report
        )
    for labels in _relabelings():
        relabeled = c.relabeled(labels) if labels != tuple(range(1, 9)) else c
        data = _cross_ratio_solution(relabeled)
        if isinstance(data, str):
            continue
        a, b_, c_ = data.basis_coeffs
        p6, p7, p8 = relabeled.pt(6).coords(), relabeled.pt(7).coords(), relabeled.pt(8).coords()
        v = tuple(a * p6[n] + b_ * p7[n] + c_ * p8[n] for n in range(3))
        if all(x == 0 for x in v):
            continue
        return canonical_point(v)
    raise DegenerateConfigError(
        "cross-ratio construction degenerate under every relabeling", report
    )


def cross_ratio_solution(c: Config8) -> CrossRatioData:
    """Solution data under the identity labeling (no relabeling fallback)."""
    data = _cross_ratio_solution(c)
    if isinstance(data, str):
        raise DegenerateConfigError(data, degeneracy_report(c))
    return data


# ---------------------------------------------------------------------------
# pencil oracle and certification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cubic:
    """Ternary cubic as ten exact coefficients in the fixed monomial order."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 10:
            raise ValueError("a ternary cubic has 10 coefficients")
        if all(x == 0 for x in self.coeffs):
            raise ValueError("zero cubic")
        object.__setattr__(self, "coeffs", tuple(Fraction(x) for x in self.coeffs))

    def evaluate(self, p: ProjPoint) -> Fraction:
        return sum((a * b for a, b in zip(self.coeffs, cubic_row(p))), Fraction(0))


def cubic_pencil_basis(c: Config8) -> tuple[Cubic, Cubic]:
    """Two primitive cubics spanning the system through all eight points.

    The 8x10 cubic-monomial matrix always has nullity >= 2; nullity > 2
    means the configuration is too degenerate for a well-defined pencil.
    """
    rows = [cubic_row(p) for p in c.points]
    basis = right_nullspace(rows)
    if len(basis) > 2:
        raise DegenerateConfigError(
            f"cubics through the eight points form a {len(basis)}-dimensional "
            "system, not a pencil",
            degeneracy_report(c),
        )
    assert len(basis) == 2
    return Cubic(tuple(Fraction(x) for x in basis[0])), Cubic(tuple(Fraction(x) for x in basis[1]))


@dataclass(frozen=True)
class Certification:
    """Independent checks of a candidate ninth point."""

    on_both_cubics: bool
    stack_rank_le_8: bool
    cayley_identity: Optional[bool]  # None when a cross ratio is undefined
    distinct_from_inputs: bool

    @property
    def certified(self) -> bool:
        return self.on_both_cubics and self.stack_rank_le_8 and self.cayley_identity is not False

    def to_json(self) -> dict:
        return {
            "on_both_cubics": self.on_both_cubics,
            "stack_rank_le_8": self.stack_rank_le_8,
            "cayley_identity": self.cayley_identity,
            "distinct_from_inputs": self.distinct_from_inputs,
            "certified": self.certified,
        }


def certify_p9(c: Config8, candidate: ProjPoint) -> Certification:
    """Certify a candidate against the pencil itself.

    (i) the candidate lies on both basis cubics exactly; (ii) the 9x10
    monomial stack of all nine points has rank <= 8; (iii) the cross-ratio
    identity that characterizes the ninth point holds where defined.  A
    candidate coinciding with an input point is flagged separately.
    """
    c1, c2 = cubic_pencil_basis(c)
    on_both = c1.evaluate(candidate) == 0 and c2.evaluate(candidate) == 0
    stack = [cubic_row(p) for p in c.points] + [cubic_row(candidate)]
    rank_ok = matrix_rank(stack) <= 8
    try:
        lhs = cross_ratio_lines(candidate, tuple(c.points[4:8]))
        rhs = cross_ratio_conics(tuple(c.points[0:4]), tuple(c.points[4:8]))
        cayley: Optional[bool] = lhs == rhs
    except DegenerateCrossRatioError:
        cayley = None
    distinct = not any(coincident(candidate, p) for p in c.points)
    return Certification(on_both, rank_ok, cayley, distinct)


# ---------------------------------------------------------------------------
# top-level dispatch with the documented fallback policy
# ---------------------------------------------------------------------------

METHODS = ("det", "reduced", "crossratio", "fano", "fano-full")


@dataclass(frozen=True)
class NinthPointResult:
    point: Optional[ProjPoint]
    method: str
    method_used: str
    triple: Optional[tuple[int, int, int]]
    fano_evaluations: Optional[int]
    zero_vector: bool
    report: DegeneracyReport


def ninth_point(
    c: Config8, method: str = "det", triple: Optional[Sequence[int]] = None
) -> NinthPointResult:
    """Compute the ninth point by the requested method.

    For the formula methods with no explicit triple, noncollinear triples
    are tried in lexicographic order; if every triple yields the zero
    vector the Fano summation is used as a fallback before giving up.
    A missing point (with the report attached) is an answer, not an error.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")
    report = degeneracy_report(c)

    if method in ("fano", "fano-full"):
        result = p9_fano(c, "full" if method == "fano-full" else "reduced")
        pointval = None if result.is_zero else result.canonical_point()
        return NinthPointResult(
            pointval, method, method, None, result.evaluations, result.is_zero, report
        )

    if method == "crossratio":
        try:
            return NinthPointResult(p9_cross_ratio(c), method, method, None, None, False, report)
        except DegenerateConfigError:
            return NinthPointResult(None, method, method, None, None, False, report)

    compute = p9_determinantal if method == "det" else p9_reduced
    for t in _candidate_triples(c, triple):
        try:
            pointval = compute(c, t)
        except DegenerateConfigError:
            continue
        return NinthPointResult(pointval, method, method, t, None, False, report)
    if triple is not None:
        return NinthPointResult(None, method, method, _check_triple(triple), None, False, report)
    fallback = p9_fano(c, "reduced")
    if fallback.is_zero:
        return NinthPointResult(
            None, method, "fano", None, fallback.evaluations, True, report
        )
    return NinthPointResult(
        fallback.canonical_point(), method, "fano", None, fallback.evaluations, False, report
    )
