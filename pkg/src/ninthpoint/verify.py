"""Randomized exact verification of the algebraic identities.

Full symbolic proofs of the underlying polynomial identities run for days
in a computer algebra system; this harness instead draws random integer
specializations and checks each identity by exact rational evaluation.  A
pass is literal equality of fractions, never closeness, so every passing
trial is a Schwartz-Zippel-style certificate and failures are reproducible
from (seed, bound, trial index).

The minor-identity family works on the specialized frame

  P1=(1:0:0)  P2=(0:1:0)  P3=(0:0:1)  P4=(1:1:1)
  P5=(1:a:b)  P6=(1:c:d)  P7=(1:e:f)  P8=(1:g:h)

where the 9x10 cubic-monomial stack of the eight points plus (1:u:v) must
drop rank when (u, v) are the coordinate ratios of the ninth point.  Each
of the ten 9x9 minors expands along its (u, v) row into at most seven
cofactor terms; the three minors that delete a unit column vanish
identically and are reported as trivial.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .linalg import Rational, as_exact, ff_determinant
from .ninth import (
    FanoTuple,
    degeneracy_report,
    fano_monomial,
    ingredients,
    p9_cross_ratio,
    p9_determinantal,
    p9_fano,
    p9_raw_vector,
    p9_reduced,
)
from .projective import (
    Config8,
    DegenerateCrossRatioError,
    ProjPoint,
    ProjTransform,
    bracket,
    conic_bracket_expansion,
    conic_det,
    cross_ratio_conics,
    cross_ratio_lines,
    cubic_row,
    singular_cubic_bracket_expansion,
    singular_cubic_det,
    transform_config,
)

MAX_RESAMPLE = 1000

# Monomials of the (1 : u : v) row in the fixed cubic column order.
UV_MONOMIALS = ("1", "u", "v", "u2", "uv", "v2", "u3", "u2v", "uv2", "v3")
# The seven-term expansion order: A1 u2v + A2 uv2 + A3 u2 + A4 uv + A5 v2 + A6 u + A7 v.
SEVEN_TERM_COLUMNS = (7, 8, 3, 4, 5, 1, 2)


class SamplingExhausted(RuntimeError):
    """Rejection sampling failed to find a usable draw within the retry cap."""


# ---------------------------------------------------------------------------
# specialized frame configurations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpecializedConfig:
    """Coordinates a..h of the four free points of the specialized frame."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction
    g: Fraction
    h: Fraction

    def __post_init__(self) -> None:
        for name in "abcdefgh":
            object.__setattr__(self, name, as_exact(getattr(self, name)))

    def values(self) -> tuple[Fraction, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f, self.g, self.h)

    def config(self) -> Config8:
        a, b, c, d, e, f, g, h = self.values()
        return Config8.from_coords(
            [
                (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1),
                (1, a, b), (1, c, d), (1, e, f), (1, g, h),
            ]
        )


def frame_config(*values: Rational) -> Config8:
    return SpecializedConfig(*[as_exact(v) for v in values]).config()


# ---------------------------------------------------------------------------
# the ten rank minors and their cofactors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MinorIdentityData:
    """Cofactor data of one 9x9 minor of the specialized 9x10 stack.

    `cofactors` are A1..A7 in the seven-term order; `full_coefficients`
    carries all ten monomial coefficients (the three unit-column slots are
    structurally zero).  `trivial` marks the minors that vanish identically
    because deleting their column zeroes out a unit row; `missing_monomial`
    names the deleted column when it is one of the seven expansion terms.
    """

    minor_index: int
    cofactors: tuple[Fraction, ...]
    full_coefficients: tuple[Fraction, ...]
    trivial: bool
    missing_monomial: Optional[str]


def specialized_rows(s: SpecializedConfig) -> list[list[Fraction]]:
    """The 8x10 cubic-monomial rows of the specialized frame."""
    return [cubic_row(p) for p in s.config().points]


def minor_polynomial_coefficients(
    s: SpecializedConfig, minor_index: int
) -> tuple[Fraction, ...]:
    """Coefficients (per monomial of the (1:u:v) row) of one 9x9 minor.

    The minor deletes column `minor_index` (1-based) of the 9x10 stack and
    is expanded along its last row; the coefficient of monomial j is the
    signed 8x8 determinant complementary to position (9, j).
    """
    if not 1 <= minor_index <= 10:
        raise ValueError(f"minor index must be in 1..10, got {minor_index}")
    rows8 = specialized_rows(s)
    deleted = minor_index - 1
    kept = [c for c in range(10) if c != deleted]
    coeffs = [Fraction(0)] * 10
    for pos, col in enumerate(kept):
        sub = [[row[c] for c in kept if c != col] for row in rows8]
        coeffs[col] = ff_determinant(sub) * (-1) ** (8 + pos)
    return tuple(coeffs)


def cofactors_A(s: SpecializedConfig, minor_index: int) -> MinorIdentityData:
    coeffs = minor_polynomial_coefficients(s, minor_index)
    # Unit rows force the constant, u^3 and v^3 coefficients to zero.
    assert coeffs[0] == 0 and coeffs[6] == 0 and coeffs[9] == 0
    seven = tuple(coeffs[c] for c in SEVEN_TERM_COLUMNS)
    trivial = all(x == 0 for x in coeffs)
    deleted = minor_index - 1
    missing = UV_MONOMIALS[deleted] if deleted in SEVEN_TERM_COLUMNS else None
    return MinorIdentityData(minor_index, seven, coeffs, trivial, missing)


def minor_value(
    s: SpecializedConfig, minor_index: int, u: Rational, v: Rational
) -> Fraction:
    """Direct 9x9 determinant of the stack with the (1:u:v) row appended."""
    deleted = minor_index - 1
    kept = [c for c in range(10) if c != deleted]
    last = cubic_row(ProjPoint(Fraction(1), as_exact(u), as_exact(v)))
    rows = [[row[c] for c in kept] for row in specialized_rows(s)]
    rows.append([last[c] for c in kept])
    return ff_determinant(rows)


def ninth_point_ratios(s: SpecializedConfig) -> tuple[Fraction, Fraction]:
    """The coordinate ratios (u, v) = (y9/x9, z9/x9) of the ninth point of
    the specialized frame, from the six ingredient scalars."""
    ing = ingredients(s.config(), (1, 2, 3))
    if 0 in (ing.cx, ing.dy, ing.dz):
        raise DegenerateCrossRatioError("ingredient denominator vanishes")
    return ing.dx * ing.cy / (ing.cx * ing.dy), ing.dx * ing.cz / (ing.cx * ing.dz)


def minor_identity_residual(s: SpecializedConfig, minor_index: int) -> Fraction:
    """Value of one minor at the ninth point's (u, v); zero is the identity."""
    u, v = ninth_point_ratios(s)
    coeffs = minor_polynomial_coefficients(s, minor_index)
    mono = cubic_row(ProjPoint(Fraction(1), u, v))
    return sum((c * m for c, m in zip(coeffs, mono)), Fraction(0))


# ---------------------------------------------------------------------------
# samplers (all rejection-capped)
# ---------------------------------------------------------------------------

def random_point(rng: random.Random, bound: int) -> ProjPoint:
    for _ in range(MAX_RESAMPLE):
        coords = tuple(rng.randint(-bound, bound) for _ in range(3))
        if any(coords):
            return ProjPoint(*coords)
    raise SamplingExhausted("could not draw a nonzero point")


def random_config(rng: random.Random, bound: int) -> Config8:
    return Config8(tuple(random_point(rng, bound) for _ in range(8)))


def random_nondegenerate_config(rng: random.Random, bound: int) -> Config8:
    for _ in range(MAX_RESAMPLE):
        c = random_config(rng, bound)
        if degeneracy_report(c).clean:
            return c
    raise SamplingExhausted(f"no nondegenerate configuration at bound {bound}")


def random_transform(rng: random.Random, bound: int) -> ProjTransform:
    for _ in range(MAX_RESAMPLE):
        t = ProjTransform(
            tuple(tuple(Fraction(rng.randint(-bound, bound)) for _ in range(3)) for _ in range(3))
        )
        if t.det() != 0:
            return t
    raise SamplingExhausted("could not draw a nonsingular transform")


def random_specialized(rng: random.Random, bound: int) -> SpecializedConfig:
    """Frame coordinates with all six ingredient scalars nonzero."""
    for _ in range(MAX_RESAMPLE):
        s = SpecializedConfig(*[Fraction(rng.randint(-bound, bound)) for _ in range(8)])
        ing = ingredients(s.config(), (1, 2, 3))
        if 0 not in (ing.cx, ing.cy, ing.cz, ing.dx, ing.dy, ing.dz):
            return s
    raise SamplingExhausted(f"no usable specialized frame at bound {bound}")


def _random_fano_tuple(rng: random.Random) -> FanoTuple:
    perm = list(range(1, 9))
    rng.shuffle(perm)
    return FanoTuple(tuple(perm[:7]), perm[7])


# ---------------------------------------------------------------------------
# identity suite
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerifyReport:
    identity: str
    trials: int
    seed: int
    bound: int
    failures: tuple[dict, ...]

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "trials": self.trials,
            "seed": self.seed,
            "bound": self.bound,
            "failures": list(self.failures),
            "status": self.status,
        }


def _check_conic_expansion(rng: random.Random, bound: int) -> Optional[str]:
    pts = [random_point(rng, bound) for _ in range(6)]
    lhs = conic_det(pts)
    rhs = conic_bracket_expansion(pts)
    if lhs != rhs:
        return f"determinant {lhs} != expansion {rhs} at {[str(p) for p in pts]}"
    return None


def _check_cubic_expansion(rng: random.Random, bound: int) -> Optional[str]:
    c = random_config(rng, bound)
    lhs = singular_cubic_det(c.pt(7), [c.pt(i) for i in (1, 2, 3, 4, 5, 6, 8)])
    rhs = singular_cubic_bracket_expansion(c)
    if lhs != rhs:
        return f"determinant {lhs} != expansion {rhs}"
    return None


def _check_equivariance_c(rng: random.Random, bound: int) -> Optional[str]:
    pts = [random_point(rng, bound) for _ in range(6)]
    t = random_transform(rng, bound)
    from .projective import apply_transform

    lhs = conic_det([apply_transform(t, p) for p in pts])
    rhs = t.det() ** 4 * conic_det(pts)
    if lhs != rhs:
        return f"C(T args) = {lhs} but det(T)^4 C = {rhs}"
    return None


def _check_equivariance_d(rng: random.Random, bound: int) -> Optional[str]:
    c = random_config(rng, bound)
    t = random_transform(rng, bound)
    tc = transform_config(t, c)
    rest = [2, 3, 4, 5, 6, 7, 8]
    lhs = singular_cubic_det(tc.pt(1), [tc.pt(i) for i in rest])
    rhs = t.det() ** 9 * singular_cubic_det(c.pt(1), [c.pt(i) for i in rest])
    if lhs != rhs:
        return f"D(T args) = {lhs} but det(T)^9 D = {rhs}"
    return None


def _check_cayley_identity(rng: random.Random, bound: int) -> Optional[str]:
    for _ in range(MAX_RESAMPLE):
        c = random_nondegenerate_config(rng, bound)
        p9 = p9_determinantal(c)
        try:
            lhs = cross_ratio_lines(p9, tuple(c.points[4:8]))
            rhs = cross_ratio_conics(tuple(c.points[0:4]), tuple(c.points[4:8]))
        except DegenerateCrossRatioError:
            continue
        if lhs != rhs:
            return f"line cross ratio {lhs} != conic cross ratio {rhs}"
        return None
    raise SamplingExhausted("no configuration with defined cross ratios")


def _check_fano_cyclic(rng: random.Random, bound: int) -> Optional[str]:
    c = random_config(rng, bound)
    t = _random_fano_tuple(rng)
    shifted = FanoTuple(t.seven[-1:] + t.seven[:-1], t.eighth)
    lhs, rhs = fano_monomial(c, t), fano_monomial(c, shifted)
    if lhs != rhs:
        return f"F{t.seven} = {lhs} but cyclic shift gives {rhs}"
    return None


def _check_fano_reversal(rng: random.Random, bound: int) -> Optional[str]:
    c = random_config(rng, bound)
    t = _random_fano_tuple(rng)
    reversed_ = FanoTuple(t.seven[::-1], t.eighth)
    lhs, rhs = fano_monomial(c, t), fano_monomial(c, reversed_)
    if lhs != -rhs:
        return f"F{t.seven} = {lhs} but reversal gives {rhs}, not its negative"
    return None


def _check_minor_identities(rng: random.Random, bound: int) -> Optional[str]:
    s = random_specialized(rng, bound)
    for idx in range(1, 11):
        residual = minor_identity_residual(s, idx)
        if residual != 0:
            return f"minor {idx} residual {residual} at {s.values()}"
    return None


def _check_cross_method(rng: random.Random, bound: int) -> Optional[str]:
    c = random_nondegenerate_config(rng, bound)
    pts = {
        "det": p9_determinantal(c),
        "reduced": p9_reduced(c),
        "crossratio": p9_cross_ratio(c),
        "fano": p9_fano(c, "reduced").canonical_point(),
    }
    baseline = pts["det"]
    for name, p in pts.items():
        if p != baseline:
            return f"method {name} gives {p}, det gives {baseline}"
    return None


def _check_divisibility(rng: random.Random, bound: int) -> Optional[str]:
    c = random_nondegenerate_config(rng, bound)
    triple = (1, 2, 3)
    b = bracket(c.pt(1), c.pt(2), c.pt(3))
    v = p9_raw_vector(c, triple)
    for coord in v:
        q = coord / b
        if q.denominator != 1:
            return f"coordinate {coord} not divisible by bracket {b}"
    return None


def _check_multidegree(rng: random.Random, bound: int) -> Optional[str]:
    c = random_nondegenerate_config(rng, bound)
    lam = Fraction(rng.randint(2, max(3, bound)))
    v = p9_raw_vector(c, (1, 2, 3))
    for idx, expo in ((1, 9), (5, 8)):
        scaled_points = list(c.points)
        scaled_points[idx - 1] = scaled_points[idx - 1].scaled(lam)
        vs = p9_raw_vector(Config8(tuple(scaled_points)), (1, 2, 3))
        if tuple(vs) != tuple(lam**expo * x for x in v):
            return f"scaling point {idx} by {lam} did not scale the vector by lambda^{expo}"
    w = p9_fano(c, "reduced").vector
    scaled_points = list(c.points)
    scaled_points[3] = scaled_points[3].scaled(lam)
    ws = p9_fano(Config8(tuple(scaled_points)), "reduced").vector
    if tuple(ws) != tuple(lam**8 * x for x in w):
        return f"scaling point 4 by {lam} did not scale the summation vector by lambda^8"
    return None


def _check_duplicate_zero(rng: random.Random, bound: int) -> Optional[str]:
    c = random_config(rng, bound)
    pts = list(c.points)
    i, j = sorted(rng.sample(range(8), 2))
    pts[j] = pts[i]
    result = p9_fano(Config8(tuple(pts)), "reduced")
    if not result.is_zero:
        return f"duplicate points {i + 1},{j + 1} did not produce the zero vector"
    return None


IDENTITIES: dict[str, Callable[[random.Random, int], Optional[str]]] = {
    "conic-expansion": _check_conic_expansion,
    "cubic-expansion": _check_cubic_expansion,
    "equivariance-C": _check_equivariance_c,
    "equivariance-D": _check_equivariance_d,
    "cayley-identity": _check_cayley_identity,
    "fano-cyclic": _check_fano_cyclic,
    "fano-reversal": _check_fano_reversal,
    "minor-identities": _check_minor_identities,
    "cross-method": _check_cross_method,
    "bracket-divisibility": _check_divisibility,
    "multidegree-scaling": _check_multidegree,
    "duplicate-zero-vector": _check_duplicate_zero,
}


def run_identity_suite(which: str, trials: int, seed: int, bound: int) -> VerifyReport:
    """Run one identity check on `trials` random draws, exactly.

    Deterministic for fixed (which, trials, seed, bound); degenerate draws
    are rejected and redrawn inside the checks, never counted as failures.
    """
    if which not in IDENTITIES:
        raise ValueError(
            f"unknown identity {which!r}; expected one of {sorted(IDENTITIES)}"
        )
    if trials < 1:
        raise ValueError("at least one trial required")
    check = IDENTITIES[which]
    rng = random.Random(seed)
    failures: list[dict] = []
    for trial in range(trials):
        detail = check(rng, bound)
        if detail is not None:
            failures.append({"trial": trial, "detail": detail})
    return VerifyReport(which, trials, seed, bound, tuple(failures))
