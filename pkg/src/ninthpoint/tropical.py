"""Min-plus evaluation of the ninth-point formulas.

Over a field with valuation, the valuation of a determinant is bounded
below by the tropical determinant of the entrywise valuation matrix:

    val(det M)  >=  min over permutations s of  sum_i val(M[i, s(i)])

with equality whenever the minimizing permutation is unique (a unique
lowest term cannot cancel).  Applying this to the six ingredient scalars
of the specialized frame turns the coordinate-ratio formula

    u = Dx*Cy / (Cx*Dy)        v = Dx*Cz / (Cx*Dz)

into a piecewise-linear predictor for the valuations of (u, v), exact in
the absence of cancellation.  This module computes tropical determinants
by an O(n^3) assignment solver with exact rational costs, detects
uniqueness by a second-best query, and runs p-adic agreement experiments
against the exact rational pipeline.

+infinity (the valuation of 0) is represented as None throughout.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import Rational, as_exact
from .ninth import ingredients
from .projective import (
    CUBIC_MONOMIALS,
    QUADRATIC_MONOMIALS,
    Config8,
    cubic_jacobian_rows,
    cubic_row,
    quadratic_row,
)
from .verify import SamplingExhausted, MAX_RESAMPLE

TropValue = Optional[Fraction]  # None = +infinity
INGREDIENT_NAMES = ("Cx", "Cy", "Cz", "Dx", "Dy", "Dz")


class DegenerateValuationError(ValueError):
    """A required tropical determinant is +infinity."""


def trop_add(a: TropValue, b: TropValue) -> TropValue:
    """Tropical addition: min, with None as the neutral element."""
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def trop_mul(a: TropValue, b: TropValue) -> TropValue:
    """Tropical multiplication: +, with None absorbing."""
    if a is None or b is None:
        return None
    return a + b


def padic_valuation(x: Rational, p: int) -> TropValue:
    """p-adic order of a rational; None for zero."""
    if p < 2:
        raise ValueError("prime must be >= 2")
    x = as_exact(x)
    if x == 0:
        return None
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return Fraction(v)


# ---------------------------------------------------------------------------
# tropical determinant = optimal assignment
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TropDetResult:
    value: TropValue
    unique: bool
    assignment: Optional[tuple[int, ...]]  # column chosen per row


def _hungarian(cost: list[list[Fraction]]) -> tuple[Fraction, list[int]]:
    """Minimum-cost perfect assignment via shortest augmenting paths with
    potentials; all arithmetic exact."""
    n = len(cost)
    u = [Fraction(0)] * (n + 1)
    v = [Fraction(0)] * (n + 1)
    match = [0] * (n + 1)  # match[j] = row assigned to column j (1-based, 0 = none)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv: list[Optional[Fraction]] = [None] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta: Optional[Fraction] = None
            j1 = -1
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                if minv[j] is None or cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if delta is None or minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            assert delta is not None
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                elif minv[j] is not None:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    cols = [0] * n
    for j in range(1, n + 1):
        if match[j]:
            cols[match[j] - 1] = j - 1
    total = sum((cost[i][cols[i]] for i in range(n)), Fraction(0))
    return total, cols


def tropical_determinant(m: Sequence[Sequence[TropValue]]) -> TropDetResult:
    """Min over permutations of the selected-entry sum, plus uniqueness.

    Infinite entries are modeled by a finite sentinel large enough that any
    assignment through one is worse than every finite assignment; if the
    optimum still uses one, no finite assignment exists and the value is
    +infinity.  Uniqueness is decided by re-solving with each optimal edge
    forbidden in turn (the best such solution is the second-best value).
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("square matrix required")
    if n == 0:
        return TropDetResult(Fraction(0), True, ())
    finite = [abs(x) for row in m for x in row if x is not None]
    top = max(finite) if finite else Fraction(0)
    # One sentinel edge must cost more than any sentinel-free assignment can
    # gain back: big - (n-1)*top > n*top.
    big = (2 * top + 1) * (n + 1)
    forbid = 2 * (n + 1) * big + 1
    cost = [[big if x is None else Fraction(x) for x in row] for row in m]
    best, cols = _hungarian(cost)
    if any(m[i][cols[i]] is None for i in range(n)):
        return TropDetResult(None, False, None)
    second: Optional[Fraction] = None
    for i in range(n):
        forbidden = [row[:] for row in cost]
        forbidden[i][cols[i]] = forbid
        val2, cols2 = _hungarian(forbidden)
        if any(forbidden[r][cols2[r]] >= big for r in range(n)):
            continue  # no finite assignment avoids this edge
        if second is None or val2 < second:
            second = val2
    unique = second is None or second > best
    return TropDetResult(best, unique, tuple(cols))


def tropical_det_brute_force(m: Sequence[Sequence[TropValue]]) -> TropDetResult:
    """Enumeration oracle for small n."""
    n = len(m)
    best: TropValue = None
    count = 0
    arg = None
    for perm in itertools.permutations(range(n)):
        s: TropValue = Fraction(0)
        for i in range(n):
            s = trop_mul(s, m[i][perm[i]])
        if s is None:
            continue
        if best is None or s < best:
            best, count, arg = s, 1, perm
        elif s == best:
            count += 1
    if best is None:
        return TropDetResult(None, False, None)
    return TropDetResult(best, count == 1, arg)


# ---------------------------------------------------------------------------
# tropical ninth-point predictor on the specialized frame
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TropConfig:
    """Coordinate valuations of the four free points P5..P8 (P1..P4 are the
    fixed frame); each point needs at least one finite coordinate."""

    points: tuple[tuple[TropValue, TropValue, TropValue], ...]

    def __post_init__(self) -> None:
        if len(self.points) != 4:
            raise ValueError("valuations for exactly the four points P5..P8 required")
        norm = []
        for t in self.points:
            if len(t) != 3:
                raise ValueError("three coordinate valuations per point")
            if all(x is None for x in t):
                raise ValueError("point with no finite coordinate valuation")
            norm.append(tuple(None if x is None else as_exact(x) for x in t))
        object.__setattr__(self, "points", tuple(norm))


@dataclass(frozen=True)
class TropP9Result:
    u: Fraction
    v: Fraction
    factors: dict[str, TropValue]
    unique: dict[str, bool]

    @property
    def all_unique(self) -> bool:
        return all(self.unique.values())


def _coeff_val(coefficient: int, prime: Optional[int]) -> TropValue:
    if coefficient == 0:
        return None
    if prime is None:
        return Fraction(0)
    return padic_valuation(coefficient, prime)


def _trop_monomial_row(vals: Sequence[TropValue], monomials) -> list[TropValue]:
    out = []
    for mono in monomials:
        acc: TropValue = Fraction(0)
        for v, e in zip(vals, mono):
            for _ in range(e):
                acc = trop_mul(acc, v)
        out.append(acc)
    return out


# Valuations of the frame points (1:0:0), (0:1:0), (0:0:1), (1:1:1).
_FRAME_VALS: tuple[tuple[TropValue, TropValue, TropValue], ...] = (
    (Fraction(0), None, None),
    (None, Fraction(0), None),
    (None, None, Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(0)),
)


def _jacobian_val_rows(point_vals, prime: Optional[int]) -> list[list[TropValue]]:
    rows = []
    for var in range(3):
        row: list[TropValue] = []
        for mono in CUBIC_MONOMIALS:
            if mono[var] == 0:
                row.append(None)
                continue
            shifted = list(mono)
            shifted[var] -= 1
            acc = _coeff_val(mono[var], prime)
            for v, e in zip(point_vals, shifted):
                for _ in range(e):
                    acc = trop_mul(acc, v)
            row.append(acc)
        rows.append(row)
    return rows


def ingredient_valuation_matrix(
    name: str, t: TropConfig, prime: Optional[int] = None
) -> list[list[TropValue]]:
    """Entrywise-valuation matrix of one ingredient determinant.

    With a prime given, the integer coefficients 2 and 3 in the Jacobian
    rows carry their p-adic valuations; without one they count as units
    (residue characteristic zero).
    """
    if name not in INGREDIENT_NAMES:
        raise ValueError(f"unknown ingredient {name!r}")
    vals = list(_FRAME_VALS) + list(t.points)  # index 0..7 = P1..P8

    def quad(i: int) -> list[TropValue]:
        return _trop_monomial_row(vals[i - 1], QUADRATIC_MONOMIALS)

    def cube(i: int) -> list[TropValue]:
        return _trop_monomial_row(vals[i - 1], CUBIC_MONOMIALS)

    rest = [4, 5, 6, 7, 8]
    if name.startswith("C"):
        lead = {"Cx": 1, "Cy": 2, "Cz": 3}[name]
        return [quad(lead)] + [quad(i) for i in rest]
    lead, second, third = {
        "Dx": (1, 2, 3),
        "Dy": (2, 3, 1),
        "Dz": (3, 1, 2),
    }[name]
    rows = [cube(second), cube(third)] + [cube(i) for i in rest]
    rows += _jacobian_val_rows(vals[lead - 1], prime)
    return rows


def tropical_p9(t: TropConfig, prime: Optional[int] = None) -> TropP9Result:
    """Tropical valuation prediction for the coordinate ratios (u, v).

    trop(u) = trop(Dx) + trop(Cy) - trop(Cx) - trop(Dy) and similarly for
    v; each factor is a tropical determinant, and the per-factor uniqueness
    flags report whether its minimizing permutation was unique.
    """
    factors: dict[str, TropValue] = {}
    unique: dict[str, bool] = {}
    for name in INGREDIENT_NAMES:
        result = tropical_determinant(ingredient_valuation_matrix(name, t, prime))
        factors[name] = result.value
        unique[name] = result.unique
    if any(v is None for v in factors.values()):
        infinite = [k for k, v in factors.items() if v is None]
        raise DegenerateValuationError(f"tropical determinant +infinity for {infinite}")
    u = factors["Dx"] + factors["Cy"] - factors["Cx"] - factors["Dy"]
    v = factors["Dx"] + factors["Cz"] - factors["Cx"] - factors["Dz"]
    return TropP9Result(u, v, factors, unique)


# ---------------------------------------------------------------------------
# p-adic agreement experiments
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ValuationTrial:
    trial: int
    exponents: tuple[tuple[int, int, int], ...]
    factor_exact: dict[str, Optional[str]]
    factor_tropical: dict[str, Optional[str]]
    factor_unique: dict[str, bool]
    u_exact: Optional[str]
    u_tropical: str
    v_exact: Optional[str]
    v_tropical: str
    classification: str  # "agreement" | "cancellation"
    sound: bool


@dataclass(frozen=True)
class ValuationReport:
    prime: int
    trials: int
    seed: int
    records: tuple[ValuationTrial, ...]

    @property
    def agreements(self) -> int:
        return sum(1 for r in self.records if r.classification == "agreement")

    @property
    def cancellations(self) -> int:
        return sum(1 for r in self.records if r.classification == "cancellation")

    @property
    def soundness_violations(self) -> int:
        return sum(1 for r in self.records if not r.sound)

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "trials": self.trials,
            "seed": self.seed,
            "agreements": self.agreements,
            "cancellations": self.cancellations,
            "soundness_violations": self.soundness_violations,
            "records": [
                {
                    "trial": r.trial,
                    "exponents": [list(e) for e in r.exponents],
                    "factor_exact": r.factor_exact,
                    "factor_tropical": r.factor_tropical,
                    "factor_unique": r.factor_unique,
                    "u": {"exact": r.u_exact, "tropical": r.u_tropical},
                    "v": {"exact": r.v_exact, "tropical": r.v_tropical},
                    "classification": r.classification,
                    "sound": r.sound,
                }
                for r in self.records
            ],
        }


def _fmt(x: TropValue) -> Optional[str]:
    return None if x is None else str(x)


def _sample_padic_coordinate(
    rng: random.Random, prime: int, exponent_range: int, unit_bound: int
) -> tuple[Fraction, int]:
    e = rng.randint(-exponent_range, exponent_range)
    unit = rng.randint(1, prime - 1) + prime * rng.randint(0, unit_bound)
    return Fraction(prime) ** e * unit, e


def _exact_ingredient_matrices(c: Config8) -> dict[str, list[list[Fraction]]]:
    p = [c.pt(i) for i in range(1, 9)]
    rest = [p[i] for i in (3, 4, 5, 6, 7)]
    return {
        "Cx": [quadratic_row(q) for q in [p[0]] + rest],
        "Cy": [quadratic_row(q) for q in [p[1]] + rest],
        "Cz": [quadratic_row(q) for q in [p[2]] + rest],
        "Dx": [cubic_row(q) for q in [p[1], p[2]] + rest] + cubic_jacobian_rows(p[0]),
        "Dy": [cubic_row(q) for q in [p[2], p[0]] + rest] + cubic_jacobian_rows(p[1]),
        "Dz": [cubic_row(q) for q in [p[0], p[1]] + rest] + cubic_jacobian_rows(p[2]),
    }


def valuation_agreement(
    prime: int,
    trials: int,
    seed: int,
    exponent_range: int = 3,
    unit_bound: int = 9,
) -> ValuationReport:
    """Compare exact p-adic valuations with the tropical prediction.

    Per trial the free points get coordinates prime^e * unit with known
    valuation e; the exact pipeline computes the six ingredient scalars and
    (u, v) over Q, and the tropical pipeline predicts the valuations from
    the exponent data alone.  The ultrametric bound val >= prediction is
    recorded per factor (`sound`); a trial where some factor's lowest terms
    cancel (strict inequality, only possible at a tied minimum) is
    classified as a cancellation event.
    """
    if prime < 2 or any(prime % k == 0 for k in range(2, int(prime**0.5) + 1)):
        raise ValueError(f"prime required, got {prime}")
    if trials < 1:
        raise ValueError("at least one trial required")
    rng = random.Random(seed)
    records: list[ValuationTrial] = []
    for trial in range(trials):
        for _ in range(MAX_RESAMPLE):
            exps: list[tuple[int, int, int]] = []
            coords: list[tuple[Fraction, Fraction, Fraction]] = []
            for _ in range(4):
                cs, es = [], []
                for _ in range(3):
                    value, e = _sample_padic_coordinate(rng, prime, exponent_range, unit_bound)
                    cs.append(value)
                    es.append(e)
                coords.append(tuple(cs))
                exps.append(tuple(es))
            c = Config8.from_coords(
                [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)] + coords
            )
            ing = ingredients(c, (1, 2, 3))
            exact = {
                "Cx": ing.cx, "Cy": ing.cy, "Cz": ing.cz,
                "Dx": ing.dx, "Dy": ing.dy, "Dz": ing.dz,
            }
            if 0 in exact.values():
                continue  # degenerate draw, resample
            break
        else:
            raise SamplingExhausted("could not draw a nondegenerate p-adic trial")

        tconf = TropConfig(
            tuple(tuple(Fraction(e) for e in es) for es in exps)  # type: ignore[arg-type]
        )
        prediction = tropical_p9(tconf, prime)
        exact_vals = {k: padic_valuation(x, prime) for k, x in exact.items()}
        sound = True
        cancel = False
        for name in INGREDIENT_NAMES:
            ev, tv = exact_vals[name], prediction.factors[name]
            if ev is None or ev < tv:
                sound = False
            elif ev > tv:
                cancel = True
                if prediction.unique[name]:
                    sound = False  # unique minimum must be attained exactly
        u_exact = padic_valuation(ing.dx * ing.cy / (ing.cx * ing.dy), prime)
        v_exact = padic_valuation(ing.dx * ing.cz / (ing.cx * ing.dz), prime)
        agreement = u_exact == prediction.u and v_exact == prediction.v and not cancel
        records.append(
            ValuationTrial(
                trial=trial,
                exponents=tuple(exps),
                factor_exact={k: _fmt(v) for k, v in exact_vals.items()},
                factor_tropical={k: _fmt(v) for k, v in prediction.factors.items()},
                factor_unique=dict(prediction.unique),
                u_exact=_fmt(u_exact),
                u_tropical=str(prediction.u),
                v_exact=_fmt(v_exact),
                v_tropical=str(prediction.v),
                classification="agreement" if agreement else "cancellation",
                sound=sound,
            )
        )
    return ValuationReport(prime, trials, seed, tuple(records))
