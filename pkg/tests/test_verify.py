import random
from fractions import Fraction

import pytest

from ninthpoint.linalg import ff_determinant
from ninthpoint.verify import (
    IDENTITIES,
    SEVEN_TERM_COLUMNS,
    SamplingExhausted,
    SpecializedConfig,
    UV_MONOMIALS,
    cofactors_A,
    minor_identity_residual,
    minor_polynomial_coefficients,
    minor_value,
    ninth_point_ratios,
    random_nondegenerate_config,
    random_point,
    random_specialized,
    run_identity_suite,
)
from ninthpoint.projective import ProjPoint, cubic_row


def solve_overdetermined(a_rows, rhs):
    """Exact unique solution of a consistent overdetermined system."""
    ncols = len(a_rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(a_rows)]
    nrows = len(aug)
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][col]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    assert len(pivots) == ncols, "fit system is rank deficient"
    assert all(all(x == 0 for x in aug[i]) for i in range(r, nrows)), "inconsistent fit"
    return [aug[i][ncols] for i in range(ncols)]


def fitted_minor_coefficients(s, minor_index):
    """Oracle: sample the 9x9 minor at a grid of (u, v) points and solve for
    the coefficients of the nine surviving monomials."""
    kept = [c for c in range(10) if c != minor_index - 1]
    samples = [(u, v) for u in range(2, 7) for v in range(2, 7)]
    rows = []
    rhs = []
    for u, v in samples:
        mono = cubic_row(ProjPoint(Fraction(1), Fraction(u), Fraction(v)))
        rows.append([mono[c] for c in kept])
        rhs.append(minor_value(s, minor_index, u, v))
    sol = solve_overdetermined(rows, rhs)
    coeffs = [Fraction(0)] * 10
    for c, val in zip(kept, sol):
        coeffs[c] = val
    return tuple(coeffs)


@pytest.fixture(scope="module")
def spec_config():
    return random_specialized(random.Random(71), 9)


def test_cofactors_match_fitted_oracle(spec_config):
    for minor_index in range(1, 11):
        direct = minor_polynomial_coefficients(spec_config, minor_index)
        assert direct == fitted_minor_coefficients(spec_config, minor_index)


def test_structural_zero_slots(spec_config):
    for minor_index in range(1, 11):
        coeffs = minor_polynomial_coefficients(spec_config, minor_index)
        assert coeffs[0] == 0 and coeffs[6] == 0 and coeffs[9] == 0


def test_trivial_minors_are_the_unit_columns(spec_config):
    trivial = {i for i in range(1, 11) if cofactors_A(spec_config, i).trivial}
    assert trivial == {1, 7, 10}


def test_missing_monomial_bookkeeping(spec_config):
    data = cofactors_A(spec_config, 2)
    assert data.missing_monomial == "u"
    assert data.cofactors[5] == 0  # the u slot of the seven-term order
    assert cofactors_A(spec_config, 1).missing_monomial is None


def test_seven_term_order_matches_columns(spec_config):
    data = cofactors_A(spec_config, 4)
    for pos, col in enumerate(SEVEN_TERM_COLUMNS):
        assert data.cofactors[pos] == data.full_coefficients[col]
    assert [UV_MONOMIALS[c] for c in SEVEN_TERM_COLUMNS] == [
        "u2v", "uv2", "u2", "uv", "v2", "u", "v",
    ]


def test_minor_identities_vanish_at_the_ninth_point(spec_config):
    u, v = ninth_point_ratios(spec_config)
    mono = cubic_row(ProjPoint(Fraction(1), u, v))
    for minor_index in range(1, 11):
        coeffs = minor_polynomial_coefficients(spec_config, minor_index)
        assert sum(c * m for c, m in zip(coeffs, mono)) == 0
        assert minor_identity_residual(spec_config, minor_index) == 0


def test_degenerate_frame_still_has_welldefined_cofactors():
    # a == c collapses two rows; the cofactor vector exists, possibly with
    # extra zeros
    s = SpecializedConfig(*(Fraction(x) for x in (2, 3, 2, 3, 5, 7, 4, 9)))
    for minor_index in range(1, 11):
        coeffs = minor_polynomial_coefficients(s, minor_index)
        assert len(coeffs) == 10


def test_minor_index_validation(spec_config):
    with pytest.raises(ValueError):
        minor_polynomial_coefficients(spec_config, 0)
    with pytest.raises(ValueError):
        minor_polynomial_coefficients(spec_config, 11)


def test_specialized_config_frame_layout():
    s = SpecializedConfig(*(Fraction(x) for x in (2, 3, 5, 7, 11, 13, 17, 19)))
    pts = s.config().points
    assert pts[0].coords() == (1, 0, 0)
    assert pts[3].coords() == (1, 1, 1)
    assert pts[4].coords() == (1, 2, 3)
    assert pts[7].coords() == (1, 17, 19)


# ---------------------------------------------------------------------------
# identity suite
# ---------------------------------------------------------------------------

def test_conic_expansion_suite_passes():
    report = run_identity_suite("conic-expansion", trials=100, seed=5, bound=30)
    assert report.status == "pass"
    assert report.trials == 100


def test_equivariance_d_suite_passes():
    report = run_identity_suite("equivariance-D", trials=20, seed=6, bound=8)
    assert report.status == "pass"


@pytest.mark.parametrize("name", sorted(IDENTITIES))
def test_every_identity_smoke(name):
    trials = 2 if name in ("cross-method", "multidegree-scaling") else 5
    report = run_identity_suite(name, trials=trials, seed=9, bound=9)
    assert report.status == "pass", report.to_json()


def test_suite_deterministic():
    a = run_identity_suite("minor-identities", trials=4, seed=12, bound=7)
    b = run_identity_suite("minor-identities", trials=4, seed=12, bound=7)
    assert a.to_json() == b.to_json()


def test_unknown_identity_rejected():
    with pytest.raises(ValueError):
        run_identity_suite("circle-squaring", trials=1, seed=1, bound=5)
    with pytest.raises(ValueError):
        run_identity_suite("conic-expansion", trials=0, seed=1, bound=5)


def test_report_shape():
    report = run_identity_suite("fano-cyclic", trials=3, seed=2, bound=10)
    data = report.to_json()
    assert data["identity"] == "fano-cyclic"
    assert data["seed"] == 2
    assert data["bound"] == 10
    assert data["failures"] == []
    assert data["status"] == "pass"


def test_rejection_sampling_caps_loudly():
    rng = random.Random(0)
    with pytest.raises(SamplingExhausted):
        random_point(rng, 0)  # only the zero triple is available


def test_nondegenerate_sampler_accepts_reasonable_bounds():
    c = random_nondegenerate_config(random.Random(3), 12)
    from ninthpoint.ninth import degeneracy_report

    assert degeneracy_report(c).clean
