"""Exact computation and certification of the ninth base point of the
pencil of cubics through eight plane points, with a randomized identity
verifier and the min-plus (tropical) analogue of the formulas."""

from .linalg import RatMatrix, ShapeError, ff_determinant, matrix_rank, primitive_vector, right_nullspace
from .projective import (
    Config8,
    DegenerateCrossRatioError,
    ProjPoint,
    ProjTransform,
    apply_transform,
    bracket,
    conic_bracket_expansion,
    conic_det,
    cross_ratio_conics,
    cross_ratio_lines,
    point,
    singular_cubic_bracket_expansion,
    singular_cubic_det,
)
from .ninth import (
    CBIngredients,
    Certification,
    Cubic,
    DegeneracyReport,
    DegenerateConfigError,
    FanoResult,
    FanoTuple,
    NinthPointResult,
    canonical_point,
    certify_p9,
    cubic_pencil_basis,
    degeneracy_report,
    fano_monomial,
    ingredients,
    ninth_point,
    p9_cross_ratio,
    p9_determinantal,
    p9_fano,
    p9_raw_vector,
    p9_reduced,
)
from .verify import SpecializedConfig, VerifyReport, cofactors_A, run_identity_suite
from .tropical import (
    TropConfig,
    TropDetResult,
    padic_valuation,
    tropical_determinant,
    tropical_p9,
    valuation_agreement,
)
from .newton import newton_support, newton_vertex_count

__version__ = "0.1.0"
