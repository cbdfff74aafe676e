"""Generalized toric codes over finite fields.

Construction of the codes C_U, their duals and multicyclic structure, and
minimum-distance engines.
"""

__version__ = "0.1.0"

from .errors import (
    BudgetExceeded,
    ContextMismatch,
    DimensionTooLarge,
    DivisionByZero,
    EmptyPolytope,
    EmptyU,
    GTCError,
    InvalidExponent,
    LengthMismatch,
    NotPrimePower,
    TooLarge,
    ZeroIdeal,
)
from .field import FiniteField, alpha_pow, make_field
from .exponents import (
    ExponentSet,
    OrderedH,
    Polytope,
    dual_set,
    enumerate_H,
    format_points,
    lattice_points,
    parse_points,
    reduce,
    reduce_set,
    sigma,
    sigma_fixed_count,
)
from .codes import (
    CodeSpec,
    Codeword,
    EvaluationMatrix,
    control_matrix,
    convolve,
    encode,
    ev_monomial,
    evaluate_polynomial,
    evaluation_matrix,
    generator_matrix,
    is_codeword,
    polytope_code,
    shift,
)
from .structure import DualityReport, dual_code, duality_report, ideal_to_U, inner_product_basis
from .distance import (
    DistanceResult,
    certify_lower_bound,
    certify_lower_bound_minors,
    macwilliams_transform,
    min_distance,
    min_distance_column_rank,
    min_distance_exhaustive,
    weight_distribution,
)
