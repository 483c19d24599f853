"""Evaluation-code parameters on Jacobians of genus-2 curves over small
finite fields, certified by brute-force oracles."""

from .bounds import (
    Branch,
    CodeReport,
    Decomposition,
    code_params,
    distance_threshold,
    self_intersection_from_genus,
    support_bound,
    support_bound_bruteforce,
    weil_type_point_bound,
    within_genus_budget,
)
from .curves import (
    INFINITY,
    CurveModel,
    CurvePoint,
    PointCount,
    count_points,
    curve_points,
    validate_curve,
)
from .explore import SearchSpace, TableRow, analyze_curve, best_codes, enumerate_curves
from .fields import (
    FieldElement,
    FieldEmbedding,
    FiniteField,
    default_modulus,
    extend_field,
    field_from_order,
    lift_quadratic,
    make_field,
)
from .mumford import (
    IDENTITY,
    MumfordDivisor,
    TranslateExperiment,
    cantor_add,
    check_divisor,
    embed_point,
    enumerate_jacobian,
    in_theta,
    negate,
    scalar_mul,
    theta_set,
    translate_support_count,
    zero_sum_tuples,
)
from .weil import (
    FactorShape,
    SimplicityVerdict,
    Verdict,
    WeilData,
    WeilFactorization,
    classify_simplicity,
    extension_count,
    factor_weil,
    jacobian_order,
    poly_divides,
    serre_constant,
    weil_from_counts,
)

__version__ = "0.1.0"
