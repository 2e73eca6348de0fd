"""Exact computations with initial ideals and initial algebras."""

from initalg.betti import (
    BettiTable,
    betti_comparison,
    graded_betti,
    projdim_and_reg,
)
from initalg.family import (
    FreenessReport,
    HomogenizedFamily,
    fiber,
    freeness_basis_check,
    homogenize_ideal,
)
from initalg.groebner import (
    AlgebraKernel,
    MonomialIdeal,
    ReducedGroebnerBasis,
    StepLimitExceeded,
    buchberger,
    divide,
    eliminate,
    initial_ideal,
    initial_ideal_weight,
    normal_form,
    presentation_kernel,
    quadratic_initial_certificate,
    s_polynomial,
    toric_kernel,
)
from initalg.hilbert import (
    HilbertSeries,
    compare_hilbert,
    gorenstein_symmetry_check,
    hilbert_function,
    hilbert_series_monomial,
    hilbert_series_subalgebra,
    krull_dim_monomial,
)
from initalg.orders import (
    BlockOrder,
    DegLex,
    EliminationOrder,
    ExtendedOrder,
    Lex,
    MonomialOrder,
    RevLex,
    WeightOrder,
    describe_order,
    leading_coeff,
    leading_monomial,
    leading_term,
    parse_order,
)
from initalg.poly import (
    Monomial,
    ParseError,
    PolyRing,
    Polynomial,
    RingMismatchError,
    Term,
    WeightVector,
    ZeroPolynomialError,
    format_poly,
    homogenize,
    initial_form,
    is_weight_homogeneous,
    parse_poly,
    specialize_t,
    weighted_degree,
)
from initalg.sagbi import (
    SagbiState,
    initial_algebra_gens,
    kernel_initial_check,
    sagbi_complete,
    sagbi_test,
    subduct,
    subduct_with_certificate,
)
from initalg.weights import (
    InfeasibleComparisons,
    find_weight,
    represent_order_by_weight,
    represent_sagbi_by_weight,
    verify_weight,
)

__all__ = [
    "AlgebraKernel",
    "BettiTable",
    "BlockOrder",
    "DegLex",
    "EliminationOrder",
    "ExtendedOrder",
    "FreenessReport",
    "HilbertSeries",
    "HomogenizedFamily",
    "InfeasibleComparisons",
    "Lex",
    "Monomial",
    "MonomialIdeal",
    "MonomialOrder",
    "ParseError",
    "PolyRing",
    "Polynomial",
    "ReducedGroebnerBasis",
    "RevLex",
    "RingMismatchError",
    "SagbiState",
    "StepLimitExceeded",
    "Term",
    "WeightOrder",
    "WeightVector",
    "ZeroPolynomialError",
    "betti_comparison",
    "buchberger",
    "compare_hilbert",
    "describe_order",
    "divide",
    "eliminate",
    "fiber",
    "find_weight",
    "format_poly",
    "freeness_basis_check",
    "gorenstein_symmetry_check",
    "graded_betti",
    "hilbert_function",
    "hilbert_series_monomial",
    "hilbert_series_subalgebra",
    "homogenize",
    "homogenize_ideal",
    "initial_algebra_gens",
    "initial_form",
    "initial_ideal",
    "initial_ideal_weight",
    "is_weight_homogeneous",
    "kernel_initial_check",
    "krull_dim_monomial",
    "leading_coeff",
    "leading_monomial",
    "leading_term",
    "normal_form",
    "parse_order",
    "parse_poly",
    "presentation_kernel",
    "projdim_and_reg",
    "quadratic_initial_certificate",
    "represent_order_by_weight",
    "represent_sagbi_by_weight",
    "s_polynomial",
    "sagbi_complete",
    "sagbi_test",
    "specialize_t",
    "subduct",
    "subduct_with_certificate",
    "toric_kernel",
    "verify_weight",
    "weighted_degree",
]
