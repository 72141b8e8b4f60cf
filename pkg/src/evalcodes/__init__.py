"""Weight hierarchies of evaluation codes over prime fields.

The package computes relative generalized Hamming weights of evaluation
codes through vanishing ideal degree computations, together with the
footprint lower bounds obtained from initial ideals, exact formulas for
codes on Cartesian point sets, and toric codes over hypersimplices.
"""

from .codes import (
    DEFAULT_BUDGET,
    EvaluationCode,
    GeneratorMatrix,
    WeightProfile,
    evaluate_space,
    next_to_minimal,
    standardize,
    support,
    weight_distribution,
)
from .errors import (
    BudgetExceededError,
    DimensionMismatchError,
    FieldMismatchError,
    NonInjectiveEvaluationError,
    NotZeroDimensionalError,
    ZeroPolynomialError,
)
from .families import (
    CartesianSpec,
    ExponentProfile,
    HypersimplexSpec,
    cartesian_code,
    cartesian_points,
    cartesian_problem,
    cartesian_rghw_formula,
    cartesian_space,
    linear_form_zero_count,
    reducible_zero_bound,
    squarefree_code,
    squarefree_zero_bound,
    toric_code,
    toric_deg1_weight,
    toric_min_distance_formula,
    toric_problem,
    torus_points,
)
from .field import FieldElement, PrimeField
from .groebner import (
    Footprint,
    GroebnerBasis,
    PointSet,
    box_degree,
    buchberger,
    degree_with_F,
    degree_zero_dim,
    emptiness_criteria,
    footprint,
    hilbert_affine,
    initial_ideal,
    monomial_footprint,
    normal_form,
    vanishing_ideal,
    variety_in_X,
)
from .poly import (
    GREVLEX,
    GRLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    PolySpace,
    divide,
    echelonize,
    format_polynomial,
    order_by_name,
)
from .weights import (
    RghwProblem,
    enumerate_candidates,
    gaussian_binomial,
    ghw,
    lead_set_difference,
    relative_footprint,
    rghw_definition_oracle,
    rghw_degree,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CartesianSpec",
    "DEFAULT_BUDGET",
    "DimensionMismatchError",
    "EvaluationCode",
    "ExponentProfile",
    "FieldElement",
    "FieldMismatchError",
    "Footprint",
    "GREVLEX",
    "GRLEX",
    "GeneratorMatrix",
    "GroebnerBasis",
    "HypersimplexSpec",
    "LEX",
    "MonomialOrder",
    "NonInjectiveEvaluationError",
    "NotZeroDimensionalError",
    "PointSet",
    "PolySpace",
    "Polynomial",
    "PrimeField",
    "RghwProblem",
    "WeightProfile",
    "ZeroPolynomialError",
    "box_degree",
    "buchberger",
    "cartesian_code",
    "cartesian_points",
    "cartesian_problem",
    "cartesian_rghw_formula",
    "cartesian_space",
    "degree_with_F",
    "degree_zero_dim",
    "divide",
    "echelonize",
    "emptiness_criteria",
    "enumerate_candidates",
    "evaluate_space",
    "footprint",
    "format_polynomial",
    "gaussian_binomial",
    "ghw",
    "hilbert_affine",
    "initial_ideal",
    "lead_set_difference",
    "linear_form_zero_count",
    "monomial_footprint",
    "next_to_minimal",
    "normal_form",
    "order_by_name",
    "reducible_zero_bound",
    "relative_footprint",
    "rghw_definition_oracle",
    "rghw_degree",
    "squarefree_code",
    "squarefree_zero_bound",
    "standardize",
    "support",
    "toric_code",
    "toric_deg1_weight",
    "toric_min_distance_formula",
    "toric_problem",
    "torus_points",
    "vanishing_ideal",
    "variety_in_X",
    "weight_distribution",
]
