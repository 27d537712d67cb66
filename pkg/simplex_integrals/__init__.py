"""simplex-integrals: closed-form integration of polynomials on simplices."""

from .config import Settings, get_settings
from .errors import (
    DegenerateSimplexError,
    DomainError,
    ExpressionSyntaxError,
    SimplexIntegralsError,
)
from .integrate import (
    LinearFormPower,
    RealExponentSum,
    WaringDecomposition,
    e_t,
    integrate_canonical,
    integrate_canonical_exact,
    integrate_canonical_xi,
    integrate_linear_form_power,
    integrate_many,
    integrate_real_exponents,
    integrate_scaled,
    integrate_scaled_real,
    integrate_simplex,
    integrate_waring,
    laplace_identity_check,
)
from .models import EvaluationPoint, IntegralResult, IntegrationMode, MonteCarloEstimate
from .oracle import (
    monomial_integral_oracle,
    monte_carlo_integral,
    polynomial_integral_oracle,
    sample_uniform,
)
from .poly import (
    HomogeneousPart,
    Polynomial,
    bombieri,
    evaluate,
    format_polynomial,
    from_bombieri,
    homogeneous_parts,
    parse,
)
from .simplex import (
    CanonicalSimplex,
    ScaledSimplex,
    Simplex,
    evaluation_point,
    evaluation_point_real,
    from_vertices,
    mapped_evaluation_points,
    pullback,
)
from .specialfn import gamma, log_gamma

__all__ = [
    "Settings",
    "get_settings",
    "SimplexIntegralsError",
    "ExpressionSyntaxError",
    "DegenerateSimplexError",
    "DomainError",
    "Polynomial",
    "HomogeneousPart",
    "parse",
    "format_polynomial",
    "homogeneous_parts",
    "bombieri",
    "from_bombieri",
    "evaluate",
    "CanonicalSimplex",
    "ScaledSimplex",
    "Simplex",
    "from_vertices",
    "pullback",
    "evaluation_point",
    "evaluation_point_real",
    "mapped_evaluation_points",
    "IntegralResult",
    "IntegrationMode",
    "EvaluationPoint",
    "MonteCarloEstimate",
    "LinearFormPower",
    "WaringDecomposition",
    "RealExponentSum",
    "integrate_canonical",
    "integrate_canonical_exact",
    "integrate_canonical_xi",
    "integrate_many",
    "integrate_scaled",
    "integrate_scaled_real",
    "integrate_linear_form_power",
    "e_t",
    "integrate_simplex",
    "integrate_waring",
    "integrate_real_exponents",
    "laplace_identity_check",
    "log_gamma",
    "gamma",
    "monomial_integral_oracle",
    "polynomial_integral_oracle",
    "sample_uniform",
    "monte_carlo_integral",
]
