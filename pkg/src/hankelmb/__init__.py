"""Zero-order Hankel transforms of even functions via Mellin-Barnes
contour integrals, validated against closed forms and an independent
oscillatory-quadrature oracle."""

from .asymptotics import (
    DerivativeTable, SeriesResult, a6_large_q,
    hankel0_odd_series, willis_j0_series, willis_j1_series,
)
from .coefficient_catalog import (
    EXAMPLES, CoefficientFn, a6_q_zero, a6_series_2f0, a6_series_psi,
    appendix_a_derivatives, closed_form, coef_a1, coef_a2, coef_a3,
    coef_a4, coef_a5, coef_a6, coef_a7, generating_function, get_coefficient,
)
from .complex_kernel import digamma_r, gamma_c, log_gamma_c
from .errors import (
    AsymptoticDivergenceError, ContourError, ConvergenceError,
    DomainError, GrowthError, PoleProximityError,
)
from .mellin_barnes import (
    ContourSpec, ContourWarning, GrowthProfile, TransformResult,
    auto_contour, estimate_growth, integrate_contour,
    theorem1_transform, theorem2_transform,
)
from .quadrature_oracle import RealResult, hankel0_direct, mellin_forward

__version__ = "0.1.0"
