"""Green functions of the Helmholtz and Poisson equations on the unit sphere S^n.

Three evaluation routes are provided and cross-check each other:

* :func:`green_series` -- the Gegenbauer series, Abel-summed;
* :func:`green_integral` -- a single radial integral of the Poisson kernel;
* :func:`green_appell` -- a four-term Appell F1 closed form (``1 - n < L < 0``).
"""

from .appell import F1Arguments, f1_double_series, f1_integral, green_appell
from .errors import (AccuracyError, CompatibilityError, DimensionError, DomainError,
                     ExcludedParameter, GreenError, InternalError, ParameterError,
                     PreconditionError, UnsupportedParameter)
from .evaluation import GreenEvaluation, Method
from .gegenbauer import GegenbauerSequence, gegenbauer_eval, zonal_term
from .integral import green_integral, green_integrand, moment_identity
from .kernel import kernel_tail_bracket, poisson_kernel_closed, poisson_kernel_series
from .params import HelmholtzParameter, Kind, SphereContext, make_context, params_from_a, params_from_L
from .quadrature import QuadratureConfig, Scheme
from .series import green_series
from .solver import (ZonalSpectrum, apply_operator, extract_green_coefficient,
                     extract_green_coefficients, solve_spectrum)

__all__ = [
    "AccuracyError", "CompatibilityError", "DimensionError", "DomainError", "ExcludedParameter",
    "F1Arguments", "GegenbauerSequence", "GreenError", "GreenEvaluation", "HelmholtzParameter",
    "InternalError", "Kind", "Method", "ParameterError", "PreconditionError", "QuadratureConfig",
    "Scheme", "SphereContext", "UnsupportedParameter", "ZonalSpectrum", "apply_operator",
    "extract_green_coefficient", "extract_green_coefficients", "f1_double_series", "f1_integral",
    "gegenbauer_eval", "green_appell", "green_integral", "green_integrand", "green_series",
    "kernel_tail_bracket", "make_context", "moment_identity", "params_from_L", "params_from_a",
    "poisson_kernel_closed", "poisson_kernel_series", "solve_spectrum", "zonal_term",
]
