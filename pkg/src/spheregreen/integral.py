"""Green function via a single integral over the Poisson-kernel radius.

For ``a = L(n + L - 1)`` the coefficients ``g_l = 1/((L - l)(n + L + l - 1))``
are, for every ``l > L0``, the moments

    1/(n + 2L - 1) * int_0^1 (r^(n+L-2) - r^(-L-1)) r^l dr.

Summing against the zonal terms turns the series tail into an integral of the
Poisson kernel with its first ``M + 1`` terms removed, ``M = L0`` in the
non-resonant case and ``M = L`` in the resonant one (where the annihilated
degree is simply skipped).  The finitely many leading degrees are added back
explicitly.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import AccuracyError, ExcludedParameter, PreconditionError, UnsupportedParameter
from .evaluation import GreenEvaluation, Method, check_theta
from .gegenbauer import zonal_sequence
from .kernel import TailBracket
from .params import HelmholtzParameter, Kind, SphereContext
from .quadrature import QuadratureConfig, integrate01
from .series import series_coefficients

SMALL_ANGLE = math.pi / 12
SMALL_ANGLE_EXTRA_LEVELS = 2


def power_difference(r, rc, p, q):
    """``r^p - r^q`` without cancellation as ``r -> 1`` (``rc = 1 - r``)."""
    r, rc = np.broadcast_arrays(np.asarray(r, dtype=float), np.asarray(rc, dtype=float))
    near_one = rc < 0.5
    log_r = np.empty(np.broadcast(r, rc).shape)
    log_r[near_one] = np.log1p(-rc[near_one])
    log_r[~near_one] = np.log(r[~near_one])
    # factor out the smaller power so the expm1 argument is never positive
    if p >= q:
        return np.exp(q * log_r) * np.expm1((p - q) * log_r)
    return -np.exp(p * log_r) * np.expm1((q - p) * log_r)


def check_integral_params(params: HelmholtzParameter) -> None:
    if params.kind is Kind.COMPLEX_L:
        raise UnsupportedParameter(
            f"a={params.a} < -(n-1)^2/4 gives complex L; only the series route handles it")
    if params.excluded:
        raise ExcludedParameter(
            f"L = (1-n)/2 = {params.L} is excluded from the integral formula (L != (1-n)/2)")


def subtraction_degree(params: HelmholtzParameter) -> int:
    """Highest degree removed from the Poisson kernel: ``L0``, or ``L`` when resonant.

    Any ``L0 < 0`` removes nothing and is reported as -1.
    """
    if params.kind in (Kind.RESONANT, Kind.POISSON):
        return int(params.L)
    return max(params.L0, -1)


def _integrand_factory(ctx: SphereContext, params: HelmholtzParameter, theta: float,
                       r_switch: float):
    M = subtraction_degree(params)
    bracket = TailBracket(ctx, theta, M, r_switch)
    n, L = ctx.n, params.L
    p, q = n + L - 2, -L - 1

    def f(r, rc):
        out = np.empty_like(r)
        tail = r <= r_switch
        if M >= 0 and np.any(tail):
            rt = r[tail]
            # bracket = r^(M+1) * scaled; fold that power into the prefactor
            out[tail] = power_difference(rt, rc[tail], p + M + 1, q + M + 1) * bracket.scaled(rt)
        else:
            tail[:] = False
        head = ~tail
        if np.any(head):
            out[head] = power_difference(r[head], rc[head], p, q) * bracket.full(r[head], rc[head])
        return out

    return f, bracket


def green_integrand(ctx: SphereContext, params: HelmholtzParameter, r, t,
                    r_switch: float = 0.5):
    """``(r^(n+L-2) - r^(-L-1))`` times the Poisson kernel with degrees ``<= M`` removed."""
    check_integral_params(params)
    r = np.atleast_1d(np.asarray(r, dtype=float))
    if np.any(r <= 0) or np.any(r >= 1):
        raise PreconditionError("the integrand is defined for 0 < r < 1")
    theta = math.acos(max(-1.0, min(1.0, float(t))))
    f, _ = _integrand_factory(ctx, params, theta, r_switch)
    out = f(r, 1.0 - r)
    return out if out.size > 1 else float(out[0])


def leading_sum(ctx: SphereContext, params: HelmholtzParameter, t: float) -> float:
    """``sum_{l <= M, l != L} g_l z_l(t)``; empty when ``M < 0`` or ``L = 0``."""
    M = subtraction_degree(params)
    if M < 0:
        return 0.0
    return float(np.sum(series_coefficients(params, M) * zonal_sequence(ctx, t, M)))


def green_integral(ctx: SphereContext, params: HelmholtzParameter, theta: float,
                   qc: QuadratureConfig | None = None) -> GreenEvaluation:
    """Evaluate G(cos theta) by the single-integral formula.

    Raises
    ------
    AccuracyError
        When the quadrature misses ``qc.tol``; the best value and estimate
        are attached.
    """
    qc = qc or QuadratureConfig()
    theta = check_theta(theta)
    check_integral_params(params)
    n, L = ctx.n, params.L
    f, bracket = _integrand_factory(ctx, params, theta, qc.r_switch)
    levels = qc.max_levels + (SMALL_ANGLE_EXTRA_LEVELS if theta < SMALL_ANGLE else 0)
    res = integrate01(f, qc, max_levels=levels)
    scale = 1.0 / (n + 2 * L - 1)
    value = leading_sum(ctx, params, math.cos(theta)) + scale * float(np.real(res.value))
    error = abs(scale) * res.error
    if not res.converged:
        raise AccuracyError(
            f"quadrature missed tol={qc.tol:g} at theta={theta} (estimate {error:.3g})",
            value=value, estimate=error)
    return GreenEvaluation(value, theta, Method.INTEGRAL, error, res.evaluations)


def moment_identity(ctx: SphereContext, L: float, l: int,
                    qc: QuadratureConfig | None = None) -> tuple[float, float]:
    """Quadrature and closed form of ``1/(n+2L-1) int_0^1 (r^(n+L-2) - r^(-L-1)) r^l dr``.

    Both equal ``1/((L - l)(n + L + l - 1))`` for ``l > L0``.
    """
    qc = qc or QuadratureConfig(tol=1e-13)
    n = ctx.n
    if L == int(L):
        raise PreconditionError(f"L must not be an integer, got {L}")
    if abs(L - (1 - n) / 2) <= 1e-12 * n:
        raise ExcludedParameter(f"L = (1-n)/2 is excluded (L != (1-n)/2)")
    L0 = max(math.floor(L), math.floor(1 - n - L))
    if l <= L0:
        raise PreconditionError(f"identity needs l > L0 = {L0}, got l = {l}")
    p, q = n + L - 2 + l, -L - 1 + l
    res = integrate01(lambda r, rc: power_difference(r, rc, p, q), qc)
    if not res.converged:
        raise AccuracyError("moment quadrature did not converge", res.value, res.error)
    quad = float(res.value) / (n + 2 * L - 1)
    exact = 1.0 / ((L - l) * (n + L + l - 1))
    return quad, exact
