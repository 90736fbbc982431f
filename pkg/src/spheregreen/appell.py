"""Appell F1 and the four-term closed form of G for ``1 - n < L < 0``.

Two routes to F1 are provided: the defining double series (interior of the
unit bidisk only) and the Euler-type integral

    int_0^1 u^(alpha-1) (1-u)^(gamma-alpha-1) (1-ux)^(-beta) (1-uy)^(-beta')
        = Gamma(gamma-alpha) Gamma(alpha) / Gamma(gamma) * F1(alpha; beta, beta'; gamma; x, y),

which stays convergent on the boundary ``|x| = |y| = 1`` away from ``x = 1``.
The Green function uses the integral route at ``x = e^{i theta}``,
``y = e^{-i theta}``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import AccuracyError, DomainError, ExcludedParameter, InternalError, UnsupportedParameter
from .evaluation import GreenEvaluation, Method, check_theta
from .params import HelmholtzParameter, Kind, SphereContext
from .quadrature import QuadratureConfig, QuadResult, integrate01

_REALNESS_TOL = 1e-10


@dataclass(frozen=True)
class F1Arguments:
    alpha: complex
    beta: complex
    beta_prime: complex
    gamma: complex
    x: complex
    y: complex

    def swapped(self) -> "F1Arguments":
        return F1Arguments(self.alpha, self.beta_prime, self.beta, self.gamma, self.y, self.x)


def _pochhammer_ratios(start, x, count):
    """``prod_{k<m} (start + k) x / (k + 1)`` for ``m = 0..count-1``, i.e. ``(start)_m x^m / m!``."""
    k = np.arange(count - 1)
    factors = (start + k) * x / (k + 1)
    return np.concatenate(([1.0 + 0j], np.cumprod(factors)))


def f1_double_series(args: F1Arguments, tol: float = 1e-16, max_order: int = 4096) -> complex:
    """Sum the double series of F1 in shells of constant total order ``m + k``.

    With ``A_N = (alpha)_N / (gamma)_N``, ``B_m = (beta)_m x^m / m!`` and
    ``B'_k = (beta')_k y^k / k!`` the order-``N`` shell is ``A_N (B * B')_N``,
    a discrete convolution.  Summation stops once four consecutive shells are
    below ``tol`` relative to the running sum.
    """
    x, y = complex(args.x), complex(args.y)
    if abs(x) >= 1 or abs(y) >= 1:
        raise DomainError("the double series needs |x| < 1 and |y| < 1")
    order = 64
    while True:
        count = min(order, max_order + 1)
        k = np.arange(count - 1)
        ratio = np.concatenate(([1.0 + 0j], np.cumprod((args.alpha + k) / (args.gamma + k))))
        bx = _pochhammer_ratios(args.beta, x, count)
        by = _pochhammer_ratios(args.beta_prime, y, count)
        shells = ratio * np.convolve(bx, by)[:count]
        partial = np.cumsum(shells)
        small = np.abs(shells) <= tol * np.maximum(np.abs(partial), 1e-300)
        run = np.convolve(small.astype(int), np.ones(4, dtype=int), mode="valid") == 4
        hits = np.nonzero(run)[0]
        if len(hits):
            return complex(partial[hits[0] + 3])
        if count > max_order:
            raise AccuracyError(f"F1 double series not converged by order {max_order}",
                                value=complex(partial[-1]), estimate=float(abs(shells[-1])))
        order *= 2


def _beta_normalization(alpha, gamma):
    return special.gamma(gamma) / (special.gamma(gamma - alpha) * special.gamma(alpha))


def _f1_quadrature(args: F1Arguments, qc: QuadratureConfig) -> QuadResult:
    alpha, gamma = complex(args.alpha), complex(args.gamma)
    if not 0 < alpha.real < gamma.real:
        raise DomainError("the integral representation needs 0 < Re(alpha) < Re(gamma)")
    x, y = complex(args.x), complex(args.y)
    if x == 1 or y == 1:
        raise DomainError("x = 1 (theta = 0) makes the F1 integral diverge")
    one_minus_x, one_minus_y = 1 - x, 1 - y

    def f(u, uc):
        # 1 - u x = (1 - u) + u (1 - x), free of cancellation near u = 1
        return (u ** (alpha - 1) * uc ** (gamma - alpha - 1)
                * (uc + u * one_minus_x) ** (-args.beta)
                * (uc + u * one_minus_y) ** (-args.beta_prime))

    return integrate01(f, qc)


def f1_integral(args: F1Arguments, qc: QuadratureConfig | None = None) -> complex:
    """F1 from its Euler integral; valid on the boundary ``|x| = 1``, ``x != 1``."""
    qc = qc or QuadratureConfig()
    res = _f1_quadrature(args, qc)
    norm = _beta_normalization(complex(args.alpha), complex(args.gamma))
    if not res.converged:
        raise AccuracyError("F1 integral quadrature did not converge",
                            value=complex(norm * res.value), estimate=float(abs(norm) * res.error))
    return complex(norm * res.value)


def appell_exponents(ctx: SphereContext, L: float) -> list[tuple[float, int]]:
    """``(alpha, sign)`` for the four F1 terms of the closed form."""
    n = ctx.n
    return [(n + L - 1, +1), (n + L + 1, -1), (-L, -1), (-L + 2, +1)]


def check_appell_params(ctx: SphereContext, params: HelmholtzParameter) -> None:
    n = ctx.n
    if params.kind is Kind.COMPLEX_L or not 1 - n < params.L < 0:
        raise UnsupportedParameter(
            f"the F1 closed form needs 1-n < L < 0 (n={n}), got L={params.L}")
    if params.excluded:
        raise ExcludedParameter(
            f"L = (1-n)/2 = {params.L} is excluded from the closed form (L != (1-n)/2)")


def appell_combination(ctx: SphereContext, params: HelmholtzParameter, theta: float,
                       qc: QuadratureConfig | None = None) -> tuple[complex, float, int]:
    """Complex four-term F1 combination, its error estimate and node count.

    Each term is ``F1(alpha; lam+1, lam+1; alpha+1; e^{i theta}, e^{-i theta}) / alpha``,
    i.e. ``int_0^1 r^(alpha-1) (1 - 2r cos theta + r^2)^(-(lam+1)) dr``.
    """
    qc = qc or QuadratureConfig()
    theta = check_theta(theta)
    check_appell_params(ctx, params)
    beta = ctx.lam + 1
    x = cmath.exp(1j * theta)
    total = 0j
    error = 0.0
    work = 0
    for alpha, sign in appell_exponents(ctx, params.L):
        args = F1Arguments(alpha, beta, beta, alpha + 1, x, x.conjugate())
        res = _f1_quadrature(args, qc)
        if not res.converged:
            raise AccuracyError(f"F1 term alpha={alpha} did not converge at theta={theta}")
        # Gamma(alpha + 1) / (Gamma(1) Gamma(alpha)) = alpha, so F1 / alpha is the bare integral
        total += sign * res.value
        error += res.error
        work += res.evaluations
    scale = 1.0 / (ctx.n + 2 * params.L - 1)
    return total * scale, error * abs(scale), work


def green_appell(ctx: SphereContext, params: HelmholtzParameter, theta: float,
                 qc: QuadratureConfig | None = None) -> GreenEvaluation:
    value, error, work = appell_combination(ctx, params, theta, qc)
    if abs(value.imag) > _REALNESS_TOL * max(1.0, abs(value.real)):
        raise InternalError(f"F1 combination is not real: imaginary part {value.imag:.3g}")
    return GreenEvaluation(float(value.real), float(theta), Method.APPELL, error, work)
