"""Quadrature rules used by the Green-function evaluators.

``tanh_sinh`` integrates over [0, 1] and hands the integrand both the node
``x`` and its complement ``1 - x``, each computed without cancellation, so
that algebraic endpoint singularities at either end can be evaluated to full
relative precision.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate, linalg, special

from .errors import AccuracyError, ParameterError

# sinh(t_max) * pi = 700 keeps both x and 1 - x above the double underflow limit
_T_MAX = math.asinh(700.0 / math.pi)
_TOL_FLOOR = 1e-14


class Scheme(enum.Enum):
    TANH_SINH = "tanh-sinh"
    GAUSS_KRONROD = "gauss-kronrod"


@dataclass(frozen=True)
class QuadratureConfig:
    scheme: Scheme = Scheme.TANH_SINH
    tol: float = 1e-10
    max_levels: int = 8
    r_switch: float = 0.5

    def __post_init__(self):
        if not self.tol >= _TOL_FLOOR:
            raise AccuracyError(
                f"tolerance {self.tol:g} is below the attainable floor {_TOL_FLOOR:g}")
        if not 0.0 < self.r_switch < 1.0:
            raise ParameterError(f"r_switch must lie in (0, 1), got {self.r_switch}")
        if self.max_levels < 1:
            raise ParameterError("max_levels must be at least 1")

    def replace(self, **changes) -> "QuadratureConfig":
        return type(self)(**{**self.__dict__, **changes})


@dataclass(frozen=True)
class QuadResult:
    value: complex | float
    error: float
    evaluations: int
    converged: bool


Integrand = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _nodes(h: float, odd_only: bool):
    j_max = int(math.ceil(_T_MAX / h))
    j = np.arange(-j_max, j_max + 1)
    if odd_only:
        j = j[j % 2 != 0]
    t = j * h
    s = math.pi * np.sinh(t)
    x = special.expit(s)
    xc = special.expit(-s)
    w = math.pi * np.cosh(t) * x * xc
    keep = (x > 0) & (xc > 0)
    return x[keep], xc[keep], w[keep]


def tanh_sinh(f: Integrand, tol: float = 1e-10, max_levels: int = 8,
              min_levels: int = 3) -> QuadResult:
    """Double-exponential quadrature of ``f(x, 1 - x)`` over (0, 1).

    The step is halved level by level, reusing earlier nodes.  The error
    estimate is the change between the last two levels; iteration stops once
    it drops below ``tol * max(1, |value|)``.
    """
    h = 1.0
    x, xc, w = _nodes(h, odd_only=False)
    total = np.sum(w * f(x, xc))
    evaluations = len(x)
    value = h * total
    error = math.inf
    for level in range(1, max_levels + 1):
        h /= 2
        x, xc, w = _nodes(h, odd_only=True)
        total = total + np.sum(w * f(x, xc))
        evaluations += len(x)
        new = h * total
        error = float(abs(new - value))
        value = new
        if not np.isfinite(value):
            raise AccuracyError("integrand produced non-finite values", value, math.inf)
        if level >= min_levels and error <= tol * max(1.0, abs(value)):
            return QuadResult(value, error, evaluations, True)
    return QuadResult(value, error, evaluations, False)


def gauss_kronrod(f: Integrand, tol: float = 1e-10, max_levels: int = 8) -> QuadResult:
    """Adaptive Gauss-Kronrod (QUADPACK) on (0, 1) with the same integrand convention."""
    probe = f(np.array([0.5]), np.array([0.5]))
    is_complex = np.iscomplexobj(probe)

    def scalar(x):
        return f(np.array([x]), np.array([1.0 - x]))[0]

    result = integrate.quad(scalar, 0.0, 1.0, epsabs=tol, epsrel=tol,
                            limit=50 * max_levels, full_output=True,
                            complex_func=is_complex)
    value, error, info = result[:3]
    if is_complex:
        parts = (info["real"], info["imag"])
        neval = sum(p[0]["neval"] for p in parts)
        converged = all(len(p) == 1 for p in parts)
    else:
        neval = info["neval"]
        converged = len(result) == 3
    error = float(abs(error))
    return QuadResult(value, error, int(neval),
                      converged and error <= tol * max(1.0, abs(value)))


def integrate01(f: Integrand, qc: QuadratureConfig, max_levels: int | None = None) -> QuadResult:
    levels = qc.max_levels if max_levels is None else max_levels
    if qc.scheme is Scheme.TANH_SINH:
        return tanh_sinh(f, qc.tol, levels)
    return gauss_kronrod(f, qc.tol, levels)


@functools.lru_cache(maxsize=64)
def _gauss_gegenbauer(lam: float, npts: int):
    k = np.arange(1, npts, dtype=float)
    off = np.sqrt(k * (k + 2 * lam - 1) / (4 * (k + lam) * (k + lam - 1)))
    nodes, vecs = linalg.eigh_tridiagonal(np.zeros(npts), off)
    mu0 = math.sqrt(math.pi) * math.exp(math.lgamma(lam + 0.5) - math.lgamma(lam + 1))
    weights = mu0 * vecs[0] ** 2
    # the rule is symmetric; averaging mirror pairs removes eigensolver asymmetry
    nodes = 0.5 * (nodes - nodes[::-1])
    weights = 0.5 * (weights + weights[::-1])
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_gegenbauer(lam: float, npts: int) -> tuple[np.ndarray, np.ndarray]:
    """Golub-Welsch nodes and weights for the weight ``(1 - t^2)^(lam - 1/2)`` on [-1, 1].

    The rule is exact for polynomials of degree up to ``2 * npts - 1``.
    ``lam = 1/2`` gives the Gauss-Legendre rule.
    """
    if not lam > 0:
        raise ParameterError(f"Gegenbauer order must be positive, got {lam}")
    if npts < 1:
        raise ParameterError("need at least one node")
    return _gauss_gegenbauer(float(lam), int(npts))
