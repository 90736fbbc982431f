"""Green function as a Gegenbauer series, optionally Abel-summed.

The coefficient of ``((lam + l)/lam) C_l^lam`` is ``g_l = 1/(a - l(n + l - 1))``,
with the annihilated degree (``l = 0`` for Poisson, ``l = L`` when resonant)
left out.  For ``n >= 4`` the pointwise series does not converge absolutely,
so by default the damped sums ``sum g_l r^l z_l`` are formed at several radii
and extrapolated to ``r = 1`` with Neville's scheme in ``h = 1 - r``.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import InternalError, ParameterError
from .evaluation import GreenEvaluation, Method, check_theta
from .gegenbauer import _recurrence_scalar, zonal_factors
from .params import HelmholtzParameter, Kind, SphereContext

DEFAULT_ABEL_RADII = (0.9, 0.99, 0.999)
# relative size of the last damped term kept in an Abel sum
_ABEL_CUTOFF = 1e-18


def series_coefficients(params: HelmholtzParameter, lmax: int) -> np.ndarray:
    """``g_l`` for ``l = 0..lmax``, zero at the omitted degree."""
    l = np.arange(lmax + 1)
    g = np.zeros(lmax + 1)
    if params.kind in (Kind.RESONANT, Kind.POISSON):
        L = params.L
        if L != int(L) or L < 0:
            raise InternalError(f"resonant parameter with non-integer L={L}")
        keep = l != int(L)
    else:
        keep = np.ones(lmax + 1, dtype=bool)
    g[keep] = 1.0 / params.multiplier(l[keep].astype(float))
    return g


def green_series_terms(ctx: SphereContext, params: HelmholtzParameter, t: float,
                       lmax: int) -> np.ndarray:
    """The raw terms ``g_l ((lam + l)/lam) C_l^lam(t)``, ``l = 0..lmax``."""
    if lmax < 0:
        return np.zeros(0)
    z = zonal_factors(ctx.lam, lmax) * _recurrence_scalar(ctx.lam, t, lmax)
    return series_coefficients(params, lmax) * z


def _abel_length(ctx, params, r, lmax):
    """Smallest K >= lmax with ``r^K |g_K| z_K(1)`` below the cutoff."""
    lam = ctx.lam

    def log_bound(k):
        log_pole = (math.log((lam + k) / lam) + math.lgamma(k + 2 * lam)
                    - math.lgamma(2 * lam) - math.lgamma(k + 1))
        return k * math.log(r) + log_pole - math.log(abs(params.multiplier(k)) or 1.0)

    k = max(lmax, 16)
    target = math.log(_ABEL_CUTOFF)
    while log_bound(k) > target:
        k = int(k * 1.1) + 1
    return k


def neville_at_zero(h: Sequence[float], y: Sequence[float]) -> np.ndarray:
    """Neville tableau of polynomial extrapolants to ``h = 0``.

    Returns the table ``P[i, j]``: the interpolant through points ``i..i+j``
    evaluated at zero.  ``P[0, -1]`` is the full-degree extrapolant.
    """
    h = np.asarray(h, dtype=float)
    m = len(h)
    P = np.full((m, m), np.nan)
    P[:, 0] = y
    for j in range(1, m):
        for i in range(m - j):
            P[i, j] = (h[i] * P[i + 1, j - 1] - h[i + j] * P[i, j - 1]) / (h[i] - h[i + j])
    return P


def green_series(ctx: SphereContext, params: HelmholtzParameter, theta: float,
                 lmax: int = 2000,
                 abel_radii: Sequence[float] = DEFAULT_ABEL_RADII) -> GreenEvaluation:
    """Evaluate G(cos theta) from its Gegenbauer series.

    With empty ``abel_radii`` this is the plain partial sum through ``lmax``
    and the error estimate is the size of the last term.  Otherwise each
    damped sum runs to ``max(lmax, K(r))`` terms, where ``K(r)`` makes the
    neglected terms negligible, and the result is the Neville extrapolant to
    ``r = 1``; the error estimate is the gap between the full-order extrapolant
    and the one through all radii but the outermost, plus the truncation bound.
    """
    theta = check_theta(theta)
    if lmax < 0:
        raise ParameterError("lmax must be non-negative")
    radii = [float(r) for r in abel_radii]
    t = math.cos(theta)

    if not radii:
        terms = green_series_terms(ctx, params, t, lmax)
        nz = np.nonzero(terms)[0]
        est = float(abs(terms[nz[-1]])) if len(nz) else 0.0
        return GreenEvaluation(float(np.sum(terms)), theta, Method.SERIES, est, lmax + 1)

    if len(radii) < 2:
        raise ParameterError("Abel summation needs at least two radii to extrapolate")
    if any(not 0.0 < r < 1.0 for r in radii) or any(b <= a for a, b in zip(radii, radii[1:])):
        raise ParameterError("abel_radii must be strictly increasing inside (0, 1)")

    K = _abel_length(ctx, params, radii[-1], lmax)
    terms = green_series_terms(ctx, params, t, K)
    l = np.arange(K + 1)
    sums = []
    for r in radii:
        damped = terms * np.exp(l * math.log(r))
        sums.append(float(np.sum(damped)))
    P = neville_at_zero([1.0 - r for r in radii], sums)
    value = P[0, -1]
    est = abs(P[0, -1] - P[0, -2]) + _ABEL_CUTOFF * len(radii)
    return GreenEvaluation(float(value), theta, Method.SERIES, float(est), K + 1)
