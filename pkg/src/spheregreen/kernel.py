"""Poisson kernel of the unit ball restricted to S^n, and its tail brackets.

Everything is written in terms of ``1 - r`` and ``1 - t`` as well as ``r``
and ``t``: near the pole (``t -> 1``) and the boundary (``r -> 1``) the
denominator ``1 - 2rt + r^2 = (1 - r)^2 + 2r(1 - t)`` must not be formed by
cancellation.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import AccuracyError, DomainError, ParameterError
from .gegenbauer import _recurrence_scalar, zonal_at_pole, zonal_factors, zonal_sequence
from .params import SphereContext

DEFAULT_R_SWITCH = 0.5
_TAIL_CAP = 200_000


def _check_r(r):
    if np.any(np.asarray(r) < 0) or np.any(np.asarray(r) >= 1):
        raise DomainError("radius must satisfy 0 <= r < 1 (kernel is singular at r = 1)")


def _check_t(t):
    if np.any(np.abs(np.asarray(t)) > 1):
        raise DomainError("t = cos(theta) must lie in [-1, 1]")


def closed_form_unnormalized(lam, r, rc, omt):
    """``Sigma_n p_r`` from ``r``, ``rc = 1 - r`` and ``omt = 1 - t``."""
    den = rc * rc + 2.0 * r * omt
    return rc * (1.0 + r) / den ** (lam + 1.0)


def poisson_kernel_closed(ctx: SphereContext, r: float, t: float) -> float:
    """``(1 - r^2) / (Sigma_n (1 - 2rt + r^2)^((n+1)/2))``."""
    _check_r(r)
    _check_t(t)
    return float(closed_form_unnormalized(ctx.lam, r, 1.0 - r, 1.0 - t)) / ctx.sigma_n


def poisson_kernel_series(ctx: SphereContext, r: float, t: float, lmax: int) -> float:
    """Partial sum of ``sum_l r^l ((lam+l)/lam) C_l^lam(t)`` through ``lmax``, over ``Sigma_n``."""
    _check_r(r)
    _check_t(t)
    if lmax < 0:
        raise ParameterError("lmax must be non-negative")
    z = zonal_sequence(ctx, t, lmax)
    powers = float(r) ** np.arange(lmax + 1)
    return float(np.sum(powers * z)) / ctx.sigma_n


def kernel_tail_bracket(ctx: SphereContext, r: float, t: float, M: int,
                        lmax_tail: int | None = None, r_switch: float = DEFAULT_R_SWITCH,
                        tol: float = 1e-17) -> float:
    """``Sigma_n p_r(t) - sum_{l <= M} r^l ((lam+l)/lam) C_l^lam(t)``.

    For ``r <= r_switch`` the tail ``sum_{l > M}`` is summed directly, stopping
    once the next term's bound ``r^l ((lam+l)/lam) C_l^lam(1)`` falls below
    ``tol * (|sum| + 1e-300)``; this keeps full relative accuracy even though
    the result is ``O(r^(M+1))``.  Above the switch radius the closed form
    minus the partial sum is used.

    Raises
    ------
    AccuracyError
        If the tail needs more than ``lmax_tail`` terms.
    """
    _check_r(r)
    _check_t(t)
    if M < -1:
        raise ParameterError(f"M must be >= -1, got {M}")
    lam = ctx.lam
    r = float(r)
    t = float(t)
    if M == -1:
        return float(closed_form_unnormalized(lam, r, 1.0 - r, 1.0 - t))
    if r == 0.0:
        return 0.0
    if r > r_switch:
        z = zonal_sequence(ctx, t, M)
        partial = float(np.sum(r ** np.arange(M + 1) * z))
        return float(closed_form_unnormalized(lam, r, 1.0 - r, 1.0 - t)) - partial

    cap = _TAIL_CAP if lmax_tail is None else int(lmax_tail)
    c_prev, c_cur = 0.0, 1.0  # C_{-1}, C_0
    bound = 1.0  # C_l(1) = (2 lam)_l / l!
    rl = 1.0
    acc = 0.0
    l = 0
    while True:
        if l > M:
            acc += rl * (lam + l) / lam * c_cur
        l += 1
        c_prev, c_cur = c_cur, (2.0 * t * (l + lam - 1) * c_cur - (l + 2 * lam - 2) * c_prev) / l
        bound *= (2 * lam + l - 1) / l
        rl *= r
        if l > M + 1:
            next_bound = rl * (lam + l) / lam * bound
            if next_bound <= tol * (abs(acc) + 1e-300):
                return acc
            if l > cap:
                raise AccuracyError(
                    f"tail series needs more than lmax_tail={cap} terms at r={r}",
                    value=acc, estimate=next_bound)


class TailBracket:
    """Vectorized bracket ``Sigma_n p_r(t) - sum_{l <= M} r^l z_l(t)`` at a fixed angle.

    The zonal terms ``z_l(t)`` are computed once.  ``scaled(r)`` returns the
    bracket divided by ``r^(M+1)`` (tail mode, for ``r <= r_switch``) and
    ``full(r, rc)`` the bracket itself by subtraction (for larger ``r``).
    """

    def __init__(self, ctx: SphereContext, theta: float, M: int,
                 r_switch: float = DEFAULT_R_SWITCH, rel_tol: float = 1e-17):
        if M < -1:
            raise ParameterError(f"M must be >= -1, got {M}")
        self.ctx = ctx
        self.M = M
        self.r_switch = r_switch
        self.t = math.cos(theta)
        self.omt = 2.0 * math.sin(0.5 * theta) ** 2
        lmax = self._tail_length(ctx, M, r_switch, rel_tol)
        seq = _recurrence_scalar(ctx.lam, self.t, lmax)
        self.z = zonal_factors(ctx.lam, lmax) * seq
        # highest power first for np.polyval
        self._tail_coeffs = self.z[M + 1:][::-1].copy()
        self._head = self.z[:M + 1]

    @staticmethod
    def _tail_length(ctx, M, r_switch, rel_tol):
        first = M + 1
        n_try = 64
        while True:
            bounds = zonal_at_pole(ctx, first + n_try)
            scaled = bounds[first:] * r_switch ** np.arange(n_try + 1)
            small = np.nonzero(scaled <= rel_tol * scaled[0])[0]
            if len(small):
                return first + int(small[0]) + 1
            n_try *= 2

    @property
    def terms(self) -> int:
        return len(self.z)

    def scaled(self, r):
        return np.polyval(self._tail_coeffs, r)

    def full(self, r, rc):
        closed = closed_form_unnormalized(self.ctx.lam, r, rc, self.omt)
        if self.M < 0:
            return closed
        head = np.polyval(self._head[::-1], r)
        return closed - head
