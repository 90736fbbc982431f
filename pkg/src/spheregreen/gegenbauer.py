"""Gegenbauer polynomials C_l^lam(t) by forward three-term recurrence."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParameterError
from .params import SphereContext


@dataclass(frozen=True)
class GegenbauerSequence:
    lam: float
    t: float
    values: np.ndarray  # values[l] = C_l^lam(t), l = 0..lmax

    @property
    def lmax(self) -> int:
        return len(self.values) - 1


def _check(lam, t):
    if not lam > 0:
        raise ParameterError(f"Gegenbauer order must be positive, got {lam}")
    if np.any(np.abs(t) > 1):
        raise DomainError("Gegenbauer argument must lie in [-1, 1]")


def _recurrence_scalar(lam: float, t: float, lmax: int) -> np.ndarray:
    out = [0.0] * (lmax + 1)
    out[0] = 1.0
    if lmax >= 1:
        out[1] = 2.0 * lam * t
    c2, c1 = 1.0, out[1] if lmax >= 1 else 0.0
    two_t = 2.0 * t
    for l in range(2, lmax + 1):
        c = (two_t * (l + lam - 1) * c1 - (l + 2 * lam - 2) * c2) / l
        out[l] = c
        c2, c1 = c1, c
    return np.array(out)


def gegenbauer_table(lam: float, t, lmax: int) -> np.ndarray:
    """Return ``C_l^lam(t)`` for ``l = 0..lmax`` as rows of a ``(lmax+1, *t.shape)`` array."""
    t = np.asarray(t, dtype=float)
    _check(lam, t)
    if lmax < 0:
        raise ParameterError("lmax must be non-negative")
    out = np.empty((lmax + 1,) + t.shape)
    out[0] = 1.0
    if lmax >= 1:
        out[1] = 2.0 * lam * t
    for l in range(2, lmax + 1):
        out[l] = (2.0 * (l + lam - 1) * t * out[l - 1] - (l + 2 * lam - 2) * out[l - 2]) / l
    return out


def gegenbauer_eval(lam: float, t: float, lmax: int) -> GegenbauerSequence:
    """Evaluate ``C_0^lam(t), ..., C_lmax^lam(t)`` at a single point ``t``.

    Raises
    ------
    DomainError
        If ``|t| > 1``.
    ParameterError
        If ``lam <= 0`` or ``lmax < 0``.
    """
    t = float(t)
    _check(lam, t)
    if lmax < 0:
        raise ParameterError("lmax must be non-negative")
    return GegenbauerSequence(lam=lam, t=t, values=_recurrence_scalar(lam, t, int(lmax)))


def zonal_factors(lam: float, lmax: int) -> np.ndarray:
    """The normalization ``(lam + l)/lam`` for ``l = 0..lmax``."""
    return (lam + np.arange(lmax + 1)) / lam


def zonal_sequence(ctx: SphereContext, t: float, lmax: int) -> np.ndarray:
    """``((lam + l)/lam) C_l^lam(t)`` for ``l = 0..lmax``."""
    seq = gegenbauer_eval(ctx.lam, t, lmax)
    return zonal_factors(ctx.lam, lmax) * seq.values


def zonal_term(ctx: SphereContext, l: int, t: float) -> float:
    if l < 0:
        raise ParameterError(f"degree must be non-negative, got {l}")
    return float(zonal_sequence(ctx, t, l)[l])


def zonal_at_pole(ctx: SphereContext, lmax: int) -> np.ndarray:
    """Zonal terms at ``t = 1``, an upper bound for ``|zonal term|`` on [-1, 1]."""
    lam = ctx.lam
    l = np.arange(lmax + 1)
    # C_l^lam(1) = (2 lam)_l / l!
    ratio = np.ones(lmax + 1)
    ratio[1:] = (2 * lam + l[1:] - 1) / l[1:]
    return zonal_factors(lam, lmax) * np.cumprod(ratio)
