"""Spectral solver for zonal Helmholtz/Poisson problems and coefficient extraction.

A zonal function is stored by its coefficients ``c_l`` in the basis
``((lam + l)/lam) C_l^lam(cos theta)``.  The Laplace-Beltrami operator acts
on degree ``l`` as multiplication by ``-l(n + l - 1)``, so solving
``Delta* u + a u = f`` is a division by ``a - l(n + l - 1)`` per degree.  Inputs are band-limited,
so ``f`` is smooth and ``u`` is twice differentiable automatically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .errors import AccuracyError, CompatibilityError, InternalError, ParameterError
from .gegenbauer import gegenbauer_table
from .params import HelmholtzParameter, Kind, SphereContext
from .quadrature import gauss_gegenbauer

DEFAULT_EXTRACTION_NODES = 64


@dataclass(frozen=True)
class ZonalSpectrum:
    n: int
    coefficients: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=float)
        if c.ndim != 1 or not np.all(np.isfinite(c)):
            raise ParameterError("coefficients must be a finite 1-d array")
        object.__setattr__(self, "coefficients", c)

    @property
    def lmax(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def unit(cls, n: int, l: int, lmax: int | None = None) -> "ZonalSpectrum":
        c = np.zeros((l if lmax is None else lmax) + 1)
        c[l] = 1.0
        return cls(n, c)

    def evaluate(self, ctx: SphereContext, t) -> np.ndarray:
        """Synthesize the function at ``t = cos(theta)``."""
        table = gegenbauer_table(ctx.lam, t, self.lmax)
        factors = (ctx.lam + np.arange(self.lmax + 1)) / ctx.lam
        return np.tensordot(self.coefficients * factors, table, axes=1)


def _degrees(lmax):
    return np.arange(lmax + 1, dtype=float)


def solve_spectrum(ctx: SphereContext, params: HelmholtzParameter,
                   f: ZonalSpectrum) -> ZonalSpectrum:
    """Coefficients of ``u`` with ``Delta* u + a u = f``.

    The annihilated degree (``l = 0`` for Poisson, ``l = L`` for a resonant
    shift) must be absent from ``f``; its coefficient in ``u`` is set to zero.

    Raises
    ------
    CompatibilityError
        If ``f`` has a nonzero coefficient at the annihilated degree.
    """
    if f.n != ctx.n:
        raise ParameterError(f"spectrum is for n={f.n}, context for n={ctx.n}")
    c = f.coefficients
    mult = params.multiplier(_degrees(f.lmax))
    u = np.zeros_like(c)
    keep = np.ones(len(c), dtype=bool)
    skip = params.resonant_degree
    if skip is not None:
        if skip <= f.lmax:
            if c[skip] != 0.0:
                what = "mean of f must vanish" if skip == 0 else f"f has a mode at l = L = {skip}"
                raise CompatibilityError(
                    f"{params.kind.value}: {what} (c_{skip} = {c[skip]!r})")
            keep[skip] = False
    u[keep] = c[keep] / mult[keep]
    return ZonalSpectrum(ctx.n, u)


def apply_operator(ctx: SphereContext, a: float, u: ZonalSpectrum) -> ZonalSpectrum:
    """``Delta* u + a u`` in coefficient space."""
    l = _degrees(u.lmax)
    return ZonalSpectrum(ctx.n, (a - l * (ctx.n + l - 1)) * u.coefficients)


def gegenbauer_norms(lam: float, lmax: int) -> np.ndarray:
    """``h_l = int_{-1}^1 C_l^lam(t)^2 (1 - t^2)^(lam - 1/2) dt`` for ``l = 0..lmax``."""
    l = np.arange(lmax + 1)
    log_h = (math.log(math.pi) + (1 - 2 * lam) * math.log(2.0)
             + np.array([math.lgamma(k + 2 * lam) - math.lgamma(k + 1) for k in l])
             - np.log(l + lam) - 2 * math.lgamma(lam))
    return np.exp(log_h)


def _extraction_rule(ctx: SphereContext, nodes: int, rule: str):
    """Nodes ``theta_j`` and weights for ``int_0^pi F(theta) sin^(n-1)(theta) dtheta``.

    ``"gegenbauer"`` places Gauss-Gegenbauer nodes in ``t = cos(theta)``; it
    is exact for band-limited integrands.  ``"angular"`` places Gauss-Legendre
    nodes in ``u`` with ``theta = pi u^2``, which keeps high-order accuracy
    when ``F`` has the ``theta^(2-n)`` (or logarithmic) pole of a Green
    function at ``theta = 0``: in the angle variable the measure
    ``sin^(n-1)`` cancels the pole.
    """
    if rule == "gegenbauer":
        t, w = gauss_gegenbauer(ctx.lam, nodes)
        theta = np.arccos(t)
        return theta, np.asarray(w), lambda th: np.ones_like(th)
    if rule == "angular":
        # Gauss-Legendre in u on [0, 1] with theta = pi u^2; the map turns the
        # theta log(theta) endpoint term of even n into u^3 log(u)
        x, w = gauss_gegenbauer(0.5, nodes)
        u = 0.5 * (1.0 + np.asarray(x))
        theta = math.pi * u * u
        jac = math.pi * u * np.asarray(w)
        return theta, jac, lambda th: np.sin(th) ** (ctx.n - 1)
    raise ParameterError(f"unknown extraction rule {rule!r}")


def extract_green_coefficients(ctx: SphereContext, green_eval: Callable[[float], float],
                               degrees: Iterable[int], nodes: int | None = None,
                               rule: str = "angular") -> np.ndarray:
    """Coefficients ``g_l`` of ``((lam + l)/lam) C_l^lam`` in a zonal function.

    ``green_eval`` maps ``theta`` to a value (or to anything with a
    ``.value``) and is sampled once per node, so asking for many degrees
    costs no more evaluations than asking for one.

    Raises
    ------
    AccuracyError
        If a requested degree exceeds the rule's support, ``nodes < 2 l + 16``.
    """
    degrees = [int(l) for l in degrees]
    if not degrees:
        return np.zeros(0)
    if min(degrees) < 0:
        raise ParameterError("degrees must be non-negative")
    lmax = max(degrees)
    if nodes is None:
        nodes = max(DEFAULT_EXTRACTION_NODES, 2 * lmax + 16)
    if nodes < 2 * lmax + 16:
        raise AccuracyError(
            f"degree {lmax} exceeds the quadrature support of {nodes} nodes (need 2l+16)")
    theta, w, measure = _extraction_rule(ctx, nodes, rule)
    if not (np.all(np.isfinite(theta)) and np.all(theta > 0) and np.all(theta < math.pi)):
        raise InternalError("quadrature nodes must lie strictly inside (0, pi)")
    values = np.array([getattr(v, "value", v) for v in map(green_eval, theta)], dtype=float)
    table = gegenbauer_table(ctx.lam, np.cos(theta), lmax)
    weighted = w * measure(theta) * values
    projections = table[degrees] @ weighted
    norms = gegenbauer_norms(ctx.lam, lmax)[degrees]
    factors = (ctx.lam + np.array(degrees)) / ctx.lam
    return projections / (norms * factors)


def extract_green_coefficient(ctx: SphereContext, green_eval: Callable[[float], float],
                              l: int, nodes: int | None = None, rule: str = "angular") -> float:
    return float(extract_green_coefficients(ctx, green_eval, [l], nodes, rule)[0])


def exact_green_coefficient(params: HelmholtzParameter, l: int) -> float:
    """``1/(a - l(n + l - 1))``, or 0 at the omitted degree."""
    if params.kind in (Kind.RESONANT, Kind.POISSON) and l == params.resonant_degree:
        return 0.0
    return 1.0 / params.multiplier(l)
