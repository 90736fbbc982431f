"""Dimensional constants of S^n and the algebra linking a, L, L' and L0.

The Helmholtz shift ``a`` is parametrized as ``a = L(n + L - 1)``.  Both roots
of that quadratic describe the same operator; this module fixes a principal
root, the truncation index ``L0 = max(floor(L), floor(L'))`` and the
resonance class that decides which evaluation formula applies.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DimensionError, ParameterError

DEFAULT_RESONANCE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SphereContext:
    """Dimension ``n`` of the sphere S^n with its Gegenbauer order and area."""

    n: int
    lam: float
    sigma_n: float

    @property
    def lambda_(self) -> float:
        return self.lam


def make_context(n: int) -> SphereContext:
    if int(n) != n:
        raise DimensionError(f"dimension must be an integer, got {n!r}")
    n = int(n)
    if n < 2:
        raise DimensionError(f"need n >= 2, got n={n}")
    sigma = 2.0 * math.pi ** ((n + 1) / 2) / math.gamma((n + 1) / 2)
    return SphereContext(n=n, lam=(n - 1) / 2, sigma_n=sigma)


class Kind(enum.Enum):
    POISSON = "Poisson"
    NON_RESONANT = "NonResonant"
    RESONANT = "Resonant"
    COMPLEX_L = "ComplexL"


@dataclass(frozen=True)
class HelmholtzParameter:
    """Spectral shift ``a`` together with its root pair and classification.

    For ``kind == COMPLEX_L`` the roots are complex conjugates; ``L`` and
    ``L_prime`` then both hold the common real part ``(1 - n)/2`` and only
    the series evaluator accepts the parameter.
    """

    n: int
    a: float
    L: float
    L_prime: float
    L0: int
    kind: Kind

    @property
    def excluded(self) -> bool:
        """True when ``L = (1 - n)/2``, the double root left out of the integral formula."""
        if self.kind is Kind.COMPLEX_L:
            return False
        return abs(self.L - (1 - self.n) / 2) <= 1e-12 * self.n

    @property
    def resonant_degree(self) -> int | None:
        """Degree of the annihilated mode (0 for Poisson), or None."""
        if self.kind in (Kind.RESONANT, Kind.POISSON):
            return int(self.L)
        return None

    def multiplier(self, l):
        """``a - l(n + l - 1)``, the symbol of the operator on degree ``l``."""
        return self.a - l * (self.n + l - 1)


def _truncation_index(L: float, L_prime: float) -> int:
    return max(math.floor(L), math.floor(L_prime))


def _nearest_degree(x: float, tol: float) -> int | None:
    k = round(x)
    if k >= 0 and abs(x - k) <= tol:
        return int(k)
    return None


def _resonant(ctx: SphereContext, k: int) -> HelmholtzParameter:
    n = ctx.n
    kind = Kind.POISSON if k == 0 else Kind.RESONANT
    return HelmholtzParameter(
        n=n, a=float(k * (n + k - 1)), L=float(k), L_prime=float(1 - n - k),
        L0=_truncation_index(k, 1 - n - k), kind=kind,
    )


def params_from_a(ctx: SphereContext, a: float,
                  resonance_tolerance: float = DEFAULT_RESONANCE_TOLERANCE) -> HelmholtzParameter:
    """Classify ``a`` and pick the principal root ``L >= L'``.

    ``L = 0`` at ``a = 0``, ``L > 0`` for ``a > 0`` and both roots negative on
    ``-(n-1)^2/4 <= a < 0``.  Values of ``L`` within ``resonance_tolerance`` of
    a non-negative integer are snapped onto it, and ``a`` is replaced by the
    exact eigenvalue so that ``a = L(n + L - 1)`` keeps holding.
    """
    if not resonance_tolerance > 0:
        raise ParameterError("resonance_tolerance must be positive")
    a = float(a)
    if not math.isfinite(a):
        raise ParameterError(f"a must be finite, got {a}")
    n = ctx.n
    if a == 0.0:
        return _resonant(ctx, 0)
    disc = (n - 1) ** 2 + 4.0 * a
    if disc < 0:
        half = (1 - n) / 2
        return HelmholtzParameter(n=n, a=a, L=half, L_prime=half,
                                  L0=math.floor(half), kind=Kind.COMPLEX_L)
    # cancellation-free form of (-(n-1) + sqrt(disc))/2
    L = 2.0 * a / ((n - 1) + math.sqrt(disc))
    k = _nearest_degree(L, resonance_tolerance)
    if k is not None:
        return _resonant(ctx, k)
    L_prime = 1 - n - L
    return HelmholtzParameter(n=n, a=a, L=L, L_prime=L_prime,
                              L0=_truncation_index(L, L_prime), kind=Kind.NON_RESONANT)


def params_from_L(ctx: SphereContext, L: float,
                  resonance_tolerance: float = DEFAULT_RESONANCE_TOLERANCE) -> HelmholtzParameter:
    """Build the parameter from a root ``L`` of ``a = L(n + L - 1)``.

    A non-resonant ``L`` is kept as given, even when it is the smaller root;
    the integral formula is symmetric under ``L <-> L'`` and callers use that
    to cross-check it.  A resonant root (either ``L`` or ``L'`` a non-negative
    integer) is canonicalized to the non-negative one.
    """
    L = float(L)
    if not math.isfinite(L):
        raise ParameterError(f"L must be finite, got {L}")
    n = ctx.n
    L_prime = 1 - n - L
    for root in (L, L_prime):
        k = _nearest_degree(root, resonance_tolerance)
        if k is not None:
            return _resonant(ctx, k)
    return HelmholtzParameter(n=n, a=L * (n + L - 1), L=L, L_prime=L_prime,
                              L0=_truncation_index(L, L_prime), kind=Kind.NON_RESONANT)
