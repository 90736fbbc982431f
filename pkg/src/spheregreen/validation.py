"""Self-validation suite behind ``spheregreen selftest``.

Each check compares two independent routes (or a route against an exact
formula) on a fixed grid and reports the worst discrepancy against a fixed
tolerance.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import appell, integral, kernel, series, solver
from .errors import CompatibilityError, GreenError
from .params import make_context, params_from_a, params_from_L
from .quadrature import QuadratureConfig

GRID_THETAS = (math.pi / 6, math.pi / 2, 2 * math.pi / 3, math.pi)
APPELL_CASES = ((2, -0.4), (2, -0.7), (3, -0.4), (3, -1.2), (3, -1.7))


@dataclass
class CriterionResult:
    ident: str
    name: str
    passed: bool
    worst: float
    tolerance: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"[{status}] {self.ident}. {self.name}: worst={self.worst:.3e} tol={self.tolerance:.0e}"
        return msg + (f" ({self.detail})" if self.detail else "")


def gauss_2f1(a, b, c, z, tol=1e-17, max_terms=100_000):
    """Plain Gauss series for 2F1, |z| < 1."""
    term = 1.0 + 0j
    total = term
    for k in range(max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        if abs(term) <= tol * abs(total):
            return total
    raise ArithmeticError("2F1 series did not converge")


def check_moment_identity(qc: QuadratureConfig) -> CriterionResult:
    worst = 0.0
    qc = qc.replace(tol=min(qc.tol, 1e-13))
    for n in (2, 3, 4, 5):
        ctx = make_context(n)
        for L in (-0.4, 0.3, 1.7):
            L0 = max(math.floor(L), math.floor(1 - n - L))
            for l in range(L0 + 1, L0 + 6):
                quad, exact = integral.moment_identity(ctx, L, l, qc)
                worst = max(worst, abs(quad - exact) / abs(exact))
    return CriterionResult("1", "moment identity", worst <= 1e-10, worst, 1e-10)


def check_poisson_kernel(qc: QuadratureConfig) -> CriterionResult:
    worst = 0.0
    for n in (2, 3, 4):
        ctx = make_context(n)
        for r in (0.3, 0.7, 0.95):
            for theta in (math.pi / 6, math.pi / 2, 5 * math.pi / 6):
                t = math.cos(theta)
                s = kernel.poisson_kernel_series(ctx, r, t, 1000)
                c = kernel.poisson_kernel_closed(ctx, r, t)
                worst = max(worst, abs(s - c) / abs(c))
    return CriterionResult("2", "Poisson kernel series vs closed form", worst <= 1e-9, worst, 1e-9)


def check_appell_vs_integral(qc: QuadratureConfig) -> CriterionResult:
    worst = 0.0
    for n, L in APPELL_CASES:
        ctx = make_context(n)
        p = params_from_L(ctx, L)
        for theta in GRID_THETAS:
            a = appell.green_appell(ctx, p, theta, qc).value
            g = integral.green_integral(ctx, p, theta, qc).value
            worst = max(worst, abs(a - g))
    return CriterionResult("3", "F1 closed form vs integral formula", worst <= 1e-8, worst, 1e-8)


def coefficient_cases():
    """``(n, a)`` pairs covering non-resonant, Poisson and resonant shifts."""
    return [(2, 5.0), (3, -0.84), (4, 2.5), (2, -0.24), (2, 0.0), (3, 0.0), (2, 6.0), (3, 8.0)]


def check_coefficient_law(qc: QuadratureConfig) -> CriterionResult:
    worst_rel = 0.0
    worst_abs = 0.0
    for n, a in coefficient_cases():
        ctx = make_context(n)
        p = params_from_a(ctx, a)
        got = solver.extract_green_coefficients(
            ctx, lambda th: integral.green_integral(ctx, p, th, qc).value, range(11))
        for l, g in enumerate(got):
            exact = solver.exact_green_coefficient(p, l)
            if exact == 0.0:
                worst_abs = max(worst_abs, abs(g))
            else:
                worst_rel = max(worst_rel, abs(g - exact) / abs(exact))
    ok = worst_rel <= 1e-6 and worst_abs <= 1e-8
    return CriterionResult("4", "Green-coefficient law", ok, max(worst_rel, worst_abs), 1e-6,
                           f"rel {worst_rel:.1e}, omitted-mode abs {worst_abs:.1e}")


def check_triangulation(qc: QuadratureConfig) -> CriterionResult:
    cases = [(n, params_from_L(make_context(n), L)) for n, L in APPELL_CASES]
    cases += [(n, params_from_a(make_context(n), 0.0)) for n in (2, 3, 4)]
    worst_ratio = 0.0
    for n, p in cases:
        ctx = make_context(n)
        for theta in GRID_THETAS:
            s = series.green_series(ctx, p, theta)
            g = integral.green_integral(ctx, p, theta, qc)
            budget = s.error_estimate + g.error_estimate
            worst_ratio = max(worst_ratio, abs(s.value - g.value) / budget)
    return CriterionResult("5", "series (Abel) vs integral within estimates",
                           worst_ratio <= 1.0, worst_ratio, 1.0, "discrepancy / summed estimates")


def check_solver(qc: QuadratureConfig) -> CriterionResult:
    rng = np.random.default_rng(1)
    worst = 0.0
    flags_ok = True
    for n, a in ((2, 5.0), (3, -0.84), (4, 13.75), (2, 0.0), (2, 6.0), (3, 8.0)):
        ctx = make_context(n)
        p = params_from_a(ctx, a)
        c = rng.standard_normal(12)
        skip = p.resonant_degree
        if skip is not None:
            c[skip] = 1.0
            try:
                solver.solve_spectrum(ctx, p, solver.ZonalSpectrum(n, c))
                flags_ok = False
            except CompatibilityError:
                pass
            c[skip] = 0.0
        f = solver.ZonalSpectrum(n, c)
        back = solver.apply_operator(ctx, p.a, solver.solve_spectrum(ctx, p, f)).coefficients
        worst = max(worst, float(np.max(np.abs(back - c) / np.maximum(np.abs(c), 1e-300))))
    ok = worst <= 1e-14 and flags_ok
    return CriterionResult("6", "solver round trip and compatibility", ok, worst, 1e-14,
                           "" if flags_ok else "compatibility error not raised")


def check_root_symmetry(qc: QuadratureConfig) -> CriterionResult:
    worst = 0.0
    for n in (2, 3, 4):
        ctx = make_context(n)
        for L in (-0.4, 0.3, 1.7):
            p = params_from_L(ctx, L)
            q = params_from_L(ctx, p.L_prime)
            for theta in (math.pi / 6, math.pi / 2, math.pi):
                g1 = integral.green_integral(ctx, p, theta, qc).value
                g2 = integral.green_integral(ctx, q, theta, qc).value
                worst = max(worst, abs(g1 - g2))
    return CriterionResult("7", "root symmetry L <-> L'", worst <= 1e-9, worst, 1e-9)


F1_INTERIOR_CASES = (
    appell.F1Arguments(1.6, 1.5, 1.5, 2.6, 0.3 * cmath.exp(1j * math.pi / 3),
                       0.3 * cmath.exp(-1j * math.pi / 3)),
    appell.F1Arguments(0.7, 0.4, 1.1, 1.9, 0.5, -0.3),
    appell.F1Arguments(2.2, 1.0, 2.0, 3.5, 0.6j, -0.6j),
    appell.F1Arguments(0.4, 2.5, 2.5, 1.4, 0.8 * cmath.exp(2j), 0.8 * cmath.exp(-2j)),
    appell.F1Arguments(1.0, 0.3, 0.9, 4.0, -0.7, 0.2 + 0.5j),
)


def check_f1_routes(qc: QuadratureConfig) -> CriterionResult:
    qc = qc.replace(tol=min(qc.tol, 1e-12))
    worst = 0.0
    for args in F1_INTERIOR_CASES:
        s = appell.f1_double_series(args)
        i = appell.f1_integral(args, qc)
        worst = max(worst, abs(s - i) / max(1.0, abs(s)))
    for alpha, b1, b2, gamma, x in ((0.7, 0.4, 1.1, 1.9, 0.6), (1.5, 0.5, 0.5, 3.0, -0.8),
                                    (2.0, 1.2, 0.3, 2.5, 0.4 + 0.3j)):
        args = appell.F1Arguments(alpha, b1, b2, gamma, x, x)
        ref = gauss_2f1(alpha, b1 + b2, gamma, x)
        worst = max(worst, abs(appell.f1_double_series(args) - ref) / max(1.0, abs(ref)))
    return CriterionResult("8", "F1 double series vs integral vs 2F1", worst <= 1e-9, worst, 1e-9)


CRITERIA: dict[str, Callable[[QuadratureConfig], CriterionResult]] = {
    "1": check_moment_identity,
    "2": check_poisson_kernel,
    "3": check_appell_vs_integral,
    "4": check_coefficient_law,
    "5": check_triangulation,
    "6": check_solver,
    "7": check_root_symmetry,
    "8": check_f1_routes,
}


def run(selected=None, tol: float = 1e-10) -> list[CriterionResult]:
    """Run the selected criteria (all when ``selected`` is None).

    A criterion that raises is reported as failed with the exception named.
    """
    idents = list(CRITERIA) if selected is None else list(selected)
    results = []
    try:
        qc = QuadratureConfig(tol=tol)
    except GreenError as exc:
        qc = None
        config_error = exc
    for ident in idents:
        name = CRITERIA[ident].__name__.removeprefix("check_").replace("_", " ")
        if qc is None:
            results.append(CriterionResult(ident, name, False, math.inf, tol,
                                           f"{type(config_error).__name__}: {config_error}"))
            continue
        try:
            results.append(CRITERIA[ident](qc))
        except GreenError as exc:
            results.append(CriterionResult(ident, name, False, math.inf, tol,
                                           f"{type(exc).__name__}: {exc}"))
    return results
