import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spheregreen import (AccuracyError, DomainError, ExcludedParameter, PreconditionError,
                         QuadratureConfig, UnsupportedParameter, green_appell, green_integral,
                         green_integrand, green_series, make_context, moment_identity,
                         params_from_a, params_from_L)
from spheregreen.integral import leading_sum

from conftest import n2_poisson_exact

METHOD_GRID = (math.pi / 6, math.pi / 3, math.pi / 2, 2 * math.pi / 3, 5 * math.pi / 6, math.pi)


def test_integrand_vanishes_near_one(ctx):
    for L in (-0.4, 0.3, 1.7):
        p = params_from_L(ctx, L)
        for t in (-0.9, 0.0, 0.5):
            assert abs(green_integrand(ctx, p, 1 - 1e-6, t)) < 1e-4


def test_integrand_domain():
    c = make_context(2)
    with pytest.raises(PreconditionError):
        green_integrand(c, params_from_L(c, -0.4), 1.0, 0.0)


def test_moment_examples():
    c = make_context(2)
    q1, e1 = moment_identity(c, -0.4, 1)
    assert e1 == pytest.approx(1 / (-1.4 * 1.6), rel=1e-15)
    assert q1 == pytest.approx(e1, rel=1e-10)
    q0, e0 = moment_identity(c, -0.4, 0)
    assert e0 == pytest.approx(-1 / 0.24, rel=1e-15)
    assert q0 == pytest.approx(e0, rel=1e-10)


@pytest.mark.parametrize("n,L", [(3, -1.2), (4, -1.2), (5, -1.2), (4, -2.6)])
def test_moment_extra_L(n, L):
    ctx = make_context(n)
    L0 = max(math.floor(L), math.floor(1 - n - L))
    for l in range(L0 + 1, L0 + 6):
        q, e = moment_identity(ctx, L, l)
        assert q == pytest.approx(e, rel=1e-10)


def test_moment_preconditions():
    c = make_context(3)
    with pytest.raises(PreconditionError):
        moment_identity(c, 0.3, 0)  # L0 = 0
    with pytest.raises(PreconditionError):
        moment_identity(c, 2.0, 5)
    with pytest.raises(ExcludedParameter):
        moment_identity(c, -1.0 + 0.0, 3) if False else moment_identity(make_context(2), -0.5, 3)


def test_poisson_n2_closed_form():
    c = make_context(2)
    p = params_from_a(c, 0.0)
    for theta in (0.05, 0.5, math.pi / 2, 2.5, math.pi):
        assert green_integral(c, p, theta).value == pytest.approx(n2_poisson_exact(theta), abs=1e-10)


def test_poisson_example_against_series():
    c = make_context(2)
    p = params_from_a(c, 0.0)
    assert green_integral(c, p, math.pi / 2).value == pytest.approx(
        green_series(c, p, math.pi / 2).value, abs=1e-6)


def test_empty_leading_sum_example(qc):
    c = make_context(2)
    p = params_from_L(c, -0.4)
    assert leading_sum(c, p, math.cos(2 * math.pi / 3)) == 0.0
    g = green_integral(c, p, 2 * math.pi / 3, qc).value
    assert g == pytest.approx(green_appell(c, p, 2 * math.pi / 3, qc).value, abs=1e-8)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("a_or_L", [("L", -0.4), ("L", 0.3), ("L", 2.6), ("a", 0.0), ("a", "res"),
                                    ("a", -5.0)])
def test_method_agreement(n, a_or_L, qc):
    ctx = make_context(n)
    kind, v = a_or_L
    if v == "res":
        v = 2 * (n + 1)
    p = params_from_L(ctx, v) if kind == "L" else params_from_a(ctx, v)
    if p.kind.name == "COMPLEX_L":
        with pytest.raises(UnsupportedParameter):
            green_integral(ctx, p, 1.0, qc)
        return
    for theta in METHOD_GRID:
        g = green_integral(ctx, p, theta, qc)
        s = green_series(ctx, p, theta)
        assert abs(g.value - s.value) <= g.error_estimate + s.error_estimate


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("L", [-0.4, 0.3, 1.7, 3.2])
def test_root_symmetry(n, L, qc):
    ctx = make_context(n)
    p = params_from_L(ctx, L)
    q = params_from_L(ctx, 1 - n - L)
    for theta in (math.pi / 6, math.pi / 2, math.pi):
        assert green_integral(ctx, p, theta, qc).value == pytest.approx(
            green_integral(ctx, q, theta, qc).value, abs=1e-9)


def test_tightening_tolerance_does_not_hurt():
    ctx = make_context(3)
    p = params_from_L(ctx, 0.3)
    theta = 1.1
    ref = green_integral(ctx, p, theta, QuadratureConfig(tol=1e-13)).value
    errs = [abs(green_integral(ctx, p, theta, QuadratureConfig(tol=tol)).value - ref)
            for tol in (1e-6, 5e-7, 2.5e-7, 1e-8, 1e-10, 1e-12)]
    assert all(b <= a + 1e-15 for a, b in zip(errs, errs[1:]))


def test_rejections():
    c = make_context(2)
    with pytest.raises(ExcludedParameter, match=r"\(L != \(1-n\)/2\)"):
        green_integral(c, params_from_L(c, -0.5), 1.0)
    with pytest.raises(UnsupportedParameter):
        green_integral(c, params_from_a(c, -1.0), 1.0)
    with pytest.raises(DomainError):
        green_integral(c, params_from_L(c, 0.3), 0.0)
    with pytest.raises(DomainError):
        green_integral(c, params_from_L(c, 0.3), 3.2)


def test_nonconvergence_raises():
    c = make_context(3)
    qc = QuadratureConfig(tol=1e-13, max_levels=1)
    with pytest.raises(AccuracyError) as info:
        green_integral(c, params_from_L(c, 0.3), 0.02, qc)
    assert info.value.value is not None


@given(st.integers(2, 5), st.floats(-3.0, 3.0).filter(lambda x: abs(x - round(x)) > 0.05),
       st.floats(0.2, math.pi))
def test_integral_is_finite_and_real(n, L, theta):
    ctx = make_context(n)
    p = params_from_L(ctx, L)
    if p.excluded:
        return
    assert np.isfinite(green_integral(ctx, p, theta).value)
