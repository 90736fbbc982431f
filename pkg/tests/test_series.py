import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spheregreen import (ParameterError, green_integral, green_series, make_context,
                         params_from_a, params_from_L)
from spheregreen.series import series_coefficients

from conftest import n2_poisson_exact


@given(st.integers(2, 6), st.floats(-3.0, 40.0))
def test_term_identity(n, a):
    p = params_from_a(make_context(n), a)
    if p.resonant_degree is not None:
        return
    g = series_coefficients(p, 100)
    l = np.arange(101)
    np.testing.assert_allclose(g * (a - l * (n + l - 1)), 1.0, rtol=1e-14)


@given(st.integers(2, 6), st.floats(-4.0, 4.0).filter(lambda x: abs(x - round(x)) > 1e-3))
def test_partial_fractions(n, L):
    p = params_from_L(make_context(n), L)
    l = np.arange(60)
    np.testing.assert_allclose(series_coefficients(p, 59), 1 / ((L - l) * (n + L + l - 1)), rtol=1e-12)


def test_omitted_degrees():
    c = make_context(2)
    assert series_coefficients(params_from_a(c, 0.0), 3)[0] == 0.0
    g = series_coefficients(params_from_a(c, 6.0), 5)
    assert g[2] == 0.0 and g[3] == pytest.approx(-1 / 6)


def test_empty_sum_is_zero():
    c = make_context(2)
    ev = green_series(c, params_from_a(c, 0.0), 1.0, lmax=0, abel_radii=())
    assert ev.value == 0.0


@pytest.mark.parametrize("theta", [0.4, math.pi / 2, 2.0, math.pi])
def test_abel_against_closed_form(theta):
    c = make_context(2)
    ev = green_series(c, params_from_a(c, 0.0), theta)
    assert abs(ev.value - n2_poisson_exact(theta)) <= ev.error_estimate
    if theta >= math.pi / 2:
        assert ev.value == pytest.approx(n2_poisson_exact(theta), abs=1e-6)


def test_pole_example():
    c = make_context(2)
    p = params_from_a(c, 0.0)
    s = green_series(c, p, math.pi, lmax=10000)
    g = green_integral(c, p, math.pi)
    assert s.value == pytest.approx(g.value, rel=1e-6)


@pytest.mark.parametrize("n,a", [(2, 0.0), (3, -0.84), (4, 2.5), (3, 8.0), (3, -3.0)])
@pytest.mark.parametrize("theta", [math.pi / 3, 2 * math.pi / 3, math.pi])
def test_radii_schedule_independence(n, a, theta):
    c = make_context(n)
    p = params_from_a(c, a)
    s1 = green_series(c, p, theta)
    s2 = green_series(c, p, theta, abel_radii=(0.95, 0.995, 0.9995))
    assert abs(s1.value - s2.value) <= s1.error_estimate + s2.error_estimate


def test_radii_validation():
    c = make_context(2)
    p = params_from_a(c, 1.0)
    with pytest.raises(ParameterError):
        green_series(c, p, 1.0, abel_radii=(0.9,))
    with pytest.raises(ParameterError):
        green_series(c, p, 1.0, abel_radii=(0.99, 0.9))
