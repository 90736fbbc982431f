import math

import numpy as np
import pytest
from scipy import special

from spheregreen import AccuracyError, QuadratureConfig, Scheme
from spheregreen.quadrature import gauss_gegenbauer, integrate01, tanh_sinh


@pytest.mark.parametrize("scheme", list(Scheme))
def test_endpoint_singularity(scheme):
    # int_0^1 x^-1/2 (1-x)^-1/2 dx = pi
    res = integrate01(lambda x, xc: x ** -0.5 * xc ** -0.5, QuadratureConfig(scheme, tol=1e-12))
    assert res.converged and res.value == pytest.approx(math.pi, rel=1e-11)


def test_log_singularity():
    res = tanh_sinh(lambda x, xc: np.log(x) * np.log(xc), tol=1e-12)
    assert res.value == pytest.approx(2 - math.pi ** 2 / 6, rel=1e-12)


def test_complex_integrand():
    res = tanh_sinh(lambda x, xc: np.exp(1j * x), tol=1e-12)
    assert res.value == pytest.approx((np.exp(1j) - 1) / 1j, rel=1e-13)


def test_tolerance_floor():
    with pytest.raises(AccuracyError):
        QuadratureConfig(tol=1e-16)


@pytest.mark.parametrize("lam", [0.5, 1.0, 1.5, 2.5])
def test_gauss_gegenbauer_exact(lam):
    x, w = gauss_gegenbauer(lam, 12)
    for k in range(0, 23, 2):
        exact = special.beta((k + 1) / 2, lam + 0.5)
        assert np.dot(w, x ** k) == pytest.approx(exact, rel=1e-12)
    assert abs(np.dot(w, x ** 7)) < 1e-14
