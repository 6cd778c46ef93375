import math

import numpy as np
import pytest
from scipy.integrate import quad as scipy_quad

from heatcap import PrecisionError, adaptive_quad
from heatcap.quadrature import gauss_legendre


def test_polynomial_and_trig():
    assert adaptive_quad(lambda x: x * x, 0.0, 1.0, 1e-12) == pytest.approx(1.0 / 3.0, abs=1e-14)
    assert adaptive_quad(np.sin, 0.0, math.pi, 1e-12) == pytest.approx(2.0, abs=1e-13)


def test_matches_scipy_on_smooth_integrands():
    for f, a, b in (
        (lambda x: np.exp(x), 0.0, 6.0),
        (lambda x: 2.0 - np.exp(x), 0.0, math.log(2.0)),
        (lambda x: np.exp(-x * x) * np.cos(3 * x), -2.0, 5.0),
    ):
        expected, _ = scipy_quad(f, a, b, epsabs=1e-13, epsrel=1e-13)
        assert adaptive_quad(f, a, b, 1e-11) == pytest.approx(expected, rel=1e-10, abs=1e-12)


def test_kinked_integrand_forces_subdivision():
    # integral of |x - 1/3| over [0, 1] is (1/9 + 4/9) / 2
    value = adaptive_quad(lambda x: np.abs(x - 1.0 / 3.0), 0.0, 1.0, 1e-12)
    assert value == pytest.approx(5.0 / 18.0, abs=1e-12)


def test_precision_error_carries_best_estimate():
    with pytest.raises(PrecisionError) as info:
        adaptive_quad(lambda x: np.abs(x - 1.0 / 3.0), 0.0, 1.0, 1e-14, max_refinements=1)
    err = info.value
    assert math.isfinite(err.best_estimate)
    assert err.best_estimate == pytest.approx(5.0 / 18.0, abs=1e-3)
    assert err.error_estimate > 1e-14


def test_degenerate_and_invalid_limits():
    assert adaptive_quad(np.sin, 2.0, 2.0, 1e-10) == 0.0
    with pytest.raises(ValueError):
        adaptive_quad(np.sin, 1.0, 0.0, 1e-10)
    with pytest.raises(ValueError):
        adaptive_quad(np.sin, 0.0, 1.0, 0.0)


def test_deterministic():
    f = lambda x: np.exp(-x) * np.sin(5 * x)  # noqa: E731
    a = adaptive_quad(f, 0.0, 10.0, 1e-12)
    b = adaptive_quad(f, 0.0, 10.0, 1e-12)
    assert a == b


def test_gauss_legendre_weights():
    for n in (4, 16, 64):
        x, w = gauss_legendre(n)
        assert w.sum() == pytest.approx(2.0, abs=1e-13)
        assert np.all(np.diff(x) > 0)
