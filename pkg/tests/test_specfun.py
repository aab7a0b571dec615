"""
Unit tests for scattering.specfun.
"""
import numpy as np
import pytest

from scattering import specfun
from scattering.errors import DomainError


class TestHankel:
    """Tests for H0^(1)."""

    def test_value_at_one(self):
        value = specfun.hankel0(1.0)
        assert value.real == pytest.approx(0.7651976866, abs=1e-10)
        assert value.imag == pytest.approx(0.0882569642, abs=1e-10)

    def test_small_argument(self):
        """Y0 follows (2/pi)(ln(x/2) + gamma) and stays negative below its first zero."""
        x = np.array([1e-4, 1e-2, 0.5, 0.85])
        values = specfun.hankel0(x)
        assert np.all(values.imag < 0)
        leading = 2 / np.pi * (np.log(1e-4 / 2) + np.euler_gamma)
        assert values[0].imag == pytest.approx(leading, rel=1e-6)

    def test_large_argument(self):
        x = np.linspace(50, 500, 40)
        assert np.allclose(np.abs(specfun.hankel0(x)), np.sqrt(2 / (np.pi * x)), rtol=1e-2)

    def test_zero_argument(self):
        with pytest.raises(DomainError):
            specfun.hankel0(0.0)

    def test_negative_argument(self):
        with pytest.raises(DomainError):
            specfun.hankel0(-1.0)

    def test_complex_wedge(self):
        assert np.isfinite(specfun.hankel0(10 + 0.1j))
        with pytest.raises(DomainError):
            specfun.hankel0(1 + 1j)
        with pytest.raises(DomainError):
            specfun.hankel0(10 - 0.1j)

    def test_derivative(self):
        x, h = 3.0, 1e-6
        numeric = (specfun.hankel0(x + h) - specfun.hankel0(x - h)) / (2 * h)
        assert np.isclose(specfun.hankel0_derivative(x), numeric, rtol=1e-7)


class TestBessel:
    """Tests for the real Bessel functions."""

    def test_wronskian(self):
        """J0 Y0' - J0' Y0 = J1 Y0 - J0 Y1 = 2 / (pi x)."""
        x = np.geomspace(0.01, 100, 200)
        wronskian = specfun.bessel_j1(x) * specfun.bessel_y0(x) - specfun.bessel_j0(x) * specfun.bessel_y1(x)
        assert np.allclose(wronskian, 2 / (np.pi * x), rtol=1e-9)

    def test_switchover_continuity(self):
        """No jump where the evaluation switches to the asymptotic form."""
        x = specfun.SERIES_SWITCHOVER
        below, above = specfun.hankel0(x - 1e-9), specfun.hankel0(x + 1e-9)
        assert abs(above - below) < 1e-8


class TestAsymptoticCoefficients:
    """Tests for the Hankel asymptotic coefficients."""

    def test_first_terms(self):
        a = specfun.hankel_asymptotic_coefficients(4)
        assert np.allclose(a[:3], [1.0, -1 / 8, 9 / 128])

    def test_expansion(self):
        x = 200.0
        a = specfun.hankel_asymptotic_coefficients(5)
        series = sum(1j ** j * a[j] / x ** j for j in range(5))
        approx = np.sqrt(2 / (np.pi * x)) * np.exp(1j * (x - np.pi / 4)) * series
        assert np.isclose(approx, specfun.hankel0(x), rtol=1e-10)
