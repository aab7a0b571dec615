"""
Order-zero Bessel and Hankel functions.

Real arguments go through the Cephes J0/Y0 routines (`scipy.special.j0`/`y0`), which switch from rational
approximations to the Hankel asymptotic form at x = 5. Complex arguments, needed only by the damped
kernel oracle, go through the AMOS routine behind `scipy.special.hankel1` and are restricted to the
wedge |arg x| <= 0.2.
"""
import numpy as np
from scipy import special

from scattering.errors import DomainError

SERIES_SWITCHOVER = 5.0
COMPLEX_WEDGE = 0.2


def _result(values: np.ndarray):
    return values[()] if values.ndim == 0 else values


def bessel_j0(x):
    return _result(special.j0(np.asarray(x, dtype=float)))


def bessel_y0(x):
    return _result(special.y0(np.asarray(x, dtype=float)))


def bessel_j1(x):
    return _result(special.j1(np.asarray(x, dtype=float)))


def bessel_y1(x):
    return _result(special.y1(np.asarray(x, dtype=float)))


def hankel0(x):
    """H0^(1)(x) = J0(x) + i Y0(x) on the principal branch.

    Args:
        x: Real positive argument(s), or complex argument(s) with Im x >= 0 and |arg x| <= 0.2.

    Returns:
        complex or np.ndarray: Same shape as x.

    Raises:
        DomainError: x = 0 (logarithmic singularity) or x outside the supported wedge.
    """
    x = np.asarray(x)
    if np.iscomplexobj(x) and np.any(x.imag != 0):
        if np.any(x == 0):
            raise DomainError("H0 has a logarithmic singularity at x = 0.")
        if np.any(x.imag < 0) or np.any(np.abs(np.angle(x)) > COMPLEX_WEDGE):
            raise DomainError(f"Complex Hankel arguments must satisfy Im x >= 0 and |arg x| <= {COMPLEX_WEDGE}.")
        return _result(special.hankel1(0, x))

    x = np.asarray(x.real if np.iscomplexobj(x) else x, dtype=float)
    if np.any(x == 0):
        raise DomainError("H0 has a logarithmic singularity at x = 0.")
    if np.any(x < 0) or not np.all(np.isfinite(x)):
        raise DomainError("Real Hankel arguments must be positive and finite.")
    return _result(special.j0(x) + 1j * special.y0(x))


def hankel0_derivative(x):
    """d/dx H0^(1)(x) = -H1^(1)(x) for real positive x."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("Real Hankel arguments must be positive.")
    return _result(-(special.j1(x) + 1j * special.y1(x)))


def hankel_asymptotic_coefficients(count: int) -> np.ndarray:
    """a_j(0), j = 0..count-1, of H0^(1)(x) ~ sqrt(2/(pi x)) e^{i(x - pi/4)} sum_j i^j a_j / x^j."""
    coefficients = np.ones(count)
    for j in range(1, count):
        coefficients[j] = coefficients[j - 1] * (-(2 * j - 1) ** 2) / (8 * j)
    return coefficients
