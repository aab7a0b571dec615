"""
Polylogarithms Li_s(e^mu) of non-integer order near the unit circle.

For |mu| < 2 pi and non-integer s,

    Li_s(e^mu) = Gamma(1 - s) (-mu)^(s - 1) + sum_{k >= 0} zeta(s - k) mu^k / k!

The first term carries the branch-point behaviour at mu = 0; the series is entire in mu inside the
radius and converges geometrically (ratio |mu| / 2pi <= 1/2 once Im mu is wrapped into (-pi, pi]).
The coefficients are computed once per order with mpmath and cached.
"""
import functools

import mpmath
import numpy as np

SERIES_TERMS = 64
WORKING_DIGITS = 30


@functools.lru_cache(maxsize=None)
def series_coefficients(order: float, terms: int = SERIES_TERMS) -> tuple[complex, tuple[complex, ...]]:
    """Gamma(1 - s) and zeta(s - k) / k!, k = 0..terms-1."""
    with mpmath.workdps(WORKING_DIGITS):
        s = mpmath.mpf(order)
        gamma = complex(mpmath.gamma(1 - s))
        coefficients = tuple(complex(mpmath.zeta(s - k) / mpmath.factorial(k)) for k in range(terms))
    return gamma, coefficients


def wrap_angle(theta):
    """Map angles into (-pi, pi]."""
    wrapped = np.pi - np.mod(np.pi - np.asarray(theta, dtype=float), 2 * np.pi)
    return wrapped


def regular_part(order: float, mu) -> np.ndarray:
    """sum_k zeta(s - k) mu^k / k!."""
    _, coefficients = series_coefficients(float(order))
    return np.polynomial.polynomial.polyval(np.asarray(mu, dtype=complex), np.array(coefficients))


def singular_part(order: float, mu, root=None) -> np.ndarray:
    """Gamma(1 - s) (-mu)^(s-1), written as Gamma(1 - s) root^(2s - 2) with root a square root of -mu.

    Passing `root` selects the branch; by default the principal square root is used.
    """
    gamma, _ = series_coefficients(float(order))
    mu = np.asarray(mu, dtype=complex)
    if root is None:
        root = np.sqrt(-mu)
    return gamma * np.power(np.asarray(root, dtype=complex), 2 * order - 2)


def polylog_exp(order: float, mu, root=None) -> np.ndarray:
    """Li_s(e^mu) for |mu| < 2pi, mu != 0."""
    return singular_part(order, mu, root) + regular_part(order, mu)


def polylog_unit(order: float, theta) -> np.ndarray:
    """Li_s(e^{i theta}) for real theta, theta not a multiple of 2pi."""
    return polylog_exp(order, 1j * wrap_angle(theta))
