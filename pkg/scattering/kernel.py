"""
Discrete Wiener-Hopf kernel of one array: evaluation, damped oracle and multiplicative split.

    K(z) = H0(ka) + sum_{l >= 1} (z^l + z^-l) H0(ksl)

The series converges only conditionally on |z| = 1. It is evaluated by Kummer subtraction: the first L0
terms are summed after removing five terms of the Hankel asymptotic expansion, and the removed part is
summed in closed form through polylogarithms Li_{j+1/2}(z e^{iks}) + Li_{j+1/2}(e^{iks}/z).

Factorisation K = K+ K-, K-(z) = K+(1/z), is done on the unit circle. With w = z e^{iks} the kernel
behaves like (1 - w)^{-1/2} at w = 1, so

    ln K+(z) = -1/2 ln(1 - w) + sum_{k=1,3,5} beta_k (1 - w)^{k/2} + p_0/2 + sum_{n>=1} p_n z^n

where the beta_k are the odd half-integer branch weights at w = 1 (read off a local Laurent analysis on
a small circle) and p_n are the Fourier coefficients of what is left, which decay like n^{-9/2}.
"""
import logging
import math

import numpy as np
from scipy import special

from scattering import polylog, specfun
from scattering.errors import (ConvergenceError, DomainError, PrecisionLossError, SingularityError,
                               TailBoundError, WindingError)
from scattering.objects import KernelData, KernelSeries

logger = logging.getLogger(__name__)

NEAR_TERMS = 200
FAR_ORDERS = 5
SINGULAR_TOL = 1e-12
UNIT_CIRCLE_TOL = 1e-9
COINCIDENCE_TOL = 1e-8

MIN_CONTOUR = 2 ** 12
MAX_CONTOUR = 2 ** 18
CONTOUR_TOL = 1e-9

BRANCH_ORDERS = (1, 3, 5)
BRANCH_SAMPLES = 64
BRANCH_ATTEMPTS = 8

MIN_LAMBDAS = 64
AMPLIFICATION_LIMIT = 1e12
TWO_RADIUS_TOL = 1e-7
TAIL_TOL = 1e-10

ORACLE_TOL = 1e-13
ORACLE_MAX_TERMS = 2 ** 26
ORACLE_LEVELS = 6
ORACLE_DAMPING = 1e-4

CHUNK = 4096
ORACLE_CHUNK = 65536


def _result(values: np.ndarray):
    return values[()] if values.ndim == 0 else values


def _next_power_of_two(value: float) -> int:
    return 1 << max(0, math.ceil(math.log2(max(value, 1))))


def _series_of(kd: KernelData | KernelSeries) -> KernelSeries:
    return kd if isinstance(kd, KernelSeries) else kd.series


# region evaluation

def kernel_series(k: float, s: float, a: float) -> KernelSeries:
    """Build the Kummer-subtracted representation of K for wavenumber k, spacing s, radius a."""
    ks = k * s
    terms = max(NEAR_TERMS, math.ceil(60 / ks))
    ell = np.arange(1, terms + 1, dtype=float)
    j = np.arange(FAR_ORDERS)
    orders = j + 0.5
    far = (np.sqrt(2 / (np.pi * ks)) * np.exp(-0.25j * np.pi) * np.power(1j, j)
           * specfun.hankel_asymptotic_coefficients(FAR_ORDERS) * ks ** (-j.astype(float)))
    asymptotic = np.exp(1j * ks * ell) * (far[None, :] * ell[:, None] ** (-orders[None, :])).sum(axis=1)
    near = specfun.hankel0(ks * ell) - asymptotic
    return KernelSeries(k, s, a, complex(specfun.hankel0(k * a)), near, far, orders)


def _check_singular(series: KernelSeries, z: np.ndarray, what: str = "Kernel evaluation") -> None:
    ks = series.ks
    distance = np.minimum(np.abs(z - np.exp(-1j * ks)), np.abs(z - np.exp(1j * ks)))
    if np.any(distance < SINGULAR_TOL):
        raise SingularityError(f"{what} at a singular point e^(+-iks), ks = {ks:.6g}.")


def _near_sum_circle(series: KernelSeries, psi: np.ndarray) -> np.ndarray:
    ell = np.arange(1, series.near.size + 1)
    out = np.empty(psi.shape, dtype=complex)
    for start in range(0, psi.size, CHUNK):
        block = psi[start:start + CHUNK]
        out[start:start + CHUNK] = 2 * np.cos(np.outer(block, ell)) @ series.near
    return out


def _near_sum(series: KernelSeries, z: np.ndarray) -> np.ndarray:
    ell = np.arange(1, series.near.size + 1)
    out = np.empty(z.shape, dtype=complex)
    for start in range(0, z.size, CHUNK):
        powers = z[start:start + CHUNK, None] ** ell[None, :]
        out[start:start + CHUNK] = (powers + 1 / powers) @ series.near
    return out


def _kernel_on_circle(series: KernelSeries, psi: np.ndarray) -> np.ndarray:
    ks = series.ks
    values = series.self_term + _near_sum_circle(series, psi)
    for weight, order in zip(series.far, series.orders):
        values = values + weight * (polylog.polylog_unit(order, ks + psi) + polylog.polylog_unit(order, ks - psi))
    return values


def kernel_eval(kd: KernelData | KernelSeries, z) -> complex | np.ndarray:
    """K(z) on the unit circle by the accelerated (Kummer/polylogarithm) form.

    Raises:
        DomainError: |z| differs from 1 (for real k the analyticity annulus is the unit circle).
        SingularityError: z within 1e-12 of e^(+-iks).
    """
    series = _series_of(kd)
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(np.abs(z) - 1) > UNIT_CIRCLE_TOL):
        raise DomainError("The kernel is evaluated on the unit circle |z| = 1.")
    flat = z.ravel()
    _check_singular(series, flat)
    return _result(_kernel_on_circle(series, np.angle(flat)).reshape(z.shape))


def oracle_tail_bound(kd: KernelData | KernelSeries, damping: float, terms: int, growth: float = 0.0) -> float:
    """Bound on the dropped terms l > L of the damped series for |ln|z|| <= growth."""
    k, s = kd.wavenumber, kd.spacing
    decay = damping * s - growth
    return float(2 * np.sqrt(2 / (np.pi * k * s)) * np.exp(-decay * terms)
                 / np.sqrt(terms) / (1 - np.exp(-decay)))


def kernel_oracle(kd: KernelData | KernelSeries, z, damping: float, terms: int | None = None,
                  tol: float = ORACLE_TOL) -> complex | np.ndarray:
    """Direct partial sum of the kernel series with k replaced by k + i*damping.

    Args:
        kd: Kernel (only k, s, a are used).
        z: Evaluation point(s) inside the damped annulus exp(-damping s) < |z| < exp(damping s).
        damping: Imaginary part added to k; must be positive.
        terms: Number of lattice terms L; chosen by doubling until the tail bound meets tol when None.
        tol: Required tail bound.

    Raises:
        DomainError: damping <= 0, or z outside the damped annulus.
        TailBoundError: the tail bound is not met with `terms` (or within 2^26 terms).
    """
    if not damping > 0:
        raise DomainError("The damped oracle needs a positive damping; "
                          "the undamped series only converges conditionally.")
    k, s, a = kd.wavenumber, kd.spacing, kd.radius
    z = np.asarray(z, dtype=complex)
    flat = z.ravel()
    growth = float(np.max(np.abs(np.log(np.abs(flat)))))
    if growth >= damping * s:
        raise DomainError("z lies outside the annulus where the damped series converges.")

    if terms is None:
        terms = 1024
        while oracle_tail_bound(kd, damping, terms, growth) > tol:
            terms *= 2
            if terms > ORACLE_MAX_TERMS:
                raise TailBoundError(f"Damping {damping:.3g} needs more than {ORACLE_MAX_TERMS} terms.")
    elif oracle_tail_bound(kd, damping, terms, growth) > tol:
        raise TailBoundError(f"{terms} terms leave a tail bound of "
                             f"{oracle_tail_bound(kd, damping, terms, growth):.3g} > {tol:.3g}.")

    wavenumber = k + 1j * damping
    total = np.full(flat.shape, specfun.hankel0(wavenumber * a), dtype=complex)
    for start in range(1, terms + 1, ORACLE_CHUNK):
        ell = np.arange(start, min(start + ORACLE_CHUNK, terms + 1))
        weights = specfun.hankel0(wavenumber * s * ell)
        powers = flat[:, None] ** ell[None, :]
        total += (powers + 1 / powers) @ weights
    return _result(total.reshape(z.shape))


def _extrapolate_to_zero(nodes: np.ndarray, values: np.ndarray) -> np.ndarray:
    table = [v for v in values]
    for width in range(1, len(nodes)):
        for i in range(len(nodes) - width):
            table[i] = (nodes[i + width] * table[i] - nodes[i] * table[i + 1]) / (nodes[i + width] - nodes[i])
    return table[0]


def kernel_limit(kd: KernelData | KernelSeries, z, base_damping: float | None = None,
                 levels: int = ORACLE_LEVELS, tol: float = ORACLE_TOL) -> complex | np.ndarray:
    """Undamped kernel value from damped oracles at damping delta * 2^i, extrapolated to zero damping."""
    delta = base_damping if base_damping is not None else ORACLE_DAMPING / kd.spacing
    nodes = delta * 2.0 ** np.arange(levels)
    values = [np.asarray(kernel_oracle(kd, z, eps, tol=tol)) for eps in nodes]
    return _result(np.asarray(_extrapolate_to_zero(nodes, values)))

# endregion


# region factorisation

def _branch_weights(series: KernelSeries) -> np.ndarray:
    """beta_1, beta_3, beta_5: odd coefficients of ln(K u) in u = (1 - w)^{1/2} around w = 1."""
    ks = series.ks
    radius = 0.1 * min(1.0, math.sqrt(abs(1 - np.exp(2j * ks))))
    phi = 2 * np.pi * np.arange(BRANCH_SAMPLES) / BRANCH_SAMPLES
    for _ in range(BRANCH_ATTEMPTS):
        u = radius * np.exp(1j * phi)
        t = u * u
        mu_plus = np.log1p(-t)
        root = u * np.sqrt(-mu_plus / t)
        z = (1 - t) * np.exp(-1j * ks)
        mu_minus = np.log(np.exp(2j * ks) / (1 - t))

        values = series.self_term + _near_sum(series, z)
        for weight, order in zip(series.far, series.orders):
            values = values + weight * (polylog.polylog_exp(order, mu_plus, root)
                                        + polylog.polylog_exp(order, mu_minus))
        scaled = values * u

        phase = np.unwrap(np.angle(np.append(scaled, scaled[0])))
        if round((phase[-1] - phase[0]) / (2 * np.pi)) == 0:
            log_scaled = np.log(np.abs(scaled)) + 1j * phase[:-1]
            coefficients = np.fft.fft(log_scaled) / BRANCH_SAMPLES / radius ** np.arange(BRANCH_SAMPLES)
            return np.array([coefficients[order] for order in BRANCH_ORDERS])
        radius /= 2
    raise WindingError("The local expansion around the branch point encloses a kernel zero.")


def _regularised_log(series: KernelSeries, psi: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """ln Q with Q = K (1 - w+)^{1/2} (1 - w-)^{1/2}, tracked continuously; also the two square roots."""
    ks = series.ks
    z = np.exp(1j * psi)
    _check_singular(series, z, "Contour sample coincides with a branch point")
    root_plus = np.sqrt(1 - z * np.exp(1j * ks))
    root_minus = np.sqrt(1 - np.exp(1j * ks) / z)
    regularised = _kernel_on_circle(series, psi) * root_plus * root_minus

    phase = np.unwrap(np.angle(np.append(regularised, regularised[0])))
    winding = round((phase[-1] - phase[0]) / (2 * np.pi))
    if winding != 0:
        raise WindingError(f"The regularised kernel winds {winding} time(s) around zero; "
                           f"the kernel vanishes inside the contour or on it.")

    reference = np.angle(_kernel_on_circle(series, np.zeros(1))[0] * np.sqrt(1 - np.exp(1j * ks)) ** 2)
    phase = phase[:-1] - 2 * np.pi * round((phase[0] - reference) / (2 * np.pi))
    return np.log(np.abs(regularised)) + 1j * phase, root_plus, root_minus


def _smooth_log_coefficients(series: KernelSeries, beta: np.ndarray, size: int) -> np.ndarray:
    """p_n, n = 0..size/2 - 1, from `size` samples offset by half a grid step."""
    psi = 2 * np.pi * (np.arange(size) + 0.5) / size
    log_q, root_plus, root_minus = _regularised_log(series, psi)
    branch = sum(weight * (root_plus ** order + root_minus ** order) for weight, order in zip(beta, BRANCH_ORDERS))
    spectrum = np.fft.fft(log_q - branch) / size

    half = size // 2
    n = np.arange(half)
    positive = spectrum[:half] * np.exp(-1j * np.pi * n / size)
    negative = np.empty(half, dtype=complex)
    negative[0] = spectrum[0]
    negative[1:] = spectrum[size - 1:half:-1] * np.exp(1j * np.pi * n[1:] / size)
    return 0.5 * (positive + negative)


def _log_fourier(ks: float, beta: np.ndarray, smooth: np.ndarray) -> np.ndarray:
    n = np.arange(smooth.size)
    c = smooth.copy()
    c[0] = smooth[0] + 2 * np.sum(beta)
    tail = n[1:]
    c[1:] += np.exp(1j * ks * tail) / (2 * tail)
    for weight, order in zip(beta, BRANCH_ORDERS):
        c[1:] += weight * special.binom(order / 2, tail) * np.exp(1j * (ks + np.pi) * tail)
    return c


def _log_kplus(ks: float, beta: np.ndarray, z: np.ndarray, series_part: np.ndarray) -> np.ndarray:
    w = z * np.exp(1j * ks)
    root = np.sqrt(1 - w)
    return -0.5 * np.log(1 - w) + sum(weight * root ** order for weight, order in zip(beta, BRANCH_ORDERS)) + series_part


def default_radius(count: int) -> float:
    """Extraction radius max(0.95, 10^(-3/n)), so rho^-n stays below 1e3 for the highest coefficient n."""
    return max(0.95, 10 ** (-3 / max(count - 1, 1)))


def _taylor(ks: float, beta: np.ndarray, smooth: np.ndarray, count: int, radius: float, sign: int) -> np.ndarray:
    """First `count` Taylor coefficients of K+^sign, sampled on |z| = radius."""
    amplification = radius ** (-(count - 1))
    if amplification > AMPLIFICATION_LIMIT:
        raise PrecisionLossError(f"Extraction radius {radius:.6g} amplifies coefficient {count - 1} "
                                 f"by {amplification:.3g} > {AMPLIFICATION_LIMIT:.0e}.")
    samples = max(2 * smooth.size, _next_power_of_two(2 * count), _next_power_of_two(40 / (1 - radius)))

    scaled = smooth * radius ** np.arange(smooth.size)
    scaled[0] = smooth[0] / 2
    folded = np.zeros(samples, dtype=complex)
    np.add.at(folded, np.arange(smooth.size) % samples, scaled)
    series_part = np.fft.ifft(folded) * samples

    z = radius * np.exp(2j * np.pi * np.arange(samples) / samples)
    values = np.exp(sign * _log_kplus(ks, beta, z, series_part))
    coefficients = np.fft.fft(values) / samples
    return coefficients[:count] / radius ** np.arange(count)


def factorize(k: float, s: float, a: float, M: int | None = None, N: int = 0, *,
              n_lambda: int | None = None, extraction_radius: float | None = None) -> KernelData:
    """Split K = K+ K- for one (k, s, a) and extract lambda_n, the Taylor coefficients of 1/K+.

    Args:
        k: Wavenumber.
        s: Spacing.
        a: Scatterer radius.
        M: Initial number of contour samples, a power of two >= 4096. Doubled until K0 changes < 1e-9.
        N: Truncation; at least lambda_0..lambda_N are returned.
        n_lambda: Highest lambda index needed elsewhere (for example the inner truncation 2P).
        extraction_radius: Circle radius rho for the Taylor extraction; see `default_radius`.

    Raises:
        SingularityError: the two branch points coincide (ks a multiple of pi), or a sample lands on one.
        WindingError: the regularised kernel winds around zero.
        ConvergenceError: contour doubling or the two-radius lambda check fails.
        PrecisionLossError: rho^-n exceeds 1e12.
    """
    size = M if M is not None else MIN_CONTOUR
    if size < MIN_CONTOUR or size & (size - 1):
        raise DomainError(f"Contour size must be a power of two >= {MIN_CONTOUR}, got {size}.")

    series = kernel_series(k, s, a)
    ks = series.ks
    if abs(1 - np.exp(2j * ks)) < COINCIDENCE_TOL:
        raise SingularityError(f"Branch points e^(+-iks) coincide for ks = {ks:.6g}.")

    beta = _branch_weights(series)
    smooth = _smooth_log_coefficients(series, beta, size)
    K0 = np.exp(np.sum(beta) + smooth[0] / 2)
    while True:
        doubled = _smooth_log_coefficients(series, beta, 2 * size)
        K0_doubled = np.exp(np.sum(beta) + doubled[0] / 2)
        logger.debug(f"Contour {2 * size}: K0 = {K0_doubled:.12g} (change {abs(K0_doubled - K0):.2e})")
        size, smooth = 2 * size, doubled
        if abs(K0_doubled - K0) <= CONTOUR_TOL * abs(K0_doubled):
            K0 = K0_doubled
            break
        if size >= MAX_CONTOUR:
            raise ConvergenceError(f"K0 did not settle to {CONTOUR_TOL:.0e} up to {MAX_CONTOUR} contour samples.")
        K0 = K0_doubled

    magnitude = np.abs(smooth)
    tail_ratio = float(magnitude[3 * smooth.size // 4:].max() / magnitude.max())

    count = max(N, n_lambda or 0, MIN_LAMBDAS) + 1
    radius = extraction_radius if extraction_radius is not None else default_radius(count)
    lambdas = _taylor(ks, beta, smooth, count, radius, -1)
    check = _taylor(ks, beta, smooth, count, radius ** 1.25, -1)
    deviation = float(np.max(np.abs(lambdas - check)) / np.max(np.abs(lambdas)))
    if deviation > TWO_RADIUS_TOL:
        raise ConvergenceError(f"lambda coefficients disagree between radii {radius:.6g} and "
                               f"{radius ** 1.25:.6g}: {deviation:.2e} > {TWO_RADIUS_TOL:.0e}.")

    c = _log_fourier(ks, beta, smooth)
    kd = KernelData(k, s, a, size, c, complex(np.exp(c[0] / 2)), lambdas, series, beta, smooth, radius, tail_ratio)
    logger.info(f"Factorised kernel k={k:.6g} s={s:.6g} a={a:.6g}: M={size}, K0={kd.K0:.10g}, "
                f"{count} lambdas at rho={radius:.6g}")
    return kd


def kplus_eval(kd: KernelData, z) -> complex | np.ndarray:
    """K+(z) for |z| <= 1, z away from e^{-iks}.

    Logs a warning when the log-Fourier tail has not decayed, which happens close to resonance.
    """
    z = np.asarray(z, dtype=complex)
    flat = z.ravel()
    if np.any(np.abs(flat) > 1 + UNIT_CIRCLE_TOL):
        raise DomainError("K+ is evaluated in the closed unit disk |z| <= 1.")
    if np.any(np.abs(flat - np.exp(-1j * kd.ks)) < SINGULAR_TOL):
        raise SingularityError(f"K+ is singular at e^(-iks), ks = {kd.ks:.6g}.")
    if kd.tail_ratio > TAIL_TOL and np.any(np.abs(flat) > 1 - 1e-3):
        logger.warning(f"Log-Fourier tail of the kernel has only decayed to {kd.tail_ratio:.2e}; "
                       f"K+ on the unit circle may be inaccurate.")
    coefficients = kd.smooth_log.copy()
    coefficients[0] /= 2
    series_part = np.polynomial.polynomial.polyval(flat, coefficients)
    return _result(np.exp(_log_kplus(kd.ks, kd.branch_weights, flat, series_part)).reshape(z.shape))


def kminus_eval(kd: KernelData, z) -> complex | np.ndarray:
    """K-(z) = K+(1/z) for |z| >= 1."""
    return kplus_eval(kd, 1 / np.asarray(z, dtype=complex))


def lambda_coeffs(kd: KernelData, N: int, radius: float | None = None) -> np.ndarray:
    """lambda_0..lambda_N, the Taylor coefficients of 1/K+ at 0."""
    if radius is None and kd.lambdas.size > N:
        return kd.lambdas[:N + 1]
    radius = radius if radius is not None else default_radius(N + 1)
    return _taylor(kd.ks, kd.branch_weights, kd.smooth_log, N + 1, radius, -1)


def kplus_taylor(kd: KernelData, N: int, radius: float | None = None) -> np.ndarray:
    """Taylor coefficients of K+ at 0, sampled on the same kind of circle as the lambdas."""
    radius = radius if radius is not None else default_radius(max(N + 1, kd.lambdas.size))
    return _taylor(kd.ks, kd.branch_weights, kd.smooth_log, N + 1, radius, 1)

# endregion
