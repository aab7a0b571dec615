"""
Module defining the kernel data classes.

Classes:
    KernelSeries (dataclass): Accelerated representation of the lattice sum
                              K(z) = H0(ka) + sum_l (z^l + z^-l) H0(ksl): the directly summed
                              remainders d_l and the weights b_j of the polylogarithm tail.
    KernelData (dataclass): Result of factorising K = K+ K- for one (k, s, a): log-Fourier data,
                            K0 = K+(0), the Taylor coefficients lambda_n of 1/K+ and the
                            quantities needed to evaluate K+ anywhere in the closed unit disk.
"""
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, eq=False)
class KernelSeries:
    """Data class holding the Kummer-subtracted form of the kernel.

        Attributes:
            wavenumber (float): k [1/m].
            spacing (float): s [m].
            radius (float): a [m].
            self_term (complex): H0(ka).
            near (np.ndarray): d_l = H0(ksl) - asymptotic part, l = 1..L0.
            far (np.ndarray): b_j, weight of Li_{j+1/2}(z e^{iks}) + Li_{j+1/2}(e^{iks}/z).
            orders (np.ndarray): Polylogarithm orders j + 1/2 matching `far`.
    """
    wavenumber: float
    spacing: float
    radius: float
    self_term: complex
    near: np.ndarray
    far: np.ndarray
    orders: np.ndarray

    @property
    def ks(self) -> float:
        return self.wavenumber * self.spacing


@dataclass(frozen=True, eq=False)
class KernelData:
    """Data class representing a factorised kernel.

        ln K+(z) = -1/2 ln(1 - w) + sum_k beta_k (1 - w)^{k/2} + p_0/2 + sum_{n>=1} p_n z^n, w = z e^{iks}

        Attributes:
            wavenumber (float): k [1/m].
            spacing (float): s [m].
            radius (float): a [m].
            contour_size (int): Number M of unit-circle samples the log-Fourier analysis converged at.
            log_fourier (np.ndarray): c_n, n = 0..M/2 - 1, with K+(z) = exp(c_0/2 + sum c_n z^n).
            K0 (complex): K+(0) = exp(c_0 / 2).
            lambdas (np.ndarray): Taylor coefficients lambda_0..lambda_n of 1/K+.
            series (KernelSeries): The accelerated kernel representation.
            branch_weights (np.ndarray): beta_1, beta_3, beta_5 of the half-integer branch terms.
            smooth_log (np.ndarray): p_n, the rapidly decaying part of the log-Fourier data.
            extraction_radius (float): Radius of the circle lambda was extracted on.
            tail_ratio (float): Largest |p_n| in the last quarter of the series over the largest |p_n|.
            annulus (tuple[float, float], optional): Inner and outer radius of the common analyticity
                                                     annulus of K+ and K-; the unit circle for real k.
    """
    wavenumber: float
    spacing: float
    radius: float
    contour_size: int
    log_fourier: np.ndarray
    K0: complex
    lambdas: np.ndarray
    series: KernelSeries
    branch_weights: np.ndarray
    smooth_log: np.ndarray
    extraction_radius: float
    tail_ratio: float
    annulus: tuple[float, float] = field(default=(1.0, 1.0))

    @property
    def ks(self) -> float:
        return self.wavenumber * self.spacing

    @property
    def key(self) -> tuple[float, float, float]:
        return self.wavenumber, self.spacing, self.radius
