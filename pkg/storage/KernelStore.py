"""
Module for dumping a factorised kernel: log-Fourier coefficients c_n and lambda_n side by side.
"""
import logging

import numpy as np

from scattering.objects import KernelData
from storage.text_format import NUMBER_FORMAT, format_header

logger = logging.getLogger(__name__)


class KernelStore:
    def __init__(self, path):
        self.path = path

    def save(self, kd: KernelData) -> bool:
        count = max(kd.log_fourier.size, kd.lambdas.size)
        c = np.full(count, np.nan, dtype=complex)
        c[:kd.log_fourier.size] = kd.log_fourier
        lambdas = np.full(count, np.nan, dtype=complex)
        lambdas[:kd.lambdas.size] = kd.lambdas
        rows = np.column_stack([np.arange(count), c.real, c.imag, lambdas.real, lambdas.imag])
        header = format_header({"k": float(kd.wavenumber), "s": float(kd.spacing), "a": float(kd.radius),
                                "contour_size": kd.contour_size, "K0_re": float(kd.K0.real),
                                "K0_im": float(kd.K0.imag)})
        try:
            np.savetxt(self.path, rows, fmt=NUMBER_FORMAT, delimiter=",",
                       header=f"{header}\nn,c_re,c_im,lambda_re,lambda_im", comments="# ")
            return True
        except OSError as e:
            logger.error(f"Error writing kernel dump to {self.path}: {e}")
            return False
