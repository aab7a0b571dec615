"""
Module for storing scattering coefficients as delimited text.

File layout:
    # arrays=<J> truncation=<N> wavenumber=<k> incident_angle=<theta_I> method=<tag>
    # j,m,re,im
    rows with j 1-based and m = 0..N

Dependencies:
    numpy: savetxt/loadtxt with '%.17g' so that values round-trip exactly.
"""
import logging

import numpy as np

from scattering.errors import ConfigError, ShapeMismatchError
from scattering.objects import ProblemSpec, ScatteringSolution, SolveMethod
from storage.text_format import NUMBER_FORMAT, format_header, header_value, read_header, read_rows

logger = logging.getLogger(__name__)

ANGLE_TOL = 1e-12


class CoefficientStore:
    """
        A store for one coefficient file.

        Methods:
            save(solution: ScatteringSolution, spec: ProblemSpec) -> bool: Writes the coefficients.
            load(spec: ProblemSpec | None) -> ScatteringSolution: Reads them back, checking J, N, k and theta_I against spec.
    """
    def __init__(self, path):
        self.path = path

    def save(self, solution: ScatteringSolution, spec: ProblemSpec) -> bool:
        N = solution.truncation
        rows = np.vstack([np.column_stack([np.full(N + 1, j + 1), np.arange(N + 1), a.real, a.imag])
                          for j, a in enumerate(solution.coefficients)])
        header = format_header({"arrays": solution.n_arrays, "truncation": N, "wavenumber": float(spec.wavenumber),
                                "incident_angle": float(spec.incident_angle), "method": solution.method.value})
        try:
            np.savetxt(self.path, rows, fmt=NUMBER_FORMAT, delimiter=",", header=f"{header}\nj,m,re,im", comments="# ")
            return True
        except OSError as e:
            logger.error(f"Error writing coefficients to {self.path}: {e}")
            return False

    def load(self, spec: ProblemSpec | None = None) -> ScatteringSolution:
        header, _ = read_header(self.path)
        arrays = header_value(header, "arrays", int)
        truncation = header_value(header, "truncation", int)
        if spec is not None:
            if arrays != spec.n_arrays or truncation != spec.truncation:
                raise ShapeMismatchError(f"{self.path} holds {arrays} arrays at N={truncation}, the configuration "
                                         f"{spec.n_arrays} arrays at N={spec.truncation}.")
            if not np.isclose(header_value(header, "wavenumber"), spec.wavenumber, rtol=1e-12, atol=0):
                raise ConfigError(f"{self.path} was computed for a different wavenumber.")
            stored_angle = header_value(header, "incident_angle")
            if abs(np.angle(np.exp(1j * (stored_angle - spec.incident_angle)))) > ANGLE_TOL:
                raise ConfigError(f"{self.path} was computed for incident angle {stored_angle:.17g}, "
                                  f"the configuration uses {spec.incident_angle:.17g}.")
        rows = read_rows(self.path, 4)
        if rows.shape[0] != arrays * (truncation + 1):
            raise ConfigError(f"{self.path}: expected {arrays * (truncation + 1)} rows, found {rows.shape[0]}.")
        coefficients = []
        for j in range(arrays):
            block = rows[j * (truncation + 1):(j + 1) * (truncation + 1)]
            if np.any(block[:, 0] != j + 1) or np.any(block[:, 1] != np.arange(truncation + 1)):
                raise ConfigError(f"{self.path}: rows of array {j + 1} are out of order.")
            coefficients.append(block[:, 2] + 1j * block[:, 3])
        return ScatteringSolution(coefficients, SolveMethod.FILE, extra={"source_method": header.get("method")})
