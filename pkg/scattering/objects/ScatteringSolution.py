"""
Module defining the solution data class.

Classes:
    ScatteringSolution (dataclass): Per-array coefficient vectors A^(j)_m, m = 0..N, plus the metadata
                                    of the solve that produced them.
"""
from dataclasses import dataclass, field

import numpy as np

from scattering.objects.SolverOptions import SolveMethod


@dataclass(eq=False)
class ScatteringSolution:
    """Data class representing scattering coefficients.

        A^(j)_m is only defined for m >= 0; negative indices are zero by construction and never stored.

        Attributes:
            coefficients (list[np.ndarray]): A^(j), one complex vector of length N + 1 per array.
            method (SolveMethod): Path that produced the coefficients.
            condition_estimate (float, optional): Condition estimate of the solved system. Defaults to None.
            foldy_residual (float, optional): Interior maximum of the truncated Foldy residual. Defaults to None.
            energy_residual (float, optional): max(|g|^2 + Re g) over all scatterers. Defaults to None.
            extra (dict, optional): Method specific metadata (iteration count, spectral radius, ...).
    """
    coefficients: list[np.ndarray]
    method: SolveMethod
    condition_estimate: float | None = field(default=None)
    foldy_residual: float | None = field(default=None)
    energy_residual: float | None = field(default=None)
    extra: dict = field(default_factory=dict)

    @property
    def n_arrays(self) -> int:
        return len(self.coefficients)

    @property
    def truncation(self) -> int:
        return self.coefficients[0].size - 1

    def stacked(self) -> np.ndarray:
        return np.concatenate(self.coefficients)

    def scaled(self, factor: complex) -> "ScatteringSolution":
        return ScatteringSolution([factor * a for a in self.coefficients], self.method)
