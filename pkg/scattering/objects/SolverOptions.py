"""
Module defining the numerical options shared by the solver, the oracles and the field evaluator.

Classes:
    SolveMethod (Enum): Tag recording which path produced a set of coefficients.
    SolverOptions (dataclass): Truncations, contour size, tolerances and parallelism.
"""
from dataclasses import dataclass, field
from enum import Enum


class SolveMethod(Enum):
    """Enum representing how a set of scattering coefficients was obtained."""
    BLOCK = 'block-solve'
    TWO_ARRAY = 'two-array'
    NEUMANN = 'neumann'
    DIRECT_FOLDY = 'direct-foldy'
    LSC = 'lsc'
    EXACT = 'exact'
    HYBRID = 'hybrid'
    DRIVING = 'driving'
    FILE = 'file'


@dataclass(frozen=True)
class SolverOptions:
    """Data class representing solver options.

        Attributes:
            inner_truncation (int, optional): P, the upper limit of the inner sum in the M-bar entries.
                                              None means max(N, 256).
            contour_size (int, optional): Initial number M of unit-circle samples. Defaults to 8192.
            extraction_radius (float, optional): Radius rho for the Taylor extraction of 1/K+.
                                                 None means max(0.95, 10^(-3/n)).
            tol_p (float, optional): Accepted change of sampled M-bar entries when P is doubled,
                                     relative to the block's largest entry. Defaults to 1e-4.
            edge_window (int, optional): Indices excluded at the truncated end when reporting
                                         residuals. None means max(16, N // 10).
            threads (int, optional): Worker threads for block assembly and field evaluation. Defaults to 1.
            resonance_tol (float, optional): Distance-to-integer below which resonance is flagged. Defaults to 1e-6.
            collocation_points (int, optional): Q, collocation points per scatterer for LSC. Defaults to 8.
            max_direct_unknowns (int, optional): Cap on the unknown count of the dense oracles. Defaults to 8000.
            method (SolveMethod, optional): Path used by the solve command. Defaults to BLOCK.
    """
    inner_truncation: int | None = field(default=None)
    contour_size: int = field(default=8192)
    extraction_radius: float | None = field(default=None)
    tol_p: float = field(default=1e-4)
    edge_window: int | None = field(default=None)
    threads: int = field(default=1)
    resonance_tol: float = field(default=1e-6)
    collocation_points: int = field(default=8)
    max_direct_unknowns: int = field(default=8000)
    method: SolveMethod = field(default=SolveMethod.BLOCK)

    def inner_for(self, truncation: int) -> int:
        if self.inner_truncation is not None:
            return int(self.inner_truncation)
        return max(truncation, 256)

    def edge_for(self, truncation: int) -> int:
        if self.edge_window is not None:
            return int(self.edge_window)
        return max(16, truncation // 10)
