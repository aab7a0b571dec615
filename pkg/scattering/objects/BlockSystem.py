"""
Module defining the assembled block system and its diagnostics.

Classes:
    BlockSystem (dataclass): Driving vectors, coupling blocks M^(j,l) = L_j Mbar^(j,l), pole values.
    SystemDiagnostics (dataclass): Determinant identity residuals, condition estimate, spectral radius.
"""
from dataclasses import dataclass, field

import numpy as np


@dataclass(eq=False)
class BlockSystem:
    """Data class representing the block system A^(j) + sum_{l != j} M^(j,l) A^(l) = A0^(j).

        Attributes:
            truncation (int): N; every vector has N + 1 entries and every block is (N+1) x (N+1).
            inner_truncation (int): P used for the Mbar inner sums.
            driving (list[np.ndarray]): A0^(j) per array.
            poles (np.ndarray): z_j = exp(i k s_j cos(alpha_j - theta_I)).
            kminus_at_poles (np.ndarray): K-_j(z_j).
            blocks (dict[tuple[int, int], np.ndarray], optional): M^(j,l) for j != l.
            mbar (dict[tuple[int, int], np.ndarray], optional): Mbar^(j,l) for j != l.
    """
    truncation: int
    inner_truncation: int
    driving: list[np.ndarray]
    poles: np.ndarray
    kminus_at_poles: np.ndarray
    blocks: dict[tuple[int, int], np.ndarray] = field(default_factory=dict)
    mbar: dict[tuple[int, int], np.ndarray] = field(default_factory=dict)

    @property
    def n_arrays(self) -> int:
        return len(self.driving)

    def matrix(self) -> np.ndarray:
        """Dense J(N+1) x J(N+1) matrix with identity diagonal blocks."""
        size = self.truncation + 1
        full = np.eye(self.n_arrays * size, dtype=complex)
        for (j, l), block in self.blocks.items():
            full[j * size:(j + 1) * size, l * size:(l + 1) * size] = block
        return full

    def rhs(self) -> np.ndarray:
        return np.concatenate(self.driving)


@dataclass
class SystemDiagnostics:
    """Data class representing the diagnostic quantities of a block system.

        Attributes:
            det_identity (dict[tuple[int, int], float]): log|det M| - (N+1) log|lambda_0| - log|det Mbar| per block.
            log_det_blocks (dict[tuple[int, int], float]): log|det M^(j,l)| per block.
            condition_estimate (float): 1-norm condition estimate of the full matrix.
            spectral_radius (float | None): Estimate of rho(M^(1,2) M^(2,1)) when there are two arrays.
    """
    det_identity: dict[tuple[int, int], float]
    log_det_blocks: dict[tuple[int, int], float]
    condition_estimate: float
    spectral_radius: float | None = field(default=None)
