"""
Module defining rectangular sampling grids and sound-pressure-level regions.

Classes:
    GridSpec (dataclass): Bounds and resolution of a rectangular grid.
    FieldGrid (dataclass): Complex field samples on a GridSpec with a validity mask.
    SplRegion (dataclass): Disk over which a sound pressure level is averaged.
"""
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class GridSpec:
    """Data class representing a rectangular sampling grid.

        Attributes:
            x_range (tuple[float, float]): x_min, x_max [m].
            y_range (tuple[float, float]): y_min, y_max [m].
            nx (int): Samples along x.
            ny (int): Samples along y.
    """
    x_range: tuple[float, float]
    y_range: tuple[float, float]
    nx: int
    ny: int

    @property
    def x(self) -> np.ndarray:
        return np.linspace(self.x_range[0], self.x_range[1], self.nx)

    @property
    def y(self) -> np.ndarray:
        return np.linspace(self.y_range[0], self.y_range[1], self.ny)

    @property
    def cell_diagonal(self) -> float:
        dx = (self.x_range[1] - self.x_range[0]) / max(self.nx - 1, 1)
        dy = (self.y_range[1] - self.y_range[0]) / max(self.ny - 1, 1)
        return float(np.hypot(dx, dy))

    def points(self) -> np.ndarray:
        """Grid points as an (ny * nx, 2) array in row-major (y outer, x inner) order."""
        xx, yy = np.meshgrid(self.x, self.y)
        return np.column_stack([xx.ravel(), yy.ravel()])


@dataclass(eq=False)
class FieldGrid:
    """Data class representing a sampled field.

        Attributes:
            grid (GridSpec): Where the samples live.
            values (np.ndarray): Complex samples, shape (ny, nx); NaN at masked points.
            mask (np.ndarray): True inside an exclusion disk around a scatterer, shape (ny, nx).
    """
    grid: GridSpec
    values: np.ndarray
    mask: np.ndarray

    @property
    def valid(self) -> np.ndarray:
        return self.values[~self.mask]


@dataclass(frozen=True)
class SplRegion:
    """Data class representing a circular averaging region.

        Attributes:
            center (tuple[float, float]): Disk centre [m].
            radius (float): Disk radius [m].
            resolution (int, optional): Lattice samples across the diameter. Defaults to 41.
    """
    center: tuple[float, float]
    radius: float
    resolution: int = field(default=41)
