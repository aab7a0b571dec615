"""
Module defining the semi-infinite array data class.

Classes:
    ArraySpec (dataclass): One semi-infinite periodic array of small sound-soft cylinders, described by
                           its spacing, cylinder radius, pointing angle and polar origin.
"""
from dataclasses import dataclass, field

import numpy as np

from scattering.errors import GeometryError


@dataclass(frozen=True)
class ArraySpec:
    """Data class representing a semi-infinite array.

        The n-th scatterer sits at origin + n * spacing * (cos(angle), sin(angle)), n = 0, 1, 2, ...

        Attributes:
            spacing (float): Distance s between neighbouring scatterers [m].
            radius (float): Cylinder radius a [m].
            angle (float): Direction alpha in which the array extends [rad].
            origin_radius (float, optional): Polar radius R0 of the first scatterer [m]. Defaults to 0.
            origin_angle (float, optional): Polar angle theta0 of the first scatterer [rad]. Defaults to 0.
    """
    spacing: float
    radius: float
    angle: float
    origin_radius: float = field(default=0.0)
    origin_angle: float = field(default=0.0)

    def __post_init__(self):
        if not self.spacing > 0:
            raise GeometryError(f"Array spacing must be positive, got {self.spacing}.")
        if not self.radius > 0:
            raise GeometryError(f"Scatterer radius must be positive, got {self.radius}.")
        if self.origin_radius < 0:
            raise GeometryError(f"Origin radius must be nonnegative, got {self.origin_radius}.")

    @property
    def origin(self) -> np.ndarray:
        return self.origin_radius * np.array([np.cos(self.origin_angle), np.sin(self.origin_angle)])

    @property
    def direction(self) -> np.ndarray:
        return np.array([np.cos(self.angle), np.sin(self.angle)])
