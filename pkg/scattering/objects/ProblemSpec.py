"""
Module defining the full scattering problem.

Classes:
    ProblemSpec (dataclass): Incident plane wave, the ordered list of semi-infinite arrays and the
                             coefficient truncation shared by every array.
"""
from dataclasses import dataclass, field

from scattering.errors import GeometryError
from scattering.objects.ArraySpec import ArraySpec


@dataclass(frozen=True)
class ProblemSpec:
    """Data class representing a scattering problem.

        Attributes:
            wavenumber (float): Wavenumber k of the incident wave [1/m].
            incident_angle (float): Incidence angle theta_I; the incident wave is exp(-i k r cos(theta - theta_I)).
            arrays (tuple[ArraySpec, ...]): The arrays, in a fixed order (array 0 is the first block row).
            truncation (int, optional): Coefficients m = 0..N are kept for every array. Defaults to 100.
    """
    wavenumber: float
    incident_angle: float
    arrays: tuple[ArraySpec, ...]
    truncation: int = field(default=100)

    def __post_init__(self):
        object.__setattr__(self, "arrays", tuple(self.arrays))
        if not self.wavenumber > 0:
            raise GeometryError(f"Wavenumber must be positive, got {self.wavenumber}.")
        if not self.arrays:
            raise GeometryError("A problem needs at least one array.")
        if int(self.truncation) != self.truncation or self.truncation < 0:
            raise GeometryError(f"Truncation must be a nonnegative integer, got {self.truncation}.")
        object.__setattr__(self, "truncation", int(self.truncation))

    @property
    def n_arrays(self) -> int:
        return len(self.arrays)
