"""
Module defining the data classes returned by the geometric checks.

Classes:
    ViolationKind (Enum): Intra-array or cross-array overlap.
    Violation (dataclass): One overlapping pair of scatterers.
    ResonanceFlags (dataclass): Inward/outward resonance flags of one array.
"""
from dataclasses import dataclass, field
from enum import Enum


class ViolationKind(Enum):
    """Enum representing which non-overlap condition failed."""
    INTRA_ARRAY = 'intra-array'
    CROSS_ARRAY = 'cross-array'


@dataclass(frozen=True)
class Violation:
    """Data class representing an overlapping pair.

        Attributes:
            kind (ViolationKind): Which condition failed.
            j (int): First array index (0-based).
            m (int): Scatterer index in array j.
            l (int): Second array index (0-based); equal to j for intra-array violations.
            n (int): Scatterer index in array l.
            detail (str, optional): Human readable description. Defaults to an empty string.
    """
    kind: ViolationKind
    j: int
    m: int
    l: int
    n: int
    detail: str = field(default='')


@dataclass(frozen=True)
class ResonanceFlags:
    """Data class representing the resonance state of one array.

        Attributes:
            array (int): Array index (0-based).
            inward_value (float): (ks/2pi)(1 + cos(alpha - theta_I)).
            outward_value (float): (ks/2pi)(1 - cos(alpha - theta_I)).
            inward_distance (float): Distance of inward_value to the nearest integer.
            outward_distance (float): Distance of outward_value to the nearest integer.
            inward (bool): inward_distance <= tolerance.
            outward (bool): outward_distance <= tolerance.
    """
    array: int
    inward_value: float
    outward_value: float
    inward_distance: float
    outward_distance: float
    inward: bool
    outward: bool
