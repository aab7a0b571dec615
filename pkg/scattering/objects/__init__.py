"""
Module importing the data classes and enums of the scattering solver.

Imports:
    ArraySpec: Data class for one semi-infinite array.
    ProblemSpec: Data class for the full problem (incident wave, arrays, truncation).
    KernelSeries: Data class for the accelerated kernel representation.
    KernelData: Data class for a factorised kernel.
    SolveMethod: Enum tagging the path that produced a solution.
    SolverOptions: Data class for numerical options.
    BlockSystem: Data class for the assembled block system.
    SystemDiagnostics: Data class for determinant and conditioning diagnostics.
    ScatteringSolution: Data class for per-array coefficient vectors.
    GridSpec: Data class for a rectangular sampling grid.
    FieldGrid: Data class for sampled fields with a validity mask.
    SplRegion: Data class for a sound-pressure-level averaging disk.
    ComparisonReport: Data class for per-index method differences.
    ViolationKind, Violation: Enum and data class describing overlapping scatterers.
    ResonanceFlags: Data class for the inward/outward resonance state of an array.
"""
from scattering.objects.ArraySpec import ArraySpec
from scattering.objects.ProblemSpec import ProblemSpec
from scattering.objects.KernelData import KernelSeries, KernelData
from scattering.objects.SolverOptions import SolveMethod, SolverOptions
from scattering.objects.BlockSystem import BlockSystem, SystemDiagnostics
from scattering.objects.ScatteringSolution import ScatteringSolution
from scattering.objects.FieldGrid import GridSpec, FieldGrid, SplRegion
from scattering.objects.ComparisonReport import ComparisonReport
from scattering.objects.GeometryReport import ViolationKind, Violation, ResonanceFlags
