"""
Module importing the file stores of the scattering tool.

Imports:
    CoefficientStore: Coefficient files (also used for driving-vector dumps).
    FieldStore: Field grid files with an optional SPL line.
    ComparisonStore: Method comparison tables.
    KernelStore: Kernel dumps.
    DiagnosticsStore: key=value diagnostics.
    SweepStore: Determinant sweeps.
"""
from storage.CoefficientStore import CoefficientStore
from storage.FieldStore import FieldStore
from storage.ComparisonStore import ComparisonStore
from storage.KernelStore import KernelStore
from storage.DiagnosticsStore import DiagnosticsStore
from storage.SweepStore import SweepStore
