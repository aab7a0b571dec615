"""
Exception hierarchy for the scattering solver.

Every failure the library can raise derives from `ScatteringError`. The three direct
families correspond to the process exit codes of the command line tool:

- ConfigError / GeometryError / ShapeMismatchError: invalid input (exit status 2).
- ResonanceError: outward-resonant configuration that the method cannot evaluate (exit status 3).
- NumericalError and its subclasses: a numerical step failed or lost accuracy (exit status 4).

The mapping itself lives in `utils.error_utils.exit_on_error`.
"""


class ScatteringError(Exception):
    """Base class for all solver errors."""


# region input

class ConfigError(ScatteringError):
    """Malformed configuration, preset name, environment setting or data file."""


class GeometryError(ScatteringError):
    """Array configuration violates an admissibility condition."""

    def __init__(self, message: str, violations: list | None = None):
        super().__init__(message)
        self.violations = violations or []


class ShapeMismatchError(ScatteringError):
    """Two solutions or a solution and a configuration disagree on N or the array count."""

# endregion


class ResonanceError(ScatteringError):
    """Outward resonance places the driving pole on a kernel singularity."""

    def __init__(self, message: str, arrays: list[int] | None = None):
        super().__init__(message)
        self.arrays = arrays or []


# region numerical

class NumericalError(ScatteringError):
    """Base class for numerical failures."""


class DomainError(NumericalError):
    """Argument outside the domain an evaluator supports."""


class SingularityError(NumericalError):
    """Evaluation requested at (or too close to) a singular point e^{±iks}."""


class WindingError(NumericalError):
    """The regularised kernel winds around zero on the contour, so its logarithm is not single-valued."""


class PrecisionLossError(NumericalError):
    """Coefficient extraction would amplify rounding errors beyond the accepted limit."""


class ConvergenceError(NumericalError):
    """A refinement test (contour doubling, inner truncation doubling, two-radius check) failed."""


class TailBoundError(NumericalError):
    """The damped series cannot meet the requested tail bound with the given number of terms."""


class SingularSystemError(NumericalError):
    """The assembled linear system is numerically singular."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class DivergenceError(NumericalError):
    """The Neumann series does not converge."""


class RankDeficiencyError(NumericalError):
    """The collocation least-squares matrix is rank deficient."""

    def __init__(self, message: str, rank: int = 0, columns: int = 0):
        super().__init__(message)
        self.rank = rank
        self.columns = columns


class EmptyRegionError(NumericalError):
    """A sound-pressure-level region contains no admissible sample point."""

# endregion
