"""
Module defining a complete run configuration.

Classes:
    FieldOptions (dataclass): Grid bounds and resolution plus an optional SPL region.
    OutputOptions (dataclass): Output directory and file stem.
    RunConfig (dataclass): Problem, solver options, field options, output options and preset name.
"""
import dataclasses
from dataclasses import dataclass

from scattering.objects import GridSpec, ProblemSpec, SolverOptions, SplRegion


@dataclass(frozen=True)
class FieldOptions:
    """Data class representing field sampling options.

        Attributes:
            x_range (tuple[float, float], optional): Defaults to (-1, 1).
            y_range (tuple[float, float], optional): Defaults to (-1, 1).
            nx (int, optional): Defaults to 201.
            ny (int, optional): Defaults to 201.
            spl_region (SplRegion, optional): Averaging disk; None means no SPL line is written.
    """
    x_range: tuple[float, float] = dataclasses.field(default=(-1.0, 1.0))
    y_range: tuple[float, float] = dataclasses.field(default=(-1.0, 1.0))
    nx: int = dataclasses.field(default=201)
    ny: int = dataclasses.field(default=201)
    spl_region: SplRegion | None = dataclasses.field(default=None)

    @property
    def grid(self) -> GridSpec:
        return GridSpec(tuple(self.x_range), tuple(self.y_range), self.nx, self.ny)


@dataclass(frozen=True)
class OutputOptions:
    """Data class representing where artefacts are written.

        Attributes:
            directory (str, optional): Defaults to ".".
            stem (str, optional): Prefix of every written file. Defaults to "run".
    """
    directory: str = dataclasses.field(default=".")
    stem: str = dataclasses.field(default="run")


@dataclass(frozen=True)
class RunConfig:
    """Data class representing a run.

        Attributes:
            problem (ProblemSpec): Incident wave, arrays and truncation.
            solver (SolverOptions, optional): Numerical options.
            field (FieldOptions, optional): Grid and SPL region.
            output (OutputOptions, optional): Output location.
            preset (str, optional): Name of the preset the problem started from.
    """
    problem: ProblemSpec
    solver: SolverOptions = dataclasses.field(default_factory=SolverOptions)
    field: FieldOptions = dataclasses.field(default_factory=FieldOptions)
    output: OutputOptions = dataclasses.field(default_factory=OutputOptions)
    preset: str | None = dataclasses.field(default=None)
