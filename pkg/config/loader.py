"""
Reading, overriding and writing run configurations (YAML via PyYAML).

Functions:
    load_config(path, preset, settings) -> RunConfig: Builds a validated configuration from a file and/or a preset.
    config_from_dict(document, settings) -> RunConfig: Same, from an already parsed document.
    config_to_dict(config) -> dict: Plain document that `config_from_dict` turns back into an equal RunConfig.
    write_config(config, path): Writes `config_to_dict` as YAML.
    apply_overrides(config, **changes) -> RunConfig: Command line overrides on top of a configuration.
"""
import dataclasses
from pathlib import Path

import yaml

from config.RunConfig import FieldOptions, OutputOptions, RunConfig
from config.Settings import Settings
from config.angles import parse_angle
from config.presets import preset_problem
from scattering.errors import ConfigError, GeometryError
from scattering.objects import ArraySpec, ProblemSpec, SolveMethod, SolverOptions, SplRegion

ARRAY_KEYS = ("spacing", "radius", "angle", "origin_radius", "origin_angle")
ANGLE_KEYS = ("angle", "origin_angle")
SOLVER_KEYS = ("inner_truncation", "contour_size", "extraction_radius", "tol_p", "edge_window", "threads",
               "resonance_tol", "collocation_points", "max_direct_unknowns", "method")
METHOD_ALIASES = {"block": SolveMethod.BLOCK, "two-array": SolveMethod.TWO_ARRAY, "neumann": SolveMethod.NEUMANN,
                  "direct": SolveMethod.DIRECT_FOLDY, "lsc": SolveMethod.LSC}


# region parsing helpers

def _number(value, name: str) -> float:
    if isinstance(value, bool):
        raise ConfigError(f"{name} must be a number, got {value!r}.")
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{name} must be a number, got {value!r}.") from None


def _integer(value, name: str, minimum: int = 0) -> int:
    number = _number(value, name)
    if number != int(number) or number < minimum:
        raise ConfigError(f"{name} must be an integer >= {minimum}, got {value!r}.")
    return int(number)


def _pair(value, name: str) -> tuple[float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ConfigError(f"{name} must be a list of two numbers, got {value!r}.")
    return _number(value[0], f"{name}[0]"), _number(value[1], f"{name}[1]")


def _section(document: dict, key: str) -> dict:
    section = document.get(key) or {}
    if not isinstance(section, dict):
        raise ConfigError(f"'{key}' must be a mapping, got {type(section).__name__}.")
    return section


def parse_method(value) -> SolveMethod:
    if isinstance(value, SolveMethod):
        return value
    if value in METHOD_ALIASES:
        return METHOD_ALIASES[value]
    try:
        return SolveMethod(value)
    except ValueError:
        raise ConfigError(f"solver.method {value!r} is not one of {', '.join(METHOD_ALIASES)}.") from None


def parse_region(value, name: str = "spl_region") -> SplRegion | None:
    """A region given as "cx,cy,r", [cx, cy, r] or {center: [cx, cy], radius: r, resolution: n}."""
    if value is None:
        return None
    if isinstance(value, str):
        value = [part for part in value.split(",") if part.strip()]
    if isinstance(value, (list, tuple)):
        if len(value) != 3:
            raise ConfigError(f"{name} needs three values cx,cy,r, got {value!r}.")
        cx, cy, radius = (_number(v, name) for v in value)
        resolution = 41
    elif isinstance(value, dict):
        cx, cy = _pair(value.get("center"), f"{name}.center")
        radius = _number(value.get("radius"), f"{name}.radius")
        resolution = _integer(value.get("resolution", 41), f"{name}.resolution", 2)
    else:
        raise ConfigError(f"{name} must be 'cx,cy,r' or a mapping, got {type(value).__name__}.")
    if radius <= 0:
        raise ConfigError(f"{name} radius must be positive, got {radius}.")
    return SplRegion((cx, cy), radius, resolution)

# endregion


def _problem(document: dict) -> ProblemSpec:
    preset = document.get("preset")
    section = _section(document, "problem")
    base = preset_problem(preset) if preset else None
    if base is None and "arrays" not in section:
        raise ConfigError("Either 'preset' or 'problem.arrays' is required.")

    wavenumber = _number(section["wavenumber"], "problem.wavenumber") if "wavenumber" in section \
        else (base.wavenumber if base else None)
    if wavenumber is None:
        raise ConfigError("problem.wavenumber is required without a preset.")
    incident_angle = parse_angle(section["incident_angle"], "problem.incident_angle") if "incident_angle" in section \
        else (base.incident_angle if base else 0.0)
    truncation = _integer(section["truncation"], "problem.truncation") if "truncation" in section \
        else (base.truncation if base else 100)

    if "arrays" in section:
        if not isinstance(section["arrays"], list) or not section["arrays"]:
            raise ConfigError("problem.arrays must be a non-empty list.")
        arrays = []
        for index, entry in enumerate(section["arrays"]):
            name = f"problem.arrays[{index}]"
            if not isinstance(entry, dict):
                raise ConfigError(f"{name} must be a mapping.")
            unknown = set(entry) - set(ARRAY_KEYS)
            if unknown:
                raise ConfigError(f"{name}: unknown key(s) {', '.join(sorted(unknown))}.")
            values = {}
            for key in ARRAY_KEYS:
                if key not in entry:
                    if key in ("origin_radius", "origin_angle"):
                        continue
                    raise ConfigError(f"{name}.{key} is required.")
                values[key] = parse_angle(entry[key], f"{name}.{key}") if key in ANGLE_KEYS \
                    else _number(entry[key], f"{name}.{key}")
            try:
                arrays.append(ArraySpec(**values))
            except GeometryError as error:
                raise ConfigError(f"{name}: {error}") from error
    else:
        arrays = list(base.arrays)

    try:
        return ProblemSpec(wavenumber, incident_angle, arrays, truncation)
    except GeometryError as error:
        raise ConfigError(f"problem: {error}") from error


def _solver(document: dict, settings: Settings) -> SolverOptions:
    section = _section(document, "solver")
    unknown = set(section) - set(SOLVER_KEYS)
    if unknown:
        raise ConfigError(f"solver: unknown key(s) {', '.join(sorted(unknown))}.")
    values = {"threads": settings.threads, "contour_size": settings.contour_size,
              "max_direct_unknowns": settings.max_direct_unknowns}
    for key in ("inner_truncation", "edge_window"):
        if section.get(key) is not None:
            values[key] = _integer(section[key], f"solver.{key}", 1 if key == "inner_truncation" else 0)
    for key in ("threads", "contour_size", "collocation_points", "max_direct_unknowns"):
        if key in section:
            values[key] = _integer(section[key], f"solver.{key}", 1)
    for key in ("tol_p", "resonance_tol"):
        if key in section:
            values[key] = _number(section[key], f"solver.{key}")
    if section.get("extraction_radius") is not None:
        radius = _number(section["extraction_radius"], "solver.extraction_radius")
        if not 0 < radius < 1:
            raise ConfigError(f"solver.extraction_radius must lie in (0, 1), got {radius}.")
        values["extraction_radius"] = radius
    if "method" in section:
        values["method"] = parse_method(section["method"])
    contour = values["contour_size"]
    if contour < 4096 or contour & (contour - 1):
        raise ConfigError(f"solver.contour_size must be a power of two >= 4096, got {contour}.")
    return SolverOptions(**values)


def _field(document: dict) -> FieldOptions:
    section = _section(document, "field")
    values = {}
    for key in ("x_range", "y_range"):
        if key in section:
            values[key] = _pair(section[key], f"field.{key}")
    for key in ("nx", "ny"):
        if key in section:
            values[key] = _integer(section[key], f"field.{key}", 1)
    if section.get("spl_region") is not None:
        values["spl_region"] = parse_region(section["spl_region"], "field.spl_region")
    return FieldOptions(**values)


def _output(document: dict, settings: Settings) -> OutputOptions:
    section = _section(document, "output")
    return OutputOptions(str(section.get("directory", settings.output_dir)), str(section.get("stem", "run")))


def config_from_dict(document: dict, settings: Settings | None = None) -> RunConfig:
    settings = settings or Settings()
    if not isinstance(document, dict):
        raise ConfigError("A configuration document must be a mapping at the top level.")
    return RunConfig(_problem(document), _solver(document, settings), _field(document),
                     _output(document, settings), document.get("preset"))


def load_config(path: str | Path | None = None, preset: str | None = None,
                settings: Settings | None = None) -> RunConfig:
    """Configuration from a YAML file, a preset name, or a file refining a preset.

    Raises:
        ConfigError: unreadable file, YAML syntax error (with line number), invalid field or unknown preset.
    """
    document = {}
    if path is not None:
        try:
            with open(path, encoding="utf-8") as handle:
                document = yaml.safe_load(handle) or {}
        except OSError as error:
            raise ConfigError(f"Cannot read configuration {path}: {error}") from error
        except yaml.YAMLError as error:
            mark = getattr(error, "problem_mark", None)
            where = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
            raise ConfigError(f"YAML error in {path}{where}: {getattr(error, 'problem', error)}") from error
    if preset is not None:
        document = {**document, "preset": preset}
    if not document:
        raise ConfigError("Give a configuration file or a preset.")
    return config_from_dict(document, settings)


def config_to_dict(config: RunConfig) -> dict:
    problem = config.problem
    document = {
        "problem": {
            "wavenumber": problem.wavenumber,
            "incident_angle": problem.incident_angle,
            "truncation": problem.truncation,
            "arrays": [dataclasses.asdict(array) for array in problem.arrays],
        },
        "solver": {key: getattr(config.solver, key) for key in SOLVER_KEYS},
        "field": {"x_range": list(config.field.x_range), "y_range": list(config.field.y_range),
                  "nx": config.field.nx, "ny": config.field.ny},
        "output": {"directory": config.output.directory, "stem": config.output.stem},
    }
    document["solver"]["method"] = config.solver.method.value
    region = config.field.spl_region
    if region is not None:
        document["field"]["spl_region"] = {"center": list(region.center), "radius": region.radius,
                                           "resolution": region.resolution}
    if config.preset:
        document["preset"] = config.preset
    return document


def write_config(config: RunConfig, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        yaml.safe_dump(config_to_dict(config), handle, sort_keys=False)


def apply_overrides(config: RunConfig, *, truncation: int | None = None, threads: int | None = None,
                    wavenumber: float | None = None, incident_angle=None, spl_region=None,
                    method=None, directory: str | None = None) -> RunConfig:
    """Command line values replace the matching configuration fields; None leaves a field alone."""
    problem = config.problem
    if truncation is not None or wavenumber is not None or incident_angle is not None:
        try:
            problem = dataclasses.replace(
                problem,
                truncation=problem.truncation if truncation is None else truncation,
                wavenumber=problem.wavenumber if wavenumber is None else wavenumber,
                incident_angle=problem.incident_angle if incident_angle is None
                else parse_angle(incident_angle, "incident_angle"))
        except GeometryError as error:
            raise ConfigError(str(error)) from error
    solver_options = config.solver
    if threads is not None:
        solver_options = dataclasses.replace(solver_options, threads=threads)
    if method is not None:
        solver_options = dataclasses.replace(solver_options, method=parse_method(method))
    field_options = config.field
    if spl_region is not None:
        field_options = dataclasses.replace(field_options, spl_region=parse_region(spl_region))
    output = config.output if directory is None else dataclasses.replace(config.output, directory=directory)
    return dataclasses.replace(config, problem=problem, solver=solver_options, field=field_options, output=output)
