"""
Named geometries of the standard test cases.

Every preset uses a_j = 0.001, k = 5pi and theta_I = pi/4, except lattice-pass with k = 7.5pi.
Angles are written as pi-fractions and parsed with `parse_angle`, so the radians are exact to rounding.

Presets:
    wedge, wedge-gaps, wedge-extra: two arrays meeting at a point, with a gap, or overlapping past the apex.
    faraday-cage: twelve outward arrays starting on a circle of radius 0.1.
    lattice-stop, lattice-pass: six stacked infinite lines (twelve arrays) in a stop and a pass band.
    line: the first infinite line of the lattice, two back-to-back arrays with an exact solution.
    semi-infinite: the first array of the lattice on its own.
"""
import math

from config.angles import parse_angle
from scattering.errors import ConfigError
from scattering.objects import ArraySpec, ProblemSpec

RADIUS = 0.001
WAVENUMBER = 5 * math.pi
INCIDENT_ANGLE = "pi/4"


def _array(spacing, angle, origin_angle, origin_radius) -> ArraySpec:
    return ArraySpec(spacing, RADIUS, parse_angle(angle), float(origin_radius), parse_angle(origin_angle))


def _wedge(origin_1, origin_2) -> list[ArraySpec]:
    return [_array(0.1, "5pi/6", *origin_1), _array(0.1, "-5pi/6", *origin_2)]


def _faraday_cage() -> list[ArraySpec]:
    arrays = []
    for j in range(1, 13):
        angle = (j - 1) * math.pi / 6 if j <= 7 else (j - 13) * math.pi / 6
        arrays.append(ArraySpec(0.05, RADIUS, angle, 0.1, angle))
    return arrays


def _lattice(count: int = 12) -> list[ArraySpec]:
    arrays = []
    for j in range(1, count + 1):
        if j % 2:
            arrays.append(ArraySpec(0.1, RADIUS, 0.0, 0.1 * (j - 1) / 2, -math.pi / 2))
        else:
            row = j / 2 - 1
            arrays.append(ArraySpec(0.1, RADIUS, math.pi, 0.1 * math.sqrt(1 + row ** 2), -math.pi + math.atan(row)))
    return arrays


PRESETS = {
    "wedge": (lambda: _wedge(("0", 0.0), ("-5pi/6", 0.1)), WAVENUMBER, "Point scatterer wedge"),
    "wedge-gaps": (lambda: _wedge(("5pi/6", 0.3), ("-5pi/6", 0.3)), WAVENUMBER, "Wedge with missing scatterers"),
    "wedge-extra": (lambda: _wedge(("-pi/6", 0.45), ("pi/6", 0.45)), WAVENUMBER, "Wedge with extra scatterers"),
    "faraday-cage": (_faraday_cage, WAVENUMBER, "Multilayered Faraday cage"),
    "lattice-stop": (_lattice, WAVENUMBER, "Multiple infinite arrays, stop band"),
    "lattice-pass": (_lattice, 7.5 * math.pi, "Multiple infinite arrays, pass band"),
    "line": (lambda: _lattice(2), WAVENUMBER, "Single infinite array split into two semi-infinite arrays"),
    "semi-infinite": (lambda: _lattice(1), WAVENUMBER, "Single semi-infinite array"),
}


def preset_names() -> list[str]:
    return list(PRESETS)


def describe(name: str) -> str:
    return _entry(name)[2]


def _entry(name: str):
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigError(f"Unknown preset {name!r}; choose from {', '.join(PRESETS)}.") from None


def preset_problem(name: str, truncation: int = 100) -> ProblemSpec:
    """ProblemSpec of a named preset."""
    build, wavenumber, _ = _entry(name)
    return ProblemSpec(wavenumber, parse_angle(INCIDENT_ANGLE), build(), truncation)
