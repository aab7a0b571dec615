"""
Array geometry: scatterer positions, pair distances, incident phases and admissibility checks.

Scatterer n of array j sits at R_n^(j) = R0_j (cos theta0_j, sin theta0_j) + n s_j (cos alpha_j, sin alpha_j).
The incident wave exp(-i k r cos(theta - theta_I)) has wavevector -k (cos theta_I, sin theta_I), so its
value at R_n^(j) is exp(i(-k R0_j cos(theta0_j - theta_I) - k s_j n cos(alpha_j - theta_I))).

All functions are pure; array indices are 0-based.
"""
import logging

import numpy as np

from scattering.errors import GeometryError, ResonanceError
from scattering.objects import (ProblemSpec, Violation, ViolationKind, ResonanceFlags)

logger = logging.getLogger(__name__)

SMALL_SCATTERER_LIMIT = 0.1


def _check_array(spec: ProblemSpec, j: int) -> None:
    if not 0 <= j < spec.n_arrays:
        raise IndexError(f"Array index {j} out of range for {spec.n_arrays} arrays.")


def positions(spec: ProblemSpec, j: int, count: int) -> np.ndarray:
    """Positions of scatterers 0..count-1 of array j as a (count, 2) array."""
    _check_array(spec, j)
    array = spec.arrays[j]
    n = np.arange(count, dtype=float)
    origin = array.origin
    x = origin[0] + n * array.spacing * np.cos(array.angle)
    y = origin[1] + n * array.spacing * np.sin(array.angle)
    return np.column_stack([x, y])


def all_positions(spec: ProblemSpec, truncation: int | None = None) -> np.ndarray:
    """Positions of every kept scatterer, array by array, as a (J(N+1), 2) array."""
    count = (spec.truncation if truncation is None else truncation) + 1
    return np.vstack([positions(spec, j, count) for j in range(spec.n_arrays)])


def scatterer_position(spec: ProblemSpec, j: int, n: int) -> np.ndarray:
    """Cartesian position (x, y) of scatterer n of array j."""
    if n < 0:
        raise IndexError(f"Scatterer index must be nonnegative, got {n}.")
    return positions(spec, j, n + 1)[n]


def distance_table(spec: ProblemSpec, j: int, l: int, rows: int, cols: int) -> np.ndarray:
    """Lambda^(j,l)(m, n) for m = 0..rows and n = 0..cols.

    Positions are formed first and then subtracted, so the table for (l, j) is the exact transpose.
    """
    first = positions(spec, j, rows + 1)
    second = positions(spec, l, cols + 1)
    return np.hypot(first[:, None, 0] - second[None, :, 0], first[:, None, 1] - second[None, :, 1])


def pair_distance(spec: ProblemSpec, j: int, m: int, l: int, n: int) -> float:
    """Distance between scatterer m of array j and scatterer n of array l."""
    if m < 0 or n < 0:
        raise IndexError("Scatterer indices must be nonnegative.")
    first = scatterer_position(spec, j, m)
    second = scatterer_position(spec, l, n)
    return float(np.hypot(first[0] - second[0], first[1] - second[1]))


def incident_phase(spec: ProblemSpec, j: int, m) -> np.ndarray | complex:
    """exp(i k . R_m^(j)); accepts a scalar or an array of indices."""
    _check_array(spec, j)
    array = spec.arrays[j]
    k = spec.wavenumber
    m = np.asarray(m, dtype=float)
    phase = (-k * array.origin_radius * np.cos(array.origin_angle - spec.incident_angle)
             - k * array.spacing * m * np.cos(array.angle - spec.incident_angle))
    result = np.exp(1j * phase)
    return result[()] if result.ndim == 0 else result


def pole(spec: ProblemSpec, j: int) -> complex:
    """z_j = exp(i k s_j cos(alpha_j - theta_I)); incident_phase(j, m) = incident_phase(j, 0) z_j^-m."""
    _check_array(spec, j)
    array = spec.arrays[j]
    return complex(np.exp(1j * spec.wavenumber * array.spacing * np.cos(array.angle - spec.incident_angle)))


def validate(spec: ProblemSpec, check_depth: int | None = None) -> list[Violation]:
    """Overlap violations among scatterers 0..check_depth of every array (empty list when admissible)."""
    depth = spec.truncation if check_depth is None else check_depth
    if depth < spec.truncation:
        raise GeometryError(f"check_depth {depth} is smaller than the truncation {spec.truncation}.")

    violations = []
    for j, array in enumerate(spec.arrays):
        if not array.radius < array.spacing / 2:
            violations.append(Violation(ViolationKind.INTRA_ARRAY, j, 0, j, 1,
                                        f"radius {array.radius} >= spacing/2 = {array.spacing / 2}"))
        if spec.wavenumber * array.radius > SMALL_SCATTERER_LIMIT:
            logger.warning(f"Array {j + 1}: ka = {spec.wavenumber * array.radius:.3g} exceeds "
                           f"{SMALL_SCATTERER_LIMIT}; the monopole model is inaccurate.")

    for j in range(spec.n_arrays):
        for l in range(j + 1, spec.n_arrays):
            reach = spec.arrays[j].radius + spec.arrays[l].radius
            table = distance_table(spec, j, l, depth, depth)
            for m, n in np.argwhere(table <= reach):
                violations.append(Violation(ViolationKind.CROSS_ARRAY, j, int(m), l, int(n),
                                            f"distance {table[m, n]:.6g} <= a_j + a_l = {reach:.6g}"))
    return violations


def _distance_to_integer(value: float) -> float:
    return abs(value - round(value))


def resonance_report(spec: ProblemSpec, tol: float = 1e-6) -> list[ResonanceFlags]:
    """Inward and outward resonance flags, (ks/2pi)(1 +- cos(alpha - theta_I)) near an integer."""
    report = []
    for j, array in enumerate(spec.arrays):
        scale = spec.wavenumber * array.spacing / (2 * np.pi)
        cosine = np.cos(array.angle - spec.incident_angle)
        inward_value = scale * (1 + cosine)
        outward_value = scale * (1 - cosine)
        inward_distance = _distance_to_integer(inward_value)
        outward_distance = _distance_to_integer(outward_value)
        report.append(ResonanceFlags(j, float(inward_value), float(outward_value),
                                     float(inward_distance), float(outward_distance),
                                     inward_distance <= tol, outward_distance <= tol))
    return report


def check_admissible(spec: ProblemSpec, resonance_tol: float = 1e-6, check_depth: int | None = None) -> None:
    """Raise on overlap or outward resonance; log a warning for inward resonance."""
    violations = validate(spec, check_depth)
    if violations:
        raise GeometryError(f"{len(violations)} overlap violation(s), first: {violations[0].detail} "
                            f"(arrays {violations[0].j + 1}/{violations[0].l + 1}, "
                            f"scatterers {violations[0].m}/{violations[0].n}).", violations)

    flags = resonance_report(spec, resonance_tol)
    outward = [f.array for f in flags if f.outward]
    if outward:
        raise ResonanceError(f"Outward resonance on array(s) {', '.join(str(j + 1) for j in outward)}: "
                             f"the driving pole lies on the kernel singularity.", outward)
    for f in flags:
        if f.inward:
            logger.warning(f"Array {f.array + 1} is at inward resonance "
                           f"((ks/2pi)(1 + cos) = {f.inward_value:.6g}); proceeding.")
