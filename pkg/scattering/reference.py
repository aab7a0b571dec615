"""
Independent oracles for the array coefficients and the comparison report between methods.

Oracles:
    infinite_array_exact / line_solution: closed form for a doubly infinite line split into two
        back-to-back semi-infinite arrays; every coefficient is -Phi_I(R)/K(z).
    direct_foldy_solve: dense solve of the truncated Foldy system.
    lsc_solve: monopole least-squares collocation, Dirichlet condition enforced at Q points on each cylinder.

Comparison reports order two-array solutions so that index n < 0 is A^(2)_{-n-1} and n >= 0 is A^(1)_n.
"""
import logging

import numpy as np
from scipy import linalg

from scattering import geometry, kernel, solver, specfun
from scattering.errors import (ConfigError, RankDeficiencyError, ResonanceError, ShapeMismatchError,
                               SingularityError)
from scattering.objects import (ComparisonReport, KernelData, ProblemSpec, ScatteringSolution, SolveMethod,
                                SolverOptions)

logger = logging.getLogger(__name__)

LINE_TOL = 1e-12
RANK_TOL = 1e-12


# region exact line

def _line_kernel_value(kd: KernelData, z: complex) -> complex:
    try:
        return complex(kernel.kernel_eval(kd, z))
    except SingularityError as error:
        raise ResonanceError(f"The Bloch factor {z:.6g} of the infinite line sits on a kernel singularity.") from error


def infinite_array_exact(k: float, s: float, theta_i: float, kd: KernelData, m, branch: int = 1):
    """Exact coefficients of the infinite line along the x axis, split at the origin.

    A^(1)_m = -exp(-iksm cos theta_I)/K(z), A^(2)_m = -exp(iks(m+1) cos theta_I)/K(z), z = exp(iks cos theta_I).
    """
    if branch not in (1, 2):
        raise ValueError(f"branch must be 1 or 2, got {branch}.")
    phase = k * s * np.cos(theta_i)
    value = _line_kernel_value(kd, np.exp(1j * phase))
    m = np.asarray(m, dtype=float)
    result = -np.exp(-1j * phase * m) / value if branch == 1 else -np.exp(1j * phase * (m + 1)) / value
    return result[()] if result.ndim == 0 else result


def is_infinite_line(spec: ProblemSpec, tol: float = LINE_TOL) -> bool:
    """Two arrays with equal spacing and radius, pointing in opposite directions, with no gap between them."""
    if spec.n_arrays != 2:
        return False
    first, second = spec.arrays
    if abs(first.spacing - second.spacing) > tol or abs(first.radius - second.radius) > tol:
        return False
    if np.linalg.norm(first.direction + second.direction) > tol:
        return False
    return bool(np.linalg.norm(second.origin - (first.origin - first.spacing * first.direction)) <= tol * 10)


def line_solution(spec: ProblemSpec, kd: KernelData, N: int | None = None) -> ScatteringSolution:
    """Exact solution of an infinite-line configuration in any position and orientation."""
    if not is_infinite_line(spec):
        raise ConfigError("The exact oracle needs two back-to-back arrays forming one infinite line.")
    N = spec.truncation if N is None else N
    value = _line_kernel_value(kd, geometry.pole(spec, 0))
    m = np.arange(N + 1)
    coefficients = [-geometry.incident_phase(spec, j, m) / value for j in range(2)]
    return ScatteringSolution(coefficients, SolveMethod.EXACT)

# endregion


# region dense oracles

def _check_unknowns(spec: ProblemSpec, N: int, cap: int) -> None:
    unknowns = spec.n_arrays * (N + 1)
    if unknowns > cap:
        raise ConfigError(f"{unknowns} unknowns exceed the direct-solve cap of {cap}.")


def foldy_matrix(spec: ProblemSpec, N: int) -> np.ndarray:
    """Matrix of the truncated Foldy system, self term H0(ka_j) on the diagonal."""
    k = spec.wavenumber
    size = N + 1
    full = np.empty((spec.n_arrays * size, spec.n_arrays * size), dtype=complex)
    for j, array in enumerate(spec.arrays):
        column = np.concatenate([[specfun.hankel0(k * array.radius)],
                                 specfun.hankel0(k * array.spacing * np.arange(1, size))])
        full[j * size:(j + 1) * size, j * size:(j + 1) * size] = linalg.toeplitz(column, column)
        for l in range(spec.n_arrays):
            if l != j:
                full[j * size:(j + 1) * size, l * size:(l + 1) * size] = \
                    specfun.hankel0(k * geometry.distance_table(spec, j, l, N, N))
    return full


def direct_foldy_solve(spec: ProblemSpec, N: int | None = None,
                       options: SolverOptions | None = None) -> ScatteringSolution:
    """Dense LU solve of the truncated Foldy equations for every kept scatterer."""
    options = options or SolverOptions()
    N = spec.truncation if N is None else N
    _check_unknowns(spec, N, options.max_direct_unknowns)
    rhs = -np.concatenate([geometry.incident_phase(spec, j, np.arange(N + 1)) for j in range(spec.n_arrays)])
    stacked, condition = solver.dense_solve(foldy_matrix(spec, N), rhs, "Foldy system")
    size = N + 1
    coefficients = [stacked[j * size:(j + 1) * size] for j in range(spec.n_arrays)]
    solution = ScatteringSolution(coefficients, SolveMethod.DIRECT_FOLDY, condition)
    solution.foldy_residual = solver.foldy_residual(spec, solution, edge=0)
    solution.energy_residual = solver.energy_residual(spec, solution)['max']
    return solution


def lsc_solve(spec: ProblemSpec, N: int | None = None, Q: int = 8,
              options: SolverOptions | None = None) -> ScatteringSolution:
    """Monopole least-squares collocation with Q equally spaced points on every cylinder.

    Raises:
        RankDeficiencyError: the collocation matrix has numerical rank below the number of unknowns.
    """
    options = options or SolverOptions()
    N = spec.truncation if N is None else N
    if Q < 2:
        raise ConfigError(f"Collocation needs at least 2 points per scatterer, got {Q}.")
    _check_unknowns(spec, N, options.max_direct_unknowns)

    k = spec.wavenumber
    angles = 2 * np.pi * np.arange(Q) / Q
    ring = np.column_stack([np.cos(angles), np.sin(angles)])
    centres = [geometry.positions(spec, j, N + 1) for j in range(spec.n_arrays)]
    collocation = np.vstack([(c[:, None, :] + array.radius * ring[None, :, :]).reshape(-1, 2)
                             for c, array in zip(centres, spec.arrays)])
    sources = np.vstack(centres)

    distance = np.hypot(collocation[:, None, 0] - sources[None, :, 0], collocation[:, None, 1] - sources[None, :, 1])
    matrix = specfun.hankel0(k * distance)
    rhs = -np.exp(-1j * k * (collocation[:, 0] * np.cos(spec.incident_angle)
                             + collocation[:, 1] * np.sin(spec.incident_angle)))
    stacked, _, rank, _ = linalg.lstsq(matrix, rhs, cond=RANK_TOL, lapack_driver='gelsy')
    if rank < matrix.shape[1]:
        raise RankDeficiencyError(f"Collocation matrix has rank {rank} < {matrix.shape[1]} unknowns.",
                                  int(rank), matrix.shape[1])
    size = N + 1
    coefficients = [stacked[j * size:(j + 1) * size] for j in range(spec.n_arrays)]
    logger.info(f"LSC: {matrix.shape[0]} collocation rows, {matrix.shape[1]} unknowns")
    return ScatteringSolution(coefficients, SolveMethod.LSC, extra={'collocation_points': Q})

# endregion


# region comparison

def ordered(solution: ScatteringSolution) -> tuple[np.ndarray, np.ndarray]:
    """Indices and coefficients in report order: A^(2)_N..A^(2)_0, A^(1)_0..A^(1)_N (or A_0..A_N for one array)."""
    N = solution.truncation
    if solution.n_arrays == 1:
        return np.arange(N + 1), solution.coefficients[0]
    if solution.n_arrays != 2:
        raise ShapeMismatchError(f"Comparisons take one or two arrays, got {solution.n_arrays}.")
    indices = np.arange(-(N + 1), N + 1)
    return indices, np.concatenate([solution.coefficients[1][::-1], solution.coefficients[0]])


def report_window(truncation: int) -> int:
    return max(16, (truncation + 1) // 10)


def compare(first: ScatteringSolution, second: ScatteringSolution, name: str = 'difference',
            window: int | None = None, metadata: dict | None = None) -> ComparisonReport:
    """Per-index |A(first) - A(second)| in report order."""
    if first.n_arrays != second.n_arrays or first.truncation != second.truncation:
        raise ShapeMismatchError(f"Cannot compare {first.n_arrays} arrays at N={first.truncation} "
                                 f"with {second.n_arrays} arrays at N={second.truncation}.")
    indices, a = ordered(first)
    _, b = ordered(second)
    window = report_window(first.truncation) if window is None else window
    return ComparisonReport(indices, {name: np.abs(a - b)}, window, dict(metadata or {}))


def hybrid(wh: ScatteringSolution, lsc: ScatteringSolution) -> ScatteringSolution:
    """LSC coefficients for indices below (N+1)/2, WH coefficients beyond."""
    if wh.n_arrays != lsc.n_arrays or wh.truncation != lsc.truncation:
        raise ShapeMismatchError("Hybrid needs solutions of equal shape.")
    central = np.arange(wh.truncation + 1) < (wh.truncation + 1) / 2
    coefficients = [np.where(central, b, a) for a, b in zip(wh.coefficients, lsc.coefficients)]
    return ScatteringSolution(coefficients, SolveMethod.HYBRID)


def comparison_report(wh: ScatteringSolution, lsc: ScatteringSolution | None = None,
                      exact: ScatteringSolution | None = None, metadata: dict | None = None,
                      include_hybrid: bool = False) -> ComparisonReport:
    """Every applicable column among wh_exact, lsc_exact and wh_lsc, plus hybrid_exact on request."""
    columns = []
    if exact is not None:
        columns.append(compare(wh, exact, 'wh_exact'))
        if lsc is not None:
            columns.append(compare(lsc, exact, 'lsc_exact'))
    if lsc is not None:
        columns.append(compare(wh, lsc, 'wh_lsc'))
        if exact is not None and include_hybrid:
            columns.append(compare(hybrid(wh, lsc), exact, 'hybrid_exact'))
    if not columns:
        raise ConfigError("A comparison needs an LSC solution or an exact oracle.")
    report = columns[0]
    for other in columns[1:]:
        report = report.merged(other)
    report.metadata.update(metadata or {})
    return report

# endregion
