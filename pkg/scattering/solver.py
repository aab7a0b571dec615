"""
Block system of the coupled semi-infinite arrays and its solution paths.

Coefficients of array j solve

    A^(j) + sum_{l != j} M^(j,l) A^(l) = A0^(j),       M^(j,l) = L_j Mbar^(j,l)

with L_j the lower triangular Toeplitz matrix of lambda_{j,m-n} and

    Mbar^(j,l)_{nq} = sum_{p=0}^{P} lambda_{j,p} H0(k Lambda^(j,l)(p + n, q)).

Mbar depends on p and n only through p + n, so a single table G_{r,q} = H0(k Lambda(r, q)),
r = 0..N+P, is correlated with lambda column by column (scipy.signal.fftconvolve).

Functions:
    driving_vector, mbar_block, m_block: building blocks.
    assemble_system, assemble_and_solve: full dense solve with LU and one refinement step.
    two_array_solve, neumann_iterate, neumann_series, spectral_radius: the two-array closed form and its series.
    exciting_field, foldy_residual, energy_residual: consistency checks of a solution against the Foldy system.
    diagnostics, determinant_sweep, condition_estimate, log_determinants: determinant identity and conditioning.
"""
import logging
from concurrent.futures import ThreadPoolExecutor

import mpmath
import numpy as np
from scipy import linalg, signal

from scattering import geometry, kernel, specfun
from scattering.errors import (ConvergenceError, DivergenceError, ResonanceError, SingularSystemError)
from scattering.objects import (BlockSystem, KernelData, ProblemSpec, ScatteringSolution, SolveMethod,
                                SolverOptions, SystemDiagnostics)

logger = logging.getLogger(__name__)

DENSE_TOEPLITZ_LIMIT = 512
P_CHECK_SAMPLES = 4
NEAR_ZERO_FIELD = 1e-12
DIVERGENCE_STEPS = 3
POWER_ITERATIONS = 200
EXTENDED_DET_LIMIT = 64
DET_GUARD_DIGITS = 30


# region building blocks

def driving_vector(kd: KernelData, spec: ProblemSpec, j: int, N: int) -> np.ndarray:
    """A0^(j)_m = -(e^{ik.R0}/K-(z_j)) sum_{n<=m} lambda_n z_j^{n-m}, m = 0..N (the isolated-array solution)."""
    z = geometry.pole(spec, j)
    if geometry.resonance_report(spec)[j].outward:
        raise ResonanceError(f"Array {j + 1} is at outward resonance: the driving pole sits on the kernel singularity.",
                             [j])
    lambdas = kernel.lambda_coeffs(kd, N)
    m = np.arange(N + 1)
    prefactor = geometry.incident_phase(spec, j, 0) / kernel.kminus_eval(kd, z)
    return -prefactor * z ** (-m) * np.cumsum(lambdas * z ** m)


def _direct_mbar(spec: ProblemSpec, j: int, l: int, lambdas: np.ndarray, rows: np.ndarray, cols: np.ndarray,
                 inner: int) -> np.ndarray:
    k = spec.wavenumber
    first = geometry.positions(spec, j, int(rows.max()) + inner + 1)
    second = geometry.positions(spec, l, int(cols.max()) + 1)
    values = np.empty((rows.size, cols.size), dtype=complex)
    for a, n in enumerate(rows):
        shifted = first[n:n + inner + 1]
        for b, q in enumerate(cols):
            distance = np.hypot(shifted[:, 0] - second[q, 0], shifted[:, 1] - second[q, 1])
            values[a, b] = np.sum(lambdas[:inner + 1] * specfun.hankel0(k * distance))
    return values


def mbar_block(kd: KernelData, spec: ProblemSpec, j: int, l: int, N: int, P: int, *,
               lambdas: np.ndarray | None = None, tol_p: float = 1e-4) -> np.ndarray:
    """Mbar^(j,l) of size (N+1) x (N+1).

    Args:
        kd: Factorised kernel of array j.
        spec: Problem.
        j: Receiving array.
        l: Emitting array, l != j.
        N: Truncation.
        P: Upper limit of the inner sum over p.
        lambdas: Replacement for lambda_0..lambda_P; skips the P-doubling test when given.
        tol_p: Accepted change of 16 sampled entries when P is doubled, relative to max |Mbar|.

    Raises:
        ConvergenceError: the P-doubling test fails.
    """
    if j == l:
        raise ValueError("Mbar is only defined between different arrays.")
    check = lambdas is None
    if lambdas is None:
        lambdas = kernel.lambda_coeffs(kd, 2 * P)
    lambdas = np.asarray(lambdas, dtype=complex)

    table = specfun.hankel0(spec.wavenumber * geometry.distance_table(spec, j, l, N + P, N))
    mbar = signal.fftconvolve(table, lambdas[P::-1, None], mode='valid', axes=0)

    if check:
        samples = np.unique(np.linspace(0, N, P_CHECK_SAMPLES).astype(int))
        coarse = _direct_mbar(spec, j, l, lambdas, samples, samples, P)
        fine = _direct_mbar(spec, j, l, lambdas, samples, samples, 2 * P)
        deviation = float(np.max(np.abs(fine - coarse)) / np.max(np.abs(mbar)))
        logger.debug(f"Mbar({j + 1},{l + 1}) P={P}: P-doubling deviation {deviation:.2e}")
        if deviation > tol_p:
            raise ConvergenceError(f"Mbar({j + 1},{l + 1}) changes by {deviation:.2e} > {tol_p:.0e} "
                                   f"when the inner truncation is doubled from {P}.")
    return mbar


def m_block(kd: KernelData | None, mbar: np.ndarray, *, lambdas: np.ndarray | None = None) -> np.ndarray:
    """M = L_j Mbar with L_j lower triangular Toeplitz in lambda_{j,m-n}."""
    size = mbar.shape[0]
    lambdas = kernel.lambda_coeffs(kd, size - 1) if lambdas is None else np.asarray(lambdas, dtype=complex)[:size]
    if size <= DENSE_TOEPLITZ_LIMIT:
        lower = linalg.toeplitz(lambdas, np.zeros(size, dtype=complex))
        return lower @ mbar
    return signal.fftconvolve(mbar, lambdas[:, None], axes=0)[:size]

# endregion


# region assembly and solves

def _kernel_for(kernels, j: int) -> KernelData:
    return kernels[j]


def assemble_system(spec: ProblemSpec, kernels, N: int | None = None,
                    options: SolverOptions | None = None) -> BlockSystem:
    """Driving vectors and every coupling block, block pairs spread over options.threads workers."""
    options = options or SolverOptions()
    N = spec.truncation if N is None else N
    P = options.inner_for(N)
    J = spec.n_arrays

    driving = [driving_vector(_kernel_for(kernels, j), spec, j, N) for j in range(J)]
    poles = np.array([geometry.pole(spec, j) for j in range(J)])
    kminus = np.array([kernel.kminus_eval(_kernel_for(kernels, j), poles[j]) for j in range(J)])

    def build(pair):
        j, l = pair
        kd = _kernel_for(kernels, j)
        mbar = mbar_block(kd, spec, j, l, N, P, tol_p=options.tol_p)
        return pair, mbar, m_block(kd, mbar)

    pairs = [(j, l) for j in range(J) for l in range(J) if j != l]
    if options.threads > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=options.threads) as pool:
            built = list(pool.map(build, pairs))
    else:
        built = [build(pair) for pair in pairs]

    system = BlockSystem(N, P, driving, poles, kminus)
    for pair, mbar, block in built:
        system.mbar[pair] = mbar
        system.blocks[pair] = block
    return system


def condition_estimate(matrix: np.ndarray, lu: np.ndarray | None = None) -> float:
    """1-norm condition number estimate from an LU factorisation (LAPACK gecon)."""
    if lu is None:
        lu, _ = linalg.lu_factor(matrix)
    anorm = np.linalg.norm(matrix, 1)
    gecon, = linalg.get_lapack_funcs(('gecon',), (lu,))
    rcond, _ = gecon(lu, anorm, norm='1')
    return float(np.inf) if rcond == 0 else float(1 / rcond)


def dense_solve(matrix: np.ndarray, rhs: np.ndarray, what: str) -> tuple[np.ndarray, float]:
    lu, piv = linalg.lu_factor(matrix)
    condition = condition_estimate(matrix, lu)
    if not condition < 1 / np.finfo(float).eps:
        logger.error(f"{what}: condition estimate {condition:.3g}")
        raise SingularSystemError(f"{what} is numerically singular (condition estimate {condition:.3g}).",
                                  {'condition_estimate': condition})
    solution = linalg.lu_solve((lu, piv), rhs)
    solution += linalg.lu_solve((lu, piv), rhs - matrix @ solution)
    return solution, condition


def solve_system(system: BlockSystem) -> tuple[list[np.ndarray], float]:
    """Coefficients and condition estimate of an assembled system."""
    if system.n_arrays == 1:
        return [system.driving[0].copy()], 1.0
    stacked, condition = dense_solve(system.matrix(), system.rhs(), "Block system")
    size = system.truncation + 1
    return [stacked[j * size:(j + 1) * size] for j in range(system.n_arrays)], condition


def _finish(spec: ProblemSpec, coefficients: list[np.ndarray], method: SolveMethod, condition: float | None,
            options: SolverOptions, **extra) -> ScatteringSolution:
    solution = ScatteringSolution(coefficients, method, condition, extra=dict(extra))
    solution.foldy_residual = foldy_residual(spec, solution, edge=options.edge_for(solution.truncation))
    solution.energy_residual = energy_residual(spec, solution)['max']
    logger.info(f"{method.value}: condition {condition if condition is not None else float('nan'):.4g}, "
                f"interior Foldy residual {solution.foldy_residual:.3e}, energy residual {solution.energy_residual:.3e}")
    return solution


def assemble_and_solve(spec: ProblemSpec, kernels, N: int | None = None, options: SolverOptions | None = None,
                       system: BlockSystem | None = None) -> ScatteringSolution:
    """Assemble the J(N+1) block system (unless given) and solve it densely."""
    options = options or SolverOptions()
    system = system or assemble_system(spec, kernels, N, options)
    coefficients, condition = solve_system(system)
    return _finish(spec, coefficients, SolveMethod.BLOCK, condition, options)


def two_array_solve(spec: ProblemSpec, kernels, N: int | None = None, options: SolverOptions | None = None, *,
                    swapped: bool = False, system: BlockSystem | None = None) -> ScatteringSolution:
    """Closed form for two arrays.

    A1 = (I - M12 M21)^-1 (A01 - M12 A02), A2 = A02 - M21 A1; with `swapped` the roles of 1 and 2 are exchanged.
    """
    options = options or SolverOptions()
    if spec.n_arrays != 2:
        raise ValueError(f"The two-array form needs exactly 2 arrays, got {spec.n_arrays}.")
    system = system or assemble_system(spec, kernels, N, options)
    first, second = (1, 0) if swapped else (0, 1)
    m_fs = system.blocks[(first, second)]
    m_sf = system.blocks[(second, first)]
    a_f, a_s = system.driving[first], system.driving[second]

    size = system.truncation + 1
    solved, condition = dense_solve(np.eye(size) - m_fs @ m_sf, a_f - m_fs @ a_s, "I - M M")
    other = a_s - m_sf @ solved
    coefficients = [other, solved] if swapped else [solved, other]
    return _finish(spec, coefficients, SolveMethod.TWO_ARRAY, condition, options, swapped=swapped)


def spectral_radius(m12: np.ndarray, m21: np.ndarray, iterations: int = POWER_ITERATIONS, seed: int = 0) -> float:
    """Power-iteration estimate of rho(M12 M21); growth averaged geometrically over the second half."""
    rng = np.random.default_rng(seed)
    vector = rng.standard_normal(m21.shape[1]) + 1j * rng.standard_normal(m21.shape[1])
    vector /= np.linalg.norm(vector)
    growth = []
    for _ in range(iterations):
        vector = m12 @ (m21 @ vector)
        norm = np.linalg.norm(vector)
        if norm == 0:
            return 0.0
        growth.append(np.log(norm))
        vector /= norm
    return float(np.exp(np.mean(growth[iterations // 2:])))


def neumann_series(m12: np.ndarray, m21: np.ndarray, a01: np.ndarray, a02: np.ndarray,
                   iterations: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Partial sums of A1 = sum_t (M12 M21)^t (A01 - M12 A02) with the matching A2 = A02 - M21 A1.

    Raises:
        DivergenceError: the spectral radius estimate is >= 1, or the increment grows three steps running
            above its starting size.
    """
    radius = spectral_radius(m12, m21)
    if radius >= 1:
        raise DivergenceError(f"Spectral radius estimate {radius:.4g} >= 1; the Neumann series diverges.")

    term = a01 - m12 @ a02
    partial = term.copy()
    iterates = [(partial.copy(), a02 - m21 @ partial)]
    initial = previous = np.linalg.norm(term)
    growing = 0
    for _ in range(iterations):
        term = m12 @ (m21 @ term)
        partial = partial + term
        iterates.append((partial.copy(), a02 - m21 @ partial))
        norm = np.linalg.norm(term)
        # transient growth below the first increment is not divergence
        growing = growing + 1 if norm > previous and norm > initial else 0
        if growing >= DIVERGENCE_STEPS:
            raise DivergenceError(f"Neumann increments grew for {DIVERGENCE_STEPS} consecutive steps.")
        previous = norm
    return iterates


def neumann_iterate(spec: ProblemSpec, kernels, N: int | None = None, iterations: int = 50,
                    options: SolverOptions | None = None,
                    system: BlockSystem | None = None) -> list[ScatteringSolution]:
    """Every Neumann iterate of the two-array problem as a solution; the last one carries the residuals."""
    options = options or SolverOptions()
    if spec.n_arrays != 2:
        raise ValueError(f"The Neumann series needs exactly 2 arrays, got {spec.n_arrays}.")
    system = system or assemble_system(spec, kernels, N, options)
    m12, m21 = system.blocks[(0, 1)], system.blocks[(1, 0)]
    radius = spectral_radius(m12, m21)
    iterates = neumann_series(m12, m21, system.driving[0], system.driving[1], iterations)
    solutions = [ScatteringSolution([a1, a2], SolveMethod.NEUMANN, extra={'iteration': t, 'spectral_radius': radius})
                 for t, (a1, a2) in enumerate(iterates)]
    solutions[-1] = _finish(spec, solutions[-1].coefficients, SolveMethod.NEUMANN, None, options,
                            iteration=len(iterates) - 1, spectral_radius=radius)
    return solutions

# endregion


# region residuals

def exciting_field(spec: ProblemSpec, solution: ScatteringSolution) -> list[np.ndarray]:
    """Phi^(j)_n: incident plus every other scatterer's monopole, evaluated at R_n^(j) (sums truncated at N)."""
    N = solution.truncation
    k = spec.wavenumber
    fields = []
    for j, array in enumerate(spec.arrays):
        ell = np.arange(1, N + 1)
        column = np.concatenate([[0], specfun.hankel0(k * array.spacing * ell)]) if N else np.zeros(1, dtype=complex)
        own = linalg.matmul_toeplitz((column, column), solution.coefficients[j]) if N else np.zeros(1, dtype=complex)
        total = geometry.incident_phase(spec, j, np.arange(N + 1)) + own
        for l in range(spec.n_arrays):
            if l != j:
                table = specfun.hankel0(k * geometry.distance_table(spec, j, l, N, N))
                total = total + table @ solution.coefficients[l]
        fields.append(total)
    return fields


def foldy_residual(spec: ProblemSpec, solution: ScatteringSolution, edge: int | None = None,
                   per_index: bool = False) -> float | list[np.ndarray]:
    """|A_m H0(ka_j) + Phi_m| over arrays; maximum over m <= N - edge unless per_index is set."""
    N = solution.truncation
    edge = SolverOptions().edge_for(N) if edge is None else edge
    residuals = []
    for j, field_j in enumerate(exciting_field(spec, solution)):
        self_term = specfun.hankel0(spec.wavenumber * spec.arrays[j].radius)
        residuals.append(np.abs(solution.coefficients[j] * self_term + field_j))
    if per_index:
        return residuals
    stop = max(N - edge, 0) + 1
    return float(max(r[:stop].max() for r in residuals))


def energy_bound(ka: float) -> float:
    """(ka / ln ka)^2, the order of the energy discrepancy of a monopole scatterer."""
    return float((ka / np.log(ka)) ** 2)


def energy_residual(spec: ProblemSpec, solution: ScatteringSolution) -> dict:
    """Per-scatterer |g|^2 + Re g with g = A / Phi.

    Returns:
        dict: 'max' over all scatterers, 'per_array' arrays of values (NaN where Phi is near zero),
              'near_zero' list of (j, n) with vanishing exciting field, 'closed_form' (1 - J0)/|H0|^2 and
              'bound' (ka/ln ka)^2 per array.
    """
    fields = exciting_field(spec, solution)
    scale = max(float(np.max(np.abs(f))) for f in fields)
    per_array, near_zero = [], []
    for j, field_j in enumerate(fields):
        small = np.abs(field_j) <= NEAR_ZERO_FIELD * scale
        for n in np.flatnonzero(small):
            near_zero.append((j, int(n)))
        g = np.where(small, np.nan, solution.coefficients[j] / np.where(small, 1, field_j))
        per_array.append(np.abs(g) ** 2 + g.real)
    if near_zero:
        logger.warning(f"Exciting field vanishes at {len(near_zero)} scatterer(s); first: array {near_zero[0][0] + 1}, "
                       f"n = {near_zero[0][1]}")

    closed_form, bound = [], []
    for array in spec.arrays:
        ka = spec.wavenumber * array.radius
        closed_form.append(float((1 - specfun.bessel_j0(ka)) / abs(specfun.hankel0(ka)) ** 2))
        bound.append(energy_bound(ka))
    return {'max': float(np.nanmax(np.concatenate(per_array))), 'per_array': per_array, 'near_zero': near_zero,
            'closed_form': closed_form, 'bound': bound}

# endregion


# region diagnostics

def _working_digits(mbar: np.ndarray) -> int:
    """Digits for an LU determinant of Mbar: guard digits, one per row, and the decades lost to |det|."""
    _, log_det = np.linalg.slogdet(mbar)
    lost = 10 * mbar.shape[0] if not np.isfinite(log_det) else max(0, int(np.ceil(-log_det / np.log(10))))
    return DET_GUARD_DIGITS + mbar.shape[0] + lost


def log_determinants(mbar: np.ndarray, lambdas: np.ndarray) -> tuple[float, float]:
    """log|det M| and log|det Mbar| with M = L Mbar, both formed and reduced in extended precision."""
    size = mbar.shape[0]
    with mpmath.workdps(_working_digits(mbar)):
        mbar_mp = mpmath.matrix([[complex(value) for value in row] for row in mbar])
        lower = mpmath.matrix(size, size)
        for m in range(size):
            for n in range(m + 1):
                lower[m, n] = complex(lambdas[m - n])
        log_det = mpmath.log(abs(mpmath.det(lower * mbar_mp)))
        log_det_bar = mpmath.log(abs(mpmath.det(mbar_mp)))
        return float(log_det), float(log_det_bar)


def diagnostics(spec: ProblemSpec, system: BlockSystem, kernels) -> SystemDiagnostics:
    """Determinant identity per block (log domain), condition estimate and, for two arrays, rho(M12 M21).

    Up to N = EXTENDED_DET_LIMIT both determinants are taken in mpmath arithmetic.
    """
    size = system.truncation + 1
    identity, log_dets = {}, {}
    for (j, l), block in system.blocks.items():
        lambdas = kernel.lambda_coeffs(_kernel_for(kernels, j), system.truncation)
        if system.truncation <= EXTENDED_DET_LIMIT:
            log_det, log_det_bar = log_determinants(system.mbar[(j, l)], lambdas)
        else:
            log_det = float(np.linalg.slogdet(block)[1])
            log_det_bar = float(np.linalg.slogdet(system.mbar[(j, l)])[1])
        log_dets[(j, l)] = log_det
        identity[(j, l)] = float(log_det - size * np.log(abs(lambdas[0])) - log_det_bar)
    condition = 1.0 if system.n_arrays == 1 else condition_estimate(system.matrix())
    radius = None
    if system.n_arrays == 2:
        radius = spectral_radius(system.blocks[(0, 1)], system.blocks[(1, 0)])
    return SystemDiagnostics(identity, log_dets, condition, radius)


def determinant_sweep(spec: ProblemSpec, kernels, sizes, options: SolverOptions | None = None) -> list[dict]:
    """log|det M^(j,l)| and the determinant identity residual for every truncation in `sizes`."""
    options = options or SolverOptions()
    rows = []
    for N in sizes:
        system = assemble_system(spec, kernels, int(N), options)
        report = diagnostics(spec, system, kernels)
        rows.append({'truncation': int(N), 'log_det': report.log_det_blocks, 'identity': report.det_identity})
        logger.debug(f"Determinant sweep N={N}: {report.log_det_blocks}")
    return rows

# endregion
