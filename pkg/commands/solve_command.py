"""
This module defines the `solve` command: scattering coefficients of every array for one configuration.

Outputs (in the output directory, prefixed by the configured stem):
- <stem>_coefficients.csv: rows j, m, Re A, Im A.
- <stem>_diagnostics.txt: method, condition estimate, Foldy and energy residuals, resonance flags, timings.
- <stem>_driving.csv: the driving vectors A0 in coefficient format (with --dump-driving).
- <stem>_kernel_<j>.csv: c_n and lambda_n of every distinct kernel (with --dump-kernel).

Flags:
- --method {block,two-array,neumann,direct,lsc}: solution path; block is the default.
- --iterations: number of Neumann steps.
"""
import logging

import numpy as np

from commands.run_context import output_path, run_config, timed
from scattering import KernelBank, geometry, reference, solver
from scattering.errors import ConfigError
from scattering.objects import ScatteringSolution, SolveMethod
from storage import CoefficientStore, DiagnosticsStore, KernelStore
from utils import ExitStatus, exit_on_error
from validators import options, problem

logger = logging.getLogger(__name__)

METHOD_CHOICES = ("block", "two-array", "neumann", "direct", "lsc")
PAIR_METHODS = (SolveMethod.TWO_ARRAY, SolveMethod.NEUMANN)
SOLVE_METHODS = (SolveMethod.BLOCK, SolveMethod.DIRECT_FOLDY, SolveMethod.LSC) + PAIR_METHODS


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("solve", parents=parents, help="compute the scattering coefficients")
    parser.add_argument("--method", choices=METHOD_CHOICES, help="solution path (default: block)")
    parser.add_argument("--iterations", type=int, default=50, help="Neumann steps (neumann method only)")
    parser.add_argument("--dump-driving", action="store_true", help="also write the driving vectors A0")
    parser.add_argument("--dump-kernel", action="store_true", help="also write c_n and lambda_n of each kernel")
    parser.set_defaults(handler=solve)


def _residuals(spec, solution: ScatteringSolution, edge: int) -> ScatteringSolution:
    solution.foldy_residual = solver.foldy_residual(spec, solution, edge=edge)
    solution.energy_residual = solver.energy_residual(spec, solution)['max']
    return solution


def _solve(spec, solver_options, bank: KernelBank, iterations: int, timings: dict) -> ScatteringSolution:
    method = solver_options.method
    N = spec.truncation
    if method not in SOLVE_METHODS:
        raise ConfigError(f"solve cannot produce coefficients with method {method.value!r}.")
    if method in PAIR_METHODS and spec.n_arrays != 2:
        raise ConfigError(f"Method {method.value!r} needs exactly 2 arrays, the configuration has {spec.n_arrays}.")

    if method is SolveMethod.DIRECT_FOLDY:
        with timed("solve", timings):
            return reference.direct_foldy_solve(spec, N, solver_options)
    if method is SolveMethod.LSC:
        with timed("solve", timings):
            solution = reference.lsc_solve(spec, N, solver_options.collocation_points, solver_options)
        return _residuals(spec, solution, solver_options.edge_for(N))

    with timed("factorize", timings):
        kernels = bank.for_spec(spec, N)
    with timed("solve", timings):
        if method is SolveMethod.TWO_ARRAY:
            return solver.two_array_solve(spec, kernels, N, solver_options)
        if method is SolveMethod.NEUMANN:
            return solver.neumann_iterate(spec, kernels, N, iterations, solver_options)[-1]
        return solver.assemble_and_solve(spec, kernels, N, solver_options)


@exit_on_error
@problem.require_problem_source
@problem.optional_truncation
@problem.optional_wavenumber
@problem.optional_incident_angle
@options.optional_threads
@options.optional_iterations
def solve(args) -> ExitStatus:
    config = run_config(args)
    spec = config.problem
    solver_options = config.solver
    geometry.check_admissible(spec, solver_options.resonance_tol)

    timings = {}
    bank = KernelBank(solver_options)
    solution = _solve(spec, solver_options, bank, args.iterations, timings)

    if not CoefficientStore(output_path(config, "coefficients.csv")).save(solution, spec):
        return ExitStatus.WRITE_FAILURE

    flags = geometry.resonance_report(spec, solver_options.resonance_tol)
    entries = {
        "method": solution.method.value,
        "arrays": spec.n_arrays,
        "truncation": spec.truncation,
        "condition_estimate": float(solution.condition_estimate) if solution.condition_estimate is not None
        else float("nan"),
        "foldy_residual": float(solution.foldy_residual),
        "energy_residual": float(solution.energy_residual),
        "inward_resonance": [f.array + 1 for f in flags if f.inward],
        "outward_resonance": [f.array + 1 for f in flags if f.outward],
    }
    entries.update(solution.extra)
    entries.update({f"{label}_seconds": seconds for label, seconds in timings.items()})
    if not DiagnosticsStore(output_path(config, "diagnostics.txt")).save(entries):
        return ExitStatus.WRITE_FAILURE

    if args.dump_driving or args.dump_kernel:
        kernels = bank.for_spec(spec, spec.truncation)
        if args.dump_driving:
            driving = [solver.driving_vector(kd, spec, j, spec.truncation) for j, kd in enumerate(kernels)]
            dump = ScatteringSolution(driving, SolveMethod.DRIVING)
            if not CoefficientStore(output_path(config, "driving.csv")).save(dump, spec):
                return ExitStatus.WRITE_FAILURE
        if args.dump_kernel:
            written = set()
            for j, kd in enumerate(kernels):
                if kd.key in written:
                    continue
                written.add(kd.key)
                if not KernelStore(output_path(config, f"kernel_{j + 1}.csv")).save(kd):
                    return ExitStatus.WRITE_FAILURE

    largest = max(float(np.max(np.abs(a))) for a in solution.coefficients)
    logger.info(f"Solved {spec.n_arrays} array(s) at N={spec.truncation} with {solution.method.value}; "
                f"max |A| = {largest:.6g}")
    return ExitStatus.SUCCESS
