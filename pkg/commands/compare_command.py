"""
This module defines the `compare` command: per-index differences between the Wiener-Hopf coefficients,
least-squares collocation and, for a split infinite line, the exact solution.

Output: <stem>_comparison.csv with the columns wh_exact, lsc_exact and wh_lsc that apply (hybrid_exact
with --hybrid), followed by one summary line per column.
"""
import logging

from commands.run_context import output_path, run_config, timed
from scattering import KernelBank, geometry, reference, solver
from scattering.errors import ConfigError
from storage import ComparisonStore
from utils import ExitStatus, exit_on_error
from validators import options, problem

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("compare", parents=parents, help="compare the solver against the oracles")
    parser.add_argument("--collocation-points", type=int, help="collocation points per scatterer (default 8)")
    parser.add_argument("--hybrid", action="store_true",
                        help="add the hybrid column: collocation in the centre, Wiener-Hopf towards the ends")
    parser.set_defaults(handler=compare)


@exit_on_error
@problem.require_problem_source
@problem.optional_truncation
@problem.optional_wavenumber
@problem.optional_incident_angle
@options.optional_threads
@options.optional_collocation_points
def compare(args) -> ExitStatus:
    config = run_config(args)
    spec = config.problem
    solver_options = config.solver
    if spec.n_arrays not in (1, 2):
        raise ConfigError(f"compare takes one or two arrays, the configuration has {spec.n_arrays}.")
    geometry.check_admissible(spec, solver_options.resonance_tol)
    N = spec.truncation
    points = args.collocation_points or solver_options.collocation_points

    timings = {}
    with timed("factorize", timings):
        kernels = KernelBank(solver_options).for_spec(spec, N)
    with timed("wiener-hopf", timings):
        if spec.n_arrays == 2:
            wh = solver.two_array_solve(spec, kernels, N, solver_options)
        else:
            wh = solver.assemble_and_solve(spec, kernels, N, solver_options)
    with timed("collocation", timings):
        lsc = reference.lsc_solve(spec, N, points, solver_options)
    exact = reference.line_solution(spec, kernels[0], N) if reference.is_infinite_line(spec) else None

    metadata = {"wavenumber": float(spec.wavenumber), "incident_angle": float(spec.incident_angle),
                "truncation": N, "preset": config.preset or "custom"}
    report = reference.comparison_report(wh, lsc, exact, metadata, include_hybrid=args.hybrid)
    for name in report.columns:
        summary = report.summary(name)
        logger.info(f"{name}: max {summary['max']:.3e}, centre {summary['center_max']:.3e}, "
                    f"interior {summary['interior_max']:.3e}, end {summary['end_max']:.3e}")

    if not ComparisonStore(output_path(config, "comparison.csv")).save(report):
        return ExitStatus.WRITE_FAILURE
    return ExitStatus.SUCCESS
