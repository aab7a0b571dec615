"""
This module defines the `diagnose` command.

It assembles the block system and writes <stem>_diagnostics.txt with the resonance values of every
array, the kernel constants (K0, extraction radius, tail ratio), the determinant identity residual of
every coupling block, the condition estimate, the spectral radius of M12 M21 for two arrays and the
energy relation (measured maximum, single-scatterer closed form and order bound per array).
With --det-sweep n1,n2,... it also writes <stem>_det_sweep.csv.
"""
import logging

from commands.run_context import output_path, run_config, timed
from scattering import KernelBank, geometry, solver
from storage import DiagnosticsStore, SweepStore
from utils import ExitStatus, exit_on_error
from validators import options, problem

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("diagnose", parents=parents, help="report system and kernel diagnostics")
    parser.add_argument("--det-sweep", help="comma separated truncations for log|det M| (e.g. 50,100,200)")
    parser.set_defaults(handler=diagnose)


def _sizes(sweep: str | None) -> list[int]:
    if not sweep:
        return []
    return [int(part) for part in sweep.split(",") if part.strip()]


@exit_on_error
@problem.require_problem_source
@problem.optional_truncation
@problem.optional_wavenumber
@problem.optional_incident_angle
@options.optional_threads
@options.optional_det_sweep
def diagnose(args) -> ExitStatus:
    config = run_config(args)
    spec = config.problem
    solver_options = config.solver
    geometry.check_admissible(spec, solver_options.resonance_tol)
    N = spec.truncation
    sizes = _sizes(args.det_sweep)

    entries = {"arrays": spec.n_arrays, "truncation": N}
    for flags in geometry.resonance_report(spec, solver_options.resonance_tol):
        entries[f"inward_value_{flags.array + 1}"] = flags.inward_value
        entries[f"outward_value_{flags.array + 1}"] = flags.outward_value

    timings = {}
    with timed("factorize", timings):
        kernels = KernelBank(solver_options).for_spec(spec, max([N] + sizes))
    for j, kd in enumerate(kernels):
        entries[f"K0_{j + 1}"] = [float(kd.K0.real), float(kd.K0.imag)]
        entries[f"extraction_radius_{j + 1}"] = float(kd.extraction_radius)
        entries[f"tail_ratio_{j + 1}"] = float(kd.tail_ratio)

    with timed("assemble", timings):
        system = solver.assemble_system(spec, kernels, N, solver_options)
    report = solver.diagnostics(spec, system, kernels)
    entries["condition_estimate"] = float(report.condition_estimate)
    if report.spectral_radius is not None:
        entries["spectral_radius"] = float(report.spectral_radius)
    for (j, l), value in sorted(report.det_identity.items()):
        entries[f"log_det_{j + 1}_{l + 1}"] = report.log_det_blocks[(j, l)]
        entries[f"det_identity_{j + 1}_{l + 1}"] = value

    with timed("solve", timings):
        solution = solver.assemble_and_solve(spec, kernels, N, solver_options, system=system)
    energy = solver.energy_residual(spec, solution)
    entries["foldy_residual"] = float(solution.foldy_residual)
    entries["energy_residual"] = energy["max"]
    entries["energy_near_zero"] = len(energy["near_zero"])
    for j in range(spec.n_arrays):
        entries[f"energy_closed_form_{j + 1}"] = energy["closed_form"][j]
        entries[f"energy_bound_{j + 1}"] = energy["bound"][j]

    if sizes:
        with timed("det-sweep", timings):
            rows = solver.determinant_sweep(spec, kernels, sizes, solver_options)
        if not SweepStore(output_path(config, "det_sweep.csv")).save(rows, spec):
            return ExitStatus.WRITE_FAILURE

    entries.update({f"{label}_seconds": seconds for label, seconds in timings.items()})
    if not DiagnosticsStore(output_path(config, "diagnostics.txt")).save(entries):
        return ExitStatus.WRITE_FAILURE
    return ExitStatus.SUCCESS
