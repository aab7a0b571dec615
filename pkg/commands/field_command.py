"""
This module defines the `field` command: the total field on a rectangular grid from a coefficient file.

The grid comes from the configuration's `field` section, with --nx/--ny overrides. An SPL line is added
to the field file when a region is configured, when --spl-region is given, or for the Faraday cage preset;
--spl-region default picks the disk around the centroid of the array origins.
"""
import dataclasses
import logging

from commands.run_context import output_path, run_config, timed
from scattering import field
from storage import CoefficientStore, FieldStore
from utils import ExitStatus, exit_on_error
from validators import options, problem

logger = logging.getLogger(__name__)

DEFAULT_REGION_PRESETS = ("faraday-cage",)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("field", parents=parents, help="evaluate the total field on a grid")
    parser.add_argument("--coefficients", help="coefficient file written by the solve command")
    parser.add_argument("--spl-region", help="SPL disk as cx,cy,r, or 'default'")
    parser.add_argument("--nx", type=int, help="grid samples along x")
    parser.add_argument("--ny", type=int, help="grid samples along y")
    parser.set_defaults(handler=evaluate_field)


@exit_on_error
@problem.require_problem_source
@problem.require_coefficients
@problem.optional_truncation
@problem.optional_wavenumber
@problem.optional_incident_angle
@options.optional_threads
@options.optional_spl_region
@options.optional_grid_size
def evaluate_field(args) -> ExitStatus:
    config = run_config(args)
    spec = config.problem
    solution = CoefficientStore(args.coefficients).load(spec)

    field_options = config.field
    if args.nx is not None or args.ny is not None:
        field_options = dataclasses.replace(field_options, nx=args.nx or field_options.nx,
                                            ny=args.ny or field_options.ny)

    timings = {}
    with timed("field", timings):
        field_grid = field.total_field(spec, solution, field_options.grid, config.solver.threads)

    region = field_options.spl_region
    if args.spl_region == "default" or (region is None and config.preset in DEFAULT_REGION_PRESETS):
        region = field.default_spl_region(spec, solution.truncation)
    spl_db = None
    if region is not None:
        with timed("spl", timings):
            spl_db = field.spl(spec, solution, region, config.solver.threads)
        logger.info(f"SPL over the disk at ({region.center[0]:.6g}, {region.center[1]:.6g}) "
                    f"of radius {region.radius:.6g}: {spl_db:.4f} dB")

    if not FieldStore(output_path(config, "field.csv")).save(field_grid, spec, spl_db, region):
        return ExitStatus.WRITE_FAILURE
    return ExitStatus.SUCCESS
