"""
This module defines the `presets` command, which lists every named geometry with its array count and wavenumber.
"""
import math

from config import PRESETS, describe, preset_problem
from utils import ExitStatus, exit_on_error


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("presets", help="list the named geometries")
    parser.set_defaults(handler=list_presets)


@exit_on_error
def list_presets(args) -> ExitStatus:
    for name in PRESETS:
        spec = preset_problem(name)
        print(f"{name:<14} arrays={spec.n_arrays:<3} k={spec.wavenumber / math.pi:g}pi  {describe(name)}")
    return ExitStatus.SUCCESS
