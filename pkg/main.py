"""
Command line entry point of the scattering tool.

Usage:
    python main.py presets
    python main.py solve --preset wedge --truncation 100 --out results
    python main.py field --preset faraday-cage --coefficients results/run_coefficients.csv --out results
    python main.py compare --preset line --truncation 1000 --incident-angle pi/12
    python main.py diagnose --preset wedge --det-sweep 50,100,200

Exit statuses: 0 success, 1 output not written, 2 invalid input, 3 outward resonance, 4 numerical failure.
"""
import argparse
import logging
import sys

from commands import COMMANDS
from commands.run_context import common_arguments
from config import settings


def get_parser() -> argparse.ArgumentParser:
    """
    Builds the argument parser with one subcommand per module in `commands`.

    Returns:
        argparse.ArgumentParser: The configured parser; parsed arguments carry the command's `handler`.
    """
    parser = argparse.ArgumentParser(prog="scatter",
                                     description="Plane wave scattering by semi-infinite arrays of point scatterers.")
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level")
    subparsers = parser.add_subparsers(dest="command", required=True)

    parents = [common_arguments()]
    for command in COMMANDS:
        command.register(subparsers, parents)
    return parser


def main(argv=None) -> int:
    args = get_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else settings.log_level,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    return args.handler(args).value


if __name__ == "__main__":
    sys.exit(main())
