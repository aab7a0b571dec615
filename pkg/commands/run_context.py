"""
Shared plumbing of the command handlers.

Functions:
- common_arguments(): Parent parser with the problem and output flags every computing command accepts.
- run_config(args): RunConfig from --config/--preset with the command line overrides applied.
- output_path(config, suffix): Path of an artefact inside the output directory, created on demand.
- timed(label, timings): Context manager recording and logging the wall time of a step.
"""
import argparse
import logging
import os
import time
from contextlib import contextmanager

from config import RunConfig, apply_overrides, load_config, settings

logger = logging.getLogger(__name__)


def common_arguments() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--preset", help="named geometry, see the presets command")
    parent.add_argument("--config", help="YAML run configuration; refines --preset when both are given")
    parent.add_argument("--truncation", type=int, help="N, the last kept scatterer index of every array")
    parent.add_argument("--threads", type=int, help="worker threads; 1 gives bit-stable output")
    parent.add_argument("--wavenumber", type=float, help="k, overrides the configured wavenumber")
    parent.add_argument("--incident-angle", help="theta_I in radians or as a pi-fraction such as pi/12")
    parent.add_argument("--out", help="output directory")
    return parent


def run_config(args: argparse.Namespace) -> RunConfig:
    config = load_config(args.config, args.preset, settings)
    region = getattr(args, "spl_region", None)
    return apply_overrides(config, truncation=args.truncation, threads=args.threads, wavenumber=args.wavenumber,
                           incident_angle=args.incident_angle,
                           spl_region=None if region == "default" else region,
                           method=getattr(args, "method", None), directory=args.out)


def output_path(config: RunConfig, suffix: str) -> str:
    os.makedirs(config.output.directory, exist_ok=True)
    return os.path.join(config.output.directory, f"{config.output.stem}_{suffix}")


@contextmanager
def timed(label: str, timings: dict):
    start = time.perf_counter()
    try:
        yield
    finally:
        timings[label] = time.perf_counter() - start
        logger.info(f"{label}: {timings[label]:.3f} s")
