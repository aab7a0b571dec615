"""
This module provides decorators that validate the numerical options of a command before it runs.

### Optional Decorators:
1. **optional_threads**: If provided, `--threads` is at least 1.
2. **optional_spl_region**: If provided, `--spl-region` reads as cx,cy,r with r > 0, or is "default".
3. **optional_iterations**: If provided, `--iterations` is a positive integer.
4. **optional_det_sweep**: If provided, `--det-sweep` is a comma separated list of nonnegative integers.
5. **optional_collocation_points**: If provided, `--collocation-points` is at least 2.
6. **optional_grid_size**: If provided, `--nx` and `--ny` are at least 2.
"""
import logging

from config import parse_region
from scattering.errors import ConfigError
from utils import ExitStatus

logger = logging.getLogger(__name__)


# region optional

# Ensures 'threads', if provided, is at least one
def optional_threads(func):
    def wrapper(args, *rest, **kwargs):
        threads = getattr(args, "threads", None)

        if threads is not None and threads < 1:
            logger.error(f"threads must be at least 1, got {threads}.")
            return ExitStatus.VALIDATION_FAILURE

        return func(args, *rest, **kwargs)

    wrapper.__name__ = func.__name__
    return wrapper


# Ensures 'spl_region', if provided, is cx,cy,r with a positive radius
def optional_spl_region(func):
    def wrapper(args, *rest, **kwargs):
        region = getattr(args, "spl_region", None)

        if region is not None and region != "default":
            try:
                parse_region(region, "spl_region")
            except ConfigError as error:
                logger.error(str(error))
                return ExitStatus.VALIDATION_FAILURE

        return func(args, *rest, **kwargs)

    wrapper.__name__ = func.__name__
    return wrapper


# Ensures 'iterations', if provided, is a positive integer
def optional_iterations(func):
    def wrapper(args, *rest, **kwargs):
        iterations = getattr(args, "iterations", None)

        if iterations is not None and iterations < 1:
            logger.error(f"iterations must be greater than zero, got {iterations}.")
            return ExitStatus.VALIDATION_FAILURE

        return func(args, *rest, **kwargs)

    wrapper.__name__ = func.__name__
    return wrapper


# Ensures 'det_sweep', if provided, lists nonnegative integers
def optional_det_sweep(func):
    def wrapper(args, *rest, **kwargs):
        sweep = getattr(args, "det_sweep", None)

        if sweep is not None:
            parts = [part.strip() for part in sweep.split(",") if part.strip()]
            if not parts or not all(part.isdigit() for part in parts):
                logger.error(f"det-sweep must be a comma separated list of nonnegative integers, got {sweep!r}.")
                return ExitStatus.VALIDATION_FAILURE

        return func(args, *rest, **kwargs)

    wrapper.__name__ = func.__name__
    return wrapper


# Ensures 'collocation_points', if provided, is at least two
def optional_collocation_points(func):
    def wrapper(args, *rest, **kwargs):
        points = getattr(args, "collocation_points", None)

        if points is not None and points < 2:
            logger.error(f"collocation-points must be at least 2, got {points}.")
            return ExitStatus.VALIDATION_FAILURE

        return func(args, *rest, **kwargs)

    wrapper.__name__ = func.__name__
    return wrapper


# Ensures 'nx' and 'ny', if provided, are at least two
def optional_grid_size(func):
    def wrapper(args, *rest, **kwargs):
        for name in ("nx", "ny"):
            value = getattr(args, name, None)
            if value is not None and value < 2:
                logger.error(f"{name} must be at least 2, got {value}.")
                return ExitStatus.VALIDATION_FAILURE

        return func(args, *rest, **kwargs)

    wrapper.__name__ = func.__name__
    return wrapper

# endregion
