"""
This module provides decorators that validate the problem-related arguments of a command before it runs.

The decorators read the parsed `argparse.Namespace` handed to a command handler. When a value is
invalid they log the reason and return ExitStatus.VALIDATION_FAILURE instead of calling the handler.

### Required Decorators:
1. **require_problem_source**: Either `--preset` or `--config` is given, and a given config file exists.
2. **require_coefficients**: `--coefficients` names an existing file.

### Optional Decorators:
1. **optional_truncation**: If provided, `--truncation` is a nonnegative integer.
2. **optional_incident_angle**: If provided, `--incident-angle` parses as an angle.
3. **optional_wavenumber**: If provided, `--wavenumber` is positive.
"""
import logging
import os

from config import parse_angle
from scattering.errors import ConfigError
from utils import ExitStatus

logger = logging.getLogger(__name__)


# region require

# Ensures a preset or an existing configuration file is given
def require_problem_source(func):
    def wrapper(args, *rest, **kwargs):
        preset = getattr(args, "preset", None)
        path = getattr(args, "config", None)

        if preset is None and path is None:
            logger.error("Give --preset or --config.")
            return ExitStatus.VALIDATION_FAILURE

        if path is not None and not os.path.isfile(path):
            logger.error(f"Configuration file {path} does not exist.")
            return ExitStatus.VALIDATION_FAILURE

        return func(args, *rest, **kwargs)

    wrapper.__name__ = func.__name__
    return wrapper


# Ensures 'coefficients' names an existing file
def require_coefficients(func):
    def wrapper(args, *rest, **kwargs):
        path = getattr(args, "coefficients", None)

        if path is None:
            logger.error("Give --coefficients, the file written by the solve command.")
            return ExitStatus.VALIDATION_FAILURE

        if not os.path.isfile(path):
            logger.error(f"Coefficient file {path} does not exist.")
            return ExitStatus.VALIDATION_FAILURE

        return func(args, *rest, **kwargs)

    wrapper.__name__ = func.__name__
    return wrapper

# endregion


# region optional

# Ensures 'truncation', if provided, is a nonnegative integer
def optional_truncation(func):
    def wrapper(args, *rest, **kwargs):
        truncation = getattr(args, "truncation", None)

        if truncation is not None and truncation < 0:
            logger.error(f"truncation must be greater or equal to zero, got {truncation}.")
            return ExitStatus.VALIDATION_FAILURE

        return func(args, *rest, **kwargs)

    wrapper.__name__ = func.__name__
    return wrapper


# Ensures 'incident_angle', if provided, is a number or a pi-fraction
def optional_incident_angle(func):
    def wrapper(args, *rest, **kwargs):
        angle = getattr(args, "incident_angle", None)

        if angle is not None:
            try:
                parse_angle(angle, "incident_angle")
            except ConfigError as error:
                logger.error(str(error))
                return ExitStatus.VALIDATION_FAILURE

        return func(args, *rest, **kwargs)

    wrapper.__name__ = func.__name__
    return wrapper


# Ensures 'wavenumber', if provided, is positive
def optional_wavenumber(func):
    def wrapper(args, *rest, **kwargs):
        wavenumber = getattr(args, "wavenumber", None)

        if wavenumber is not None and not wavenumber > 0:
            logger.error(f"wavenumber must be greater than zero, got {wavenumber}.")
            return ExitStatus.VALIDATION_FAILURE

        return func(args, *rest, **kwargs)

    wrapper.__name__ = func.__name__
    return wrapper

# endregion
