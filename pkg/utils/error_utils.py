"""
This module turns library exceptions into exit statuses for the command handlers.

Functions:
- status_for(error): The ExitStatus a ScatteringError maps to.
- exit_on_error(func): Decorator that logs a raised ScatteringError and returns its ExitStatus instead.
"""
import logging
from functools import wraps

from scattering.errors import (ConfigError, GeometryError, NumericalError, ResonanceError, ScatteringError,
                               ShapeMismatchError)
from utils.exit_status import ExitStatus

logger = logging.getLogger(__name__)


def status_for(error: ScatteringError) -> ExitStatus:
    if isinstance(error, (ConfigError, GeometryError, ShapeMismatchError)):
        return ExitStatus.VALIDATION_FAILURE
    if isinstance(error, ResonanceError):
        return ExitStatus.RESONANCE_REFUSAL
    if isinstance(error, NumericalError):
        return ExitStatus.NUMERICAL_FAILURE
    return ExitStatus.NUMERICAL_FAILURE


def exit_on_error(func):
    """
    Decorator mapping ScatteringError subclasses onto exit statuses.

    Args:
        func (callable): A command handler returning an ExitStatus.

    Returns:
        callable: The wrapped handler; it returns the mapped ExitStatus when the handler raises.
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ResonanceError as error:
            logger.error(f"Resonance refusal: {error}")
            return ExitStatus.RESONANCE_REFUSAL
        except ScatteringError as error:
            status = status_for(error)
            logger.error(f"{type(error).__name__}: {error}")
            if getattr(error, "diagnostics", None):
                logger.error(f"Diagnostics: {error.diagnostics}")
            return status

    return wrapper
