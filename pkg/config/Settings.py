"""
Module defining the process-wide settings read from the environment.

Classes:
    Settings (dataclass): Defaults for threads, contour size, direct-solve cap, log level and output directory.

Functions:
    settings_from_env(environ) -> Settings: Parses the SCATTER_* variables, raising ConfigError on malformed values.
"""
import os
from dataclasses import dataclass, field

from scattering.errors import ConfigError

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    """Data class representing environment settings.

        Attributes:
            threads (int, optional): SCATTER_THREADS. Defaults to 1.
            contour_size (int, optional): SCATTER_CONTOUR_SIZE, a power of two >= 4096. Defaults to 8192.
            max_direct_unknowns (int, optional): SCATTER_MAX_DIRECT_UNKNOWNS. Defaults to 8000.
            log_level (str, optional): SCATTER_LOG_LEVEL. Defaults to "INFO".
            output_dir (str, optional): SCATTER_OUTPUT_DIR. Defaults to ".".
    """
    threads: int = field(default=1)
    contour_size: int = field(default=8192)
    max_direct_unknowns: int = field(default=8000)
    log_level: str = field(default="INFO")
    output_dir: str = field(default=".")


def _int_setting(environ, name: str, default: int, minimum: int) -> int:
    raw = environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}.") from None
    if value < minimum:
        raise ConfigError(f"{name} must be at least {minimum}, got {value}.")
    return value


def settings_from_env(environ=None) -> Settings:
    environ = os.environ if environ is None else environ
    contour_size = _int_setting(environ, "SCATTER_CONTOUR_SIZE", 8192, 4096)
    if contour_size & (contour_size - 1):
        raise ConfigError(f"SCATTER_CONTOUR_SIZE must be a power of two, got {contour_size}.")
    log_level = environ.get("SCATTER_LOG_LEVEL", "INFO").strip().upper() or "INFO"
    if log_level not in LOG_LEVELS:
        raise ConfigError(f"SCATTER_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got {log_level!r}.")
    return Settings(
        threads=_int_setting(environ, "SCATTER_THREADS", 1, 1),
        contour_size=contour_size,
        max_direct_unknowns=_int_setting(environ, "SCATTER_MAX_DIRECT_UNKNOWNS", 8000, 1),
        log_level=log_level,
        output_dir=environ.get("SCATTER_OUTPUT_DIR", ".").strip() or "."
    )
