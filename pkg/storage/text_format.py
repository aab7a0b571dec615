"""
Shared helpers of the plain-text artefacts: '#'-prefixed key=value header lines and '%.17g' numeric rows.
"""
import numpy as np

from scattering.errors import ConfigError

NUMBER_FORMAT = "%.17g"


def format_header(values: dict) -> str:
    return " ".join(f"{key}={NUMBER_FORMAT % value if isinstance(value, float) else value}"
                    for key, value in values.items())


def parse_header_line(line: str) -> dict[str, str]:
    text = line.lstrip("#").strip()
    values = {}
    for token in text.split():
        if "=" not in token:
            raise ConfigError(f"Malformed header token {token!r}.")
        key, value = token.split("=", 1)
        values[key] = value
    return values


def read_header(path) -> tuple[dict[str, str], list[str]]:
    """First header line as key=value pairs, and every '#' line of the file."""
    comments = []
    try:
        with open(path, encoding="utf-8") as handle:
            for line in handle:
                if line.startswith("#"):
                    comments.append(line.rstrip("\n"))
    except OSError as error:
        raise ConfigError(f"Cannot read {path}: {error}") from error
    if not comments:
        raise ConfigError(f"{path} has no header line.")
    return parse_header_line(comments[0]), comments


def read_rows(path, columns: int) -> np.ndarray:
    try:
        rows = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
    except (OSError, ValueError) as error:
        raise ConfigError(f"Cannot read rows of {path}: {error}") from error
    if rows.size and rows.shape[1] != columns:
        raise ConfigError(f"{path}: expected {columns} columns, found {rows.shape[1]}.")
    return rows.reshape(-1, columns)


def header_value(header: dict[str, str], key: str, kind=float):
    if key not in header:
        raise ConfigError(f"Header is missing '{key}'.")
    try:
        return kind(header[key])
    except ValueError:
        raise ConfigError(f"Header value {key}={header[key]!r} is not a {kind.__name__}.") from None
