"""
Module for key=value diagnostics files, one entry per line, floats with 17 significant digits.
"""
import logging

from storage.text_format import NUMBER_FORMAT

logger = logging.getLogger(__name__)


def _format(value) -> str:
    if isinstance(value, float):
        return NUMBER_FORMAT % value
    if isinstance(value, (list, tuple)):
        return ",".join(_format(v) for v in value)
    return str(value)


class DiagnosticsStore:
    def __init__(self, path):
        self.path = path

    def save(self, entries: dict) -> bool:
        try:
            with open(self.path, "w", encoding="utf-8") as handle:
                for key, value in entries.items():
                    handle.write(f"{key}={_format(value)}\n")
            return True
        except OSError as e:
            logger.error(f"Error writing diagnostics to {self.path}: {e}")
            return False

    def load(self) -> dict[str, str]:
        entries = {}
        with open(self.path, encoding="utf-8") as handle:
            for line in handle:
                if "=" in line:
                    key, value = line.rstrip("\n").split("=", 1)
                    entries[key] = value
        return entries
