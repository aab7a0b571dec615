"""
Module for storing comparison reports: columns n,<methods...> in report order plus one summary line per column.
"""
import logging

import numpy as np

from scattering.objects import ComparisonReport
from storage.text_format import NUMBER_FORMAT, format_header

logger = logging.getLogger(__name__)


class ComparisonStore:
    def __init__(self, path):
        self.path = path

    def save(self, report: ComparisonReport) -> bool:
        names = list(report.columns)
        rows = np.column_stack([report.indices] + [report.columns[name] for name in names])
        header_lines = []
        if report.metadata:
            header_lines.append(format_header(report.metadata))
        header_lines.append(",".join(["n"] + names))
        footer = "\n".join(f"{name} " + format_header(report.summary(name)) for name in names)
        try:
            np.savetxt(self.path, rows, fmt=NUMBER_FORMAT, delimiter=",", header="\n".join(header_lines),
                       footer=footer, comments="# ")
            return True
        except OSError as e:
            logger.error(f"Error writing comparison to {self.path}: {e}")
            return False
