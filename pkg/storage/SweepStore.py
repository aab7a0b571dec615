"""
Module for determinant sweeps: one row per truncation and coupling block.

File layout:
    # arrays=<J> wavenumber=<k>
    # truncation,j,l,log_det,identity
    rows with j and l 1-based
"""
import logging

import numpy as np

from scattering.objects import ProblemSpec
from storage.text_format import NUMBER_FORMAT, format_header

logger = logging.getLogger(__name__)


class SweepStore:
    def __init__(self, path):
        self.path = path

    def save(self, rows: list[dict], spec: ProblemSpec) -> bool:
        table = [[entry["truncation"], j + 1, l + 1, entry["log_det"][(j, l)], entry["identity"][(j, l)]]
                 for entry in rows for (j, l) in sorted(entry["log_det"])]
        table = np.array(table, dtype=float).reshape(-1, 5)
        header = format_header({"arrays": spec.n_arrays, "wavenumber": float(spec.wavenumber)})
        try:
            np.savetxt(self.path, table, fmt=NUMBER_FORMAT, delimiter=",",
                       header=f"{header}\ntruncation,j,l,log_det,identity", comments="# ")
            return True
        except OSError as e:
            logger.error(f"Error writing determinant sweep to {self.path}: {e}")
            return False
