"""
Module for storing sampled fields as delimited text.

File layout:
    # x_min=.. x_max=.. y_min=.. y_max=.. nx=.. ny=.. wavenumber=.. incident_angle=..
    # x,y,re,im,mask
    nx * ny rows, y outer and x inner; masked rows carry nan and mask 1
    # spl_db=<value> region=cx,cy,r        (only when an SPL region was evaluated)
"""
import logging

import numpy as np

from scattering.objects import FieldGrid, GridSpec, ProblemSpec, SplRegion
from storage.text_format import NUMBER_FORMAT, format_header, header_value, read_header, read_rows

logger = logging.getLogger(__name__)


class FieldStore:
    """
        A store for one field file.

        Methods:
            save(field_grid, spec, spl_db, region) -> bool: Writes the grid, optionally followed by the SPL line.
            load() -> tuple[FieldGrid, float | None]: Reads the grid and the SPL value if present.
    """
    def __init__(self, path):
        self.path = path

    def save(self, field_grid: FieldGrid, spec: ProblemSpec, spl_db: float | None = None,
             region: SplRegion | None = None) -> bool:
        grid = field_grid.grid
        points = grid.points()
        values = field_grid.values.ravel()
        rows = np.column_stack([points[:, 0], points[:, 1], values.real, values.imag,
                                field_grid.mask.ravel().astype(float)])
        header = format_header({"x_min": float(grid.x_range[0]), "x_max": float(grid.x_range[1]),
                                "y_min": float(grid.y_range[0]), "y_max": float(grid.y_range[1]),
                                "nx": grid.nx, "ny": grid.ny, "wavenumber": float(spec.wavenumber),
                                "incident_angle": float(spec.incident_angle)})
        footer = ""
        if spl_db is not None:
            cx, cy = region.center
            footer = (f"spl_db={NUMBER_FORMAT % spl_db} region={NUMBER_FORMAT % cx},{NUMBER_FORMAT % cy},"
                      f"{NUMBER_FORMAT % region.radius}")
        try:
            np.savetxt(self.path, rows, fmt=NUMBER_FORMAT, delimiter=",", header=f"{header}\nx,y,re,im,mask",
                       footer=footer, comments="# ")
            return True
        except OSError as e:
            logger.error(f"Error writing field to {self.path}: {e}")
            return False

    def load(self) -> tuple[FieldGrid, float | None]:
        header, comments = read_header(self.path)
        grid = GridSpec((header_value(header, "x_min"), header_value(header, "x_max")),
                        (header_value(header, "y_min"), header_value(header, "y_max")),
                        header_value(header, "nx", int), header_value(header, "ny", int))
        rows = read_rows(self.path, 5)
        values = (rows[:, 2] + 1j * rows[:, 3]).reshape(grid.ny, grid.nx)
        mask = rows[:, 4].reshape(grid.ny, grid.nx) > 0.5
        spl_db = None
        for line in comments[1:]:
            if "spl_db=" in line:
                spl_db = float(line.split("spl_db=")[1].split()[0])
        return FieldGrid(grid, values, mask), spl_db
