"""
Module defining the comparison report.

Classes:
    ComparisonReport (dataclass): Per-index absolute differences between solutions, ordered so that
                                  index n < 0 refers to A^(2)_{-n-1} and n >= 0 to A^(1)_n.
"""
from dataclasses import dataclass, field

import numpy as np


@dataclass(eq=False)
class ComparisonReport:
    """Data class representing a method comparison.

        Attributes:
            indices (np.ndarray): Ordered indices n, from -(N+1) to N for two arrays, 0..N for one.
            columns (dict[str, np.ndarray]): Column name -> |A_n(first) - A_n(second)| per index.
            window (int): Width of the centre and end windows used by `summary`.
            metadata (dict, optional): Wavenumber, incidence angle, truncation, preset name.
    """
    indices: np.ndarray
    columns: dict[str, np.ndarray]
    window: int
    metadata: dict = field(default_factory=dict)

    @property
    def truncation(self) -> int:
        return int(self.indices.max())

    def windows(self) -> dict[str, np.ndarray]:
        """Boolean selectors for the centre (|n| < w), end (|n| >= N+1-w) and interior windows."""
        size = np.where(self.indices < 0, -self.indices - 1, self.indices)
        center = size < self.window
        end = size >= self.truncation + 1 - self.window
        return {"center": center, "end": end, "interior": ~center & ~end}

    def summary(self, column: str) -> dict[str, float]:
        values = self.columns[column]
        result = {"max": float(values.max())}
        for name, selector in self.windows().items():
            result[f"{name}_max"] = float(values[selector].max()) if selector.any() else float("nan")
        return result

    def merged(self, other: "ComparisonReport") -> "ComparisonReport":
        if not np.array_equal(self.indices, other.indices):
            raise ValueError("Reports cover different index ranges.")
        return ComparisonReport(self.indices, {**self.columns, **other.columns}, self.window,
                                {**self.metadata, **other.metadata})
