"""
Incident, scattered and total fields, and the sound pressure level over a disk.

    Phi(r) = exp(-i k r cos(theta - theta_I)) + sum_j sum_{n=0}^{N} A^(j)_n H0(k |r - R^(j)_n|)

Grid points closer to a scatterer than max(a_j, 1.1 * cell diagonal) are masked. Sums run array by array
and, inside an array, in chunks of scatterers in increasing n; worker threads split the points, never the
sum, so the result does not depend on the thread count.
"""
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.spatial import cKDTree

from scattering import geometry, specfun
from scattering.errors import EmptyRegionError, ShapeMismatchError
from scattering.objects import FieldGrid, GridSpec, ProblemSpec, ScatteringSolution, SplRegion

logger = logging.getLogger(__name__)

SCATTERER_CHUNK = 64
POINT_BLOCK = 8192
MASK_FACTOR = 1.1


def plane_wave(spec: ProblemSpec, points: np.ndarray) -> np.ndarray:
    """Unit-amplitude plane wave at (n, 2) points."""
    points = np.asarray(points, dtype=float)
    return np.exp(-1j * spec.wavenumber * (points[:, 0] * np.cos(spec.incident_angle)
                                           + points[:, 1] * np.sin(spec.incident_angle)))


def incident_field(spec: ProblemSpec, grid: GridSpec) -> FieldGrid:
    values = plane_wave(spec, grid.points()).reshape(grid.ny, grid.nx)
    return FieldGrid(grid, values, np.zeros((grid.ny, grid.nx), dtype=bool))


def _check_solution(spec: ProblemSpec, solution: ScatteringSolution) -> None:
    if solution.n_arrays != spec.n_arrays:
        raise ShapeMismatchError(f"Solution has {solution.n_arrays} arrays, the problem {spec.n_arrays}.")


def _scattered_block(spec: ProblemSpec, solution: ScatteringSolution, points: np.ndarray) -> np.ndarray:
    total = np.zeros(points.shape[0], dtype=complex)
    count = solution.truncation + 1
    for j in range(spec.n_arrays):
        sources = geometry.positions(spec, j, count)
        coefficients = solution.coefficients[j]
        for start in range(0, count, SCATTERER_CHUNK):
            chunk = sources[start:start + SCATTERER_CHUNK]
            distance = np.hypot(points[:, None, 0] - chunk[None, :, 0], points[:, None, 1] - chunk[None, :, 1])
            total += specfun.hankel0(spec.wavenumber * distance) @ coefficients[start:start + SCATTERER_CHUNK]
    return total


def field_at(spec: ProblemSpec, solution: ScatteringSolution, points: np.ndarray, threads: int = 1) -> np.ndarray:
    """Total field at arbitrary (n, 2) points; a point on a scatterer centre raises DomainError."""
    _check_solution(spec, solution)
    points = np.atleast_2d(np.asarray(points, dtype=float))
    blocks = [points[start:start + POINT_BLOCK] for start in range(0, points.shape[0], POINT_BLOCK)]
    if threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            scattered = list(pool.map(lambda block: _scattered_block(spec, solution, block), blocks))
    else:
        scattered = [_scattered_block(spec, solution, block) for block in blocks]
    scattered = np.concatenate(scattered) if scattered else np.zeros(0, dtype=complex)
    return plane_wave(spec, points) + scattered


def grid_mask(spec: ProblemSpec, grid: GridSpec, truncation: int, mask_radius: float | None = None) -> np.ndarray:
    """True where a grid point lies within the exclusion disk of a kept scatterer."""
    points = grid.points()
    masked = np.zeros(points.shape[0], dtype=bool)
    for j, array in enumerate(spec.arrays):
        radius = mask_radius if mask_radius is not None else max(array.radius, MASK_FACTOR * grid.cell_diagonal)
        distance, _ = cKDTree(geometry.positions(spec, j, truncation + 1)).query(points)
        masked |= distance <= radius
    return masked.reshape(grid.ny, grid.nx)


def total_field(spec: ProblemSpec, solution: ScatteringSolution, grid: GridSpec, threads: int = 1,
                mask_radius: float | None = None) -> FieldGrid:
    """Phi on the grid, NaN at masked points."""
    mask = grid_mask(spec, grid, solution.truncation, mask_radius)
    points = grid.points()[~mask.ravel()]
    values = np.full(grid.ny * grid.nx, np.nan, dtype=complex)
    values[~mask.ravel()] = field_at(spec, solution, points, threads)
    logger.info(f"Evaluated field at {points.shape[0]} of {grid.nx * grid.ny} grid points")
    return FieldGrid(grid, values.reshape(grid.ny, grid.nx), mask)


def scattered_field(spec: ProblemSpec, solution: ScatteringSolution, grid: GridSpec, threads: int = 1) -> FieldGrid:
    total = total_field(spec, solution, grid, threads)
    incident = incident_field(spec, grid).values
    return FieldGrid(grid, np.where(total.mask, np.nan, total.values - incident), total.mask)


def region_points(spec: ProblemSpec, region: SplRegion, truncation: int) -> np.ndarray:
    """Lattice points inside the region disk and outside every scatterer."""
    cx, cy = region.center
    xs = np.linspace(cx - region.radius, cx + region.radius, region.resolution)
    ys = np.linspace(cy - region.radius, cy + region.radius, region.resolution)
    xx, yy = np.meshgrid(xs, ys)
    points = np.column_stack([xx.ravel(), yy.ravel()])
    keep = np.hypot(points[:, 0] - cx, points[:, 1] - cy) <= region.radius
    for j, array in enumerate(spec.arrays):
        distance, _ = cKDTree(geometry.positions(spec, j, truncation + 1)).query(points)
        keep &= distance > array.radius
    return points[keep]


def spl(spec: ProblemSpec, solution: ScatteringSolution, region: SplRegion, threads: int = 1) -> float:
    """Sound pressure level 20 log10(RMS |Phi|) over the region, in dB relative to the bare plane wave."""
    points = region_points(spec, region, solution.truncation)
    if points.shape[0] == 0:
        raise EmptyRegionError(f"No admissible sample inside the disk at {region.center} of radius {region.radius}.")
    values = field_at(spec, solution, points, threads)
    level = 20 * np.log10(np.sqrt(np.mean(np.abs(values) ** 2)))
    logger.info(f"SPL over {points.shape[0]} points: {level:.4f} dB")
    return float(level)


def default_spl_region(spec: ProblemSpec, truncation: int | None = None, resolution: int = 41) -> SplRegion:
    """Disk at the centroid of the array origins, kept clear of the nearest scatterer.

    Clearance is min(2 * smallest spacing, half the distance to the nearest scatterer). When the centroid
    sits on a scatterer (a single array) the disk has the smallest spacing as radius.
    """
    truncation = spec.truncation if truncation is None else truncation
    center = np.mean([array.origin for array in spec.arrays], axis=0)
    nearest = min(float(cKDTree(geometry.positions(spec, j, truncation + 1)).query(center)[0])
                  for j in range(spec.n_arrays))
    spacing = min(array.spacing for array in spec.arrays)
    if nearest <= max(array.radius for array in spec.arrays):
        return SplRegion((float(center[0]), float(center[1])), spacing, resolution)
    clearance = min(2 * spacing, 0.5 * nearest)
    return SplRegion((float(center[0]), float(center[1])), nearest - clearance, resolution)
