"""
Unit tests for scattering.field.
"""
import math

import numpy as np
import pytest

from config import preset_problem
from scattering import field, geometry, reference, solver
from scattering.errors import EmptyRegionError, ShapeMismatchError
from scattering.objects import GridSpec, ScatteringSolution, SolveMethod, SplRegion


def zeros_like(spec):
    return ScatteringSolution([np.zeros(spec.truncation + 1, dtype=complex) for _ in spec.arrays], SolveMethod.FILE)


def random_solution(spec, seed=0):
    rng = np.random.default_rng(seed)
    size = spec.truncation + 1
    return ScatteringSolution([rng.standard_normal(size) + 1j * rng.standard_normal(size) for _ in spec.arrays],
                              SolveMethod.FILE)


class TestPlaneWave:
    """Tests for the incident field."""

    def test_values(self, wedge):
        points = np.array([[0.0, 0.0], [0.3, -0.2]])
        theta = wedge.incident_angle
        expected = np.exp(-1j * wedge.wavenumber * (points[:, 0] * np.cos(theta) + points[:, 1] * np.sin(theta)))
        assert np.allclose(field.plane_wave(wedge, points), expected)
        assert field.plane_wave(wedge, points)[0] == 1

    def test_helmholtz(self, wedge):
        """Five-point Laplacian plus k^2 vanishes up to the O(h^2) stencil error."""
        h = 1e-3
        centre = np.array([0.17, -0.41])
        offsets = np.array([[0, 0], [h, 0], [-h, 0], [0, h], [0, -h]])
        values = field.plane_wave(wedge, centre + offsets)
        laplacian = (values[1:].sum() - 4 * values[0]) / h ** 2
        assert abs(laplacian + wedge.wavenumber ** 2 * values[0]) <= 1e-4 * wedge.wavenumber ** 2

    def test_phase_matches_incident_phase(self, wedge):
        """Field convention and driving-phase convention agree at scatterer centres."""
        points = geometry.positions(wedge, 1, 5)
        assert np.allclose(field.plane_wave(wedge, points), geometry.incident_phase(wedge, 1, np.arange(5)))


class TestTotalField:
    """Tests for field evaluation from coefficients."""

    def test_zero_coefficients_give_incident(self, wedge):
        grid = GridSpec((-0.5, 0.5), (-0.5, 0.5), 11, 9)
        total = field.total_field(wedge, zeros_like(wedge), grid)
        incident = field.incident_field(wedge, grid)
        assert np.allclose(total.values[~total.mask], incident.values[~total.mask])

    def test_superposition(self, wedge):
        points = np.array([[0.21, 0.33], [-0.4, 0.05], [0.0, -0.27]])
        first, second = random_solution(wedge, 1), random_solution(wedge, 2)
        combined = ScatteringSolution([a + b for a, b in zip(first.coefficients, second.coefficients)],
                                      SolveMethod.FILE)
        incident = field.plane_wave(wedge, points)
        assert np.allclose(field.field_at(wedge, combined, points),
                           field.field_at(wedge, first, points) + field.field_at(wedge, second, points) - incident,
                           rtol=1e-12, atol=1e-12)

    def test_mask(self, semi_infinite):
        grid = GridSpec((-0.05, 0.45), (-0.05, 0.05), 51, 11)
        total = field.total_field(semi_infinite, random_solution(semi_infinite), grid)
        assert total.mask.any()
        assert np.all(np.isnan(total.values[total.mask]))
        assert np.all(np.isfinite(total.values[~total.mask]))
        centre = np.argmin(np.hypot(grid.points()[:, 0], grid.points()[:, 1]))
        assert total.mask.ravel()[centre]

    def test_shape_mismatch(self, wedge, semi_infinite):
        with pytest.raises(ShapeMismatchError):
            field.field_at(wedge, zeros_like(semi_infinite), np.array([[0.5, 0.5]]))

    def test_thread_count_does_not_change_values(self, semi_infinite):
        rng = np.random.default_rng(3)
        points = rng.uniform(-1, 1, (field.POINT_BLOCK + 500, 2))
        solution = random_solution(semi_infinite)
        assert np.array_equal(field.field_at(semi_infinite, solution, points, threads=1),
                              field.field_at(semi_infinite, solution, points, threads=3))

    def test_near_zero_on_scatterer_boundaries(self, wedge):
        """The Foldy solution makes the total field small on every cylinder surface."""
        direct = reference.direct_foldy_solve(wedge)
        array = wedge.arrays[0]
        angles = np.linspace(0, 2 * np.pi, 8, endpoint=False)
        centre = geometry.scatterer_position(wedge, 0, 10)
        points = centre + array.radius * np.column_stack([np.cos(angles), np.sin(angles)])
        assert np.max(np.abs(field.field_at(wedge, direct, points))) < 0.1

    def test_scattered_field(self, wedge):
        grid = GridSpec((0.3, 0.6), (0.3, 0.6), 5, 5)
        scattered = field.scattered_field(wedge, zeros_like(wedge), grid)
        assert np.allclose(scattered.valid, 0)


class TestSpl:
    """Tests for the sound pressure level."""

    def test_bare_plane_wave_is_zero_db(self, wedge):
        level = field.spl(wedge, zeros_like(wedge), SplRegion((0.5, 0.5), 0.1, 21))
        assert level == pytest.approx(0.0, abs=1e-12)

    def test_empty_region(self, semi_infinite):
        with pytest.raises(EmptyRegionError):
            field.spl(semi_infinite, zeros_like(semi_infinite), SplRegion((0.0, 0.0), 0.0005))

    def test_default_cage_region(self):
        cage = preset_problem("faraday-cage", truncation=20)
        region = field.default_spl_region(cage)
        assert region.center == pytest.approx((0.0, 0.0), abs=1e-12)
        assert region.radius == pytest.approx(0.05)

    def test_default_region_of_single_array(self, semi_infinite):
        region = field.default_spl_region(semi_infinite)
        origin = semi_infinite.arrays[0].origin
        assert region.center == pytest.approx((origin[0], origin[1]), abs=1e-12)
        assert region.radius == pytest.approx(semi_infinite.arrays[0].spacing)
        assert field.spl(semi_infinite, zeros_like(semi_infinite), region) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.slow
    def test_faraday_cage_shielding(self, bank):
        cage = preset_problem("faraday-cage", truncation=500)
        solution = solver.assemble_and_solve(cage, bank.for_spec(cage))
        level = field.spl(cage, solution, field.default_spl_region(cage))
        assert level == pytest.approx(-26.36, abs=1.5)


def test_cell_diagonal():
    grid = GridSpec((0.0, 1.0), (0.0, 2.0), 11, 21)
    assert grid.cell_diagonal == pytest.approx(math.hypot(0.1, 0.1))
