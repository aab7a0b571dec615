"""
Unit tests for scattering.geometry.
"""
import math

import numpy as np
import pytest

from config import preset_names, preset_problem
from scattering import geometry
from scattering.errors import GeometryError, ResonanceError
from scattering.objects import ArraySpec, ProblemSpec, ViolationKind


class TestPositions:
    """Tests for scatterer positions."""

    def test_wedge_first_array(self, wedge):
        """Array 1 of the wedge starts at the origin and extends at 5pi/6."""
        assert np.allclose(geometry.scatterer_position(wedge, 0, 0), [0.0, 0.0])
        assert np.allclose(geometry.scatterer_position(wedge, 0, 1), [-0.08660254, 0.05], atol=1e-8)

    def test_origin_is_polar_origin(self, wedge):
        """n = 0 is the Cartesian form of (R0, theta0)."""
        array = wedge.arrays[1]
        expected = 0.1 * np.array([math.cos(-5 * math.pi / 6), math.sin(-5 * math.pi / 6)])
        assert np.allclose(geometry.scatterer_position(wedge, 1, 0), expected)
        assert np.allclose(array.origin, expected)

    def test_all_positions_shape(self, wedge):
        assert geometry.all_positions(wedge).shape == (2 * 41, 2)

    def test_negative_index(self, wedge):
        with pytest.raises(IndexError):
            geometry.scatterer_position(wedge, 0, -1)


class TestDistances:
    """Tests for pair distances and distance tables."""

    def test_symmetry(self, wedge):
        """Swapping the two scatterers gives exactly the same distance."""
        for m, n in [(0, 0), (3, 7), (12, 5)]:
            assert geometry.pair_distance(wedge, 0, m, 1, n) == geometry.pair_distance(wedge, 1, n, 0, m)

    def test_table_transpose(self, wedge):
        first = geometry.distance_table(wedge, 0, 1, 10, 12)
        second = geometry.distance_table(wedge, 1, 0, 12, 10)
        assert np.array_equal(first, second.T)

    def test_same_array(self, wedge):
        assert geometry.pair_distance(wedge, 0, 4, 0, 4) == 0.0
        assert math.isclose(geometry.pair_distance(wedge, 0, 2, 0, 9), 7 * 0.1, rel_tol=1e-12)

    def test_wedge_distance_function(self, wedge):
        """Wedge distance s (m^2 + (n+1)^2 - 2m(n+1) cos 2alpha)^(1/2)."""
        alpha = 5 * math.pi / 6
        for m, n in [(0, 0), (1, 4), (9, 2), (20, 20)]:
            expected = 0.1 * math.sqrt(m ** 2 + (n + 1) ** 2 - 2 * m * (n + 1) * math.cos(2 * alpha))
            assert math.isclose(geometry.pair_distance(wedge, 0, m, 1, n), expected, rel_tol=1e-12)


class TestValidate:
    """Tests for the overlap checks."""

    @pytest.mark.parametrize("name", preset_names())
    def test_presets_admissible(self, name):
        assert geometry.validate(preset_problem(name)) == []

    def test_intra_array(self):
        spec = ProblemSpec(5 * math.pi, 0.0, [ArraySpec(0.1, 0.05, 0.5)], truncation=10)
        violations = geometry.validate(spec)
        assert len(violations) == 1
        assert violations[0].kind is ViolationKind.INTRA_ARRAY

    def test_cross_array(self):
        """Two collinear arrays sharing a position overlap there."""
        arrays = [ArraySpec(0.1, 0.001, 0.0), ArraySpec(0.1, 0.001, 0.0, 0.3, 0.0)]
        spec = ProblemSpec(5 * math.pi, 1.0, arrays, truncation=5)
        violations = geometry.validate(spec)
        assert violations
        assert all(v.kind is ViolationKind.CROSS_ARRAY for v in violations)
        assert (violations[0].m, violations[0].n) == (3, 0)

    def test_depth_below_truncation(self, wedge):
        with pytest.raises(GeometryError):
            geometry.validate(wedge, check_depth=10)


class TestIncidentPhase:
    """Tests for the incident phase at scatterer positions."""

    def test_origin(self, wedge):
        assert geometry.incident_phase(wedge, 0, 0) == pytest.approx(1.0)

    def test_wedge_value(self, wedge):
        expected = np.exp(-1j * 0.5 * math.pi * math.cos(5 * math.pi / 6 - math.pi / 4))
        assert np.isclose(geometry.incident_phase(wedge, 0, 1), expected)

    def test_unit_modulus(self, wedge):
        assert np.allclose(np.abs(geometry.incident_phase(wedge, 1, np.arange(50))), 1.0)

    def test_pole_progression(self, wedge):
        """incident_phase(j, m) = incident_phase(j, 0) z_j^-m."""
        m = np.arange(20)
        z = geometry.pole(wedge, 1)
        assert np.allclose(geometry.incident_phase(wedge, 1, m), geometry.incident_phase(wedge, 1, 0) * z ** (-m))


class TestResonance:
    """Tests for the resonance report and the admissibility check."""

    def test_quantities(self):
        spec = ProblemSpec(5 * math.pi, 0.0, [ArraySpec(0.1, 0.001, math.pi / 4)])
        flags = geometry.resonance_report(spec)[0]
        assert flags.inward_value == pytest.approx(0.25 * (1 + math.sqrt(2) / 2))
        assert flags.outward_value == pytest.approx(0.25 * (1 - math.sqrt(2) / 2))
        assert round(flags.inward_value, 3) == 0.427
        assert round(flags.outward_value, 3) == 0.073
        assert not flags.inward and not flags.outward

    def test_grazing_is_outward(self):
        spec = ProblemSpec(5 * math.pi, 0.3, [ArraySpec(0.1, 0.001, 0.3)])
        assert geometry.resonance_report(spec)[0].outward
        with pytest.raises(ResonanceError):
            geometry.check_admissible(spec)

    def test_head_on_is_inward(self, caplog):
        spec = ProblemSpec(5 * math.pi, 0.3, [ArraySpec(0.1, 0.001, 0.3 + math.pi)])
        assert geometry.resonance_report(spec)[0].inward
        geometry.check_admissible(spec)
        assert "inward resonance" in caplog.text

    def test_overlap_raises(self):
        spec = ProblemSpec(5 * math.pi, 0.0, [ArraySpec(0.1, 0.06, 0.5)], truncation=3)
        with pytest.raises(GeometryError) as error:
            geometry.check_admissible(spec)
        assert error.value.violations
