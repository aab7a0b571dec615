"""
Unit tests for scattering.reference: the exact line, the dense Foldy solve, collocation and comparisons.
"""
import math

import numpy as np
import pytest

from config import preset_problem
from scattering import geometry, reference, solver, specfun
from scattering.errors import ConfigError, RankDeficiencyError, ShapeMismatchError
from scattering.objects import ArraySpec, ProblemSpec, ScatteringSolution, SolveMethod, SolverOptions


class TestExactLine:
    """Tests for the infinite-line oracle."""

    def test_line_preset_is_detected(self, line, wedge, semi_infinite):
        assert reference.is_infinite_line(line)
        assert not reference.is_infinite_line(wedge)
        assert not reference.is_infinite_line(semi_infinite)

    def test_gap_breaks_the_line(self):
        arrays = [ArraySpec(0.1, 0.001, 0.0), ArraySpec(0.1, 0.001, math.pi, 0.2, math.pi)]
        assert not reference.is_infinite_line(ProblemSpec(5 * math.pi, 0.3, arrays))

    def test_constant_magnitude_and_bloch_phase(self, kd, line):
        exact = reference.line_solution(line, kd)
        z = geometry.pole(line, 0)
        for a in exact.coefficients:
            assert np.allclose(np.abs(a), np.abs(a[0]), rtol=1e-12)
        assert np.allclose(exact.coefficients[0][1:], exact.coefficients[0][:-1] / z, rtol=1e-12)
        assert np.allclose(exact.coefficients[1][1:], exact.coefficients[1][:-1] * z, rtol=1e-12)

    def test_matches_axis_formula(self, kd, line):
        exact = reference.line_solution(line, kd)
        m = np.arange(line.truncation + 1)
        for branch in (1, 2):
            formula = reference.infinite_array_exact(line.wavenumber, 0.1, line.incident_angle, kd, m, branch)
            assert np.allclose(exact.coefficients[branch - 1], formula, rtol=1e-10)

    def test_bad_branch(self, kd):
        with pytest.raises(ValueError):
            reference.infinite_array_exact(5 * math.pi, 0.1, 0.3, kd, 0, branch=3)

    def test_not_a_line(self, kd, wedge):
        with pytest.raises(ConfigError):
            reference.line_solution(wedge, kd)


class TestDirectFoldy:
    """Tests for the dense truncated Foldy solve."""

    def test_single_scatterer(self):
        spec = ProblemSpec(5 * math.pi, 0.7, [ArraySpec(0.1, 0.001, 0.0, 0.2, 1.0)], truncation=0)
        direct = reference.direct_foldy_solve(spec)
        expected = -geometry.incident_phase(spec, 0, 0) / specfun.hankel0(5 * math.pi * 0.001)
        assert direct.coefficients[0][0] == pytest.approx(expected, rel=1e-12)

    def test_unknown_cap(self, wedge):
        with pytest.raises(ConfigError):
            reference.direct_foldy_solve(wedge, options=SolverOptions(max_direct_unknowns=10))

    def test_matrix_symmetric(self, wedge):
        matrix = reference.foldy_matrix(wedge, 12)
        assert np.allclose(matrix, matrix.T, rtol=1e-14)

    def test_intra_array_entries_are_hankel_values(self, semi_infinite):
        """Both off-diagonal neighbours carry H0(ks), not its conjugate."""
        matrix = reference.foldy_matrix(semi_infinite, 4)
        array = semi_infinite.arrays[0]
        ks = semi_infinite.wavenumber * array.spacing
        assert matrix[0, 1] == pytest.approx(complex(specfun.hankel0(ks)), rel=1e-14)
        assert matrix[1, 0] == pytest.approx(complex(specfun.hankel0(ks)), rel=1e-14)
        assert matrix[0, 3] == pytest.approx(complex(specfun.hankel0(3 * ks)), rel=1e-14)
        assert matrix[2, 2] == pytest.approx(complex(specfun.hankel0(semi_infinite.wavenumber * array.radius)),
                                             rel=1e-14)


class TestLsc:
    """Tests for least-squares collocation."""

    def test_single_scatterer_within_ka_squared(self):
        spec = ProblemSpec(5 * math.pi, 0.7, [ArraySpec(0.1, 0.001, 0.0)], truncation=0)
        ka = 5 * math.pi * 0.001
        lsc = reference.lsc_solve(spec, Q=8)
        monopole = -1 / specfun.hankel0(ka)
        relative = abs(lsc.coefficients[0][0] - monopole) / abs(monopole)
        assert relative == pytest.approx(ka ** 2 / 4, rel=1e-3)

    def test_close_to_direct_foldy(self, wedge):
        direct = reference.direct_foldy_solve(wedge, 20)
        lsc = reference.lsc_solve(wedge, 20)
        difference = np.abs(lsc.stacked() - direct.stacked()).max() / np.abs(direct.stacked()).max()
        assert difference < 1e-2

    def test_collocation_count_converged(self, wedge):
        coarse = reference.lsc_solve(wedge, 10, Q=8)
        fine = reference.lsc_solve(wedge, 10, Q=16)
        assert np.abs(coarse.stacked() - fine.stacked()).max() <= 1e-6 * np.abs(fine.stacked()).max()
        assert fine.extra["collocation_points"] == 16

    def test_duplicate_arrays_are_rank_deficient(self):
        array = ArraySpec(0.1, 0.001, 0.0)
        spec = ProblemSpec(5 * math.pi, 0.3, [array, array], truncation=4)
        with pytest.raises(RankDeficiencyError):
            reference.lsc_solve(spec)

    def test_too_few_points(self, wedge):
        with pytest.raises(ConfigError):
            reference.lsc_solve(wedge, Q=1)


class TestComparison:
    """Tests for ordering, windows and the comparison report."""

    @staticmethod
    def pair(N, offset=0.0):
        first = np.arange(N + 1) + offset + 0j
        second = -np.arange(N + 1) + 0j
        return ScatteringSolution([first, second], SolveMethod.FILE)

    def test_ordering(self):
        indices, values = reference.ordered(self.pair(3))
        assert list(indices) == [-4, -3, -2, -1, 0, 1, 2, 3]
        assert list(values.real) == [-3, -2, -1, 0, 0, 1, 2, 3]

    def test_single_array_ordering(self):
        solution = ScatteringSolution([np.arange(5) + 0j], SolveMethod.FILE)
        indices, _ = reference.ordered(solution)
        assert list(indices) == [0, 1, 2, 3, 4]

    def test_identical_solutions(self):
        report = reference.compare(self.pair(20), self.pair(20))
        assert np.all(report.columns["difference"] == 0)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            reference.compare(self.pair(20), self.pair(21))

    def test_windows(self):
        shifted = self.pair(199)
        shifted.coefficients[0][0] += 1.0
        report = reference.compare(self.pair(199), shifted, name="shift")
        assert report.window == 20
        windows = report.windows()
        assert windows["center"].sum() == 40
        assert windows["end"].sum() == 40
        assert windows["interior"].sum() == 400 - 80
        summary = report.summary("shift")
        assert summary["max"] == pytest.approx(1.0)
        assert summary["center_max"] == pytest.approx(1.0)
        assert summary["interior_max"] == 0.0
        assert summary["end_max"] == 0.0

    def test_report_columns(self):
        wh, lsc, exact = self.pair(30), self.pair(30, 1e-3), self.pair(30, 2e-3)
        assert list(reference.comparison_report(wh, lsc, exact).columns) == ["wh_exact", "lsc_exact", "wh_lsc"]
        with_hybrid = reference.comparison_report(wh, lsc, exact, include_hybrid=True)
        assert list(with_hybrid.columns) == ["wh_exact", "lsc_exact", "wh_lsc", "hybrid_exact"]
        assert list(reference.comparison_report(wh, lsc).columns) == ["wh_lsc"]
        with pytest.raises(ConfigError):
            reference.comparison_report(wh)

    def test_hybrid_split(self):
        wh, lsc = self.pair(9), self.pair(9, 1.0)
        mixed = reference.hybrid(wh, lsc)
        assert np.array_equal(mixed.coefficients[0][:5], lsc.coefficients[0][:5])
        assert np.array_equal(mixed.coefficients[0][5:], wh.coefficients[0][5:])


@pytest.mark.slow
def test_line_interior_error_improves_with_truncation(bank):
    interior = []
    for N in (100, 200, 400):
        line = preset_problem("line", truncation=N)
        kernels = bank.for_spec(line)
        wh = solver.two_array_solve(line, kernels)
        exact = reference.line_solution(line, kernels[0])
        report = reference.comparison_report(wh, exact=exact)
        interior.append(report.summary("wh_exact")["interior_max"])
    assert interior[0] > interior[1] > interior[2]
