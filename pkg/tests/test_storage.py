"""
Unit tests for the storage package.
"""
import numpy as np
import pytest

from scattering import reference
from scattering.errors import ConfigError, ShapeMismatchError
from scattering.objects import FieldGrid, GridSpec, ProblemSpec, ScatteringSolution, SolveMethod, SplRegion
from storage import (CoefficientStore, ComparisonStore, DiagnosticsStore, FieldStore, KernelStore, SweepStore)
from storage.text_format import format_header, parse_header_line


def solution_for(spec, seed=0):
    rng = np.random.default_rng(seed)
    size = spec.truncation + 1
    return ScatteringSolution([rng.standard_normal(size) + 1j * rng.standard_normal(size) for _ in spec.arrays],
                              SolveMethod.TWO_ARRAY)


class TestCoefficientStore:
    """Tests for coefficient files."""

    def test_save_and_load(self, tmp_path, wedge):
        solution = solution_for(wedge)
        store = CoefficientStore(tmp_path / "coefficients.csv")
        assert store.save(solution, wedge)
        loaded = store.load(wedge)
        for a, b in zip(solution.coefficients, loaded.coefficients):
            assert np.array_equal(a, b)
        assert loaded.method == SolveMethod.FILE
        assert loaded.extra["source_method"] == "two-array"

    def test_layout(self, tmp_path, wedge):
        path = tmp_path / "coefficients.csv"
        CoefficientStore(path).save(solution_for(wedge), wedge)
        lines = path.read_text().splitlines()
        assert lines[0].startswith("# arrays=2 truncation=40 ")
        assert lines[1] == "# j,m,re,im"
        assert len(lines) == 2 + 2 * 41
        assert lines[2].startswith("1,0,")
        assert lines[-1].startswith("2,40,")

    def test_shape_mismatch(self, tmp_path, wedge, semi_infinite):
        store = CoefficientStore(tmp_path / "coefficients.csv")
        store.save(solution_for(wedge), wedge)
        with pytest.raises(ShapeMismatchError):
            store.load(semi_infinite)

    def test_incident_angle_mismatch(self, tmp_path, wedge):
        store = CoefficientStore(tmp_path / "coefficients.csv")
        store.save(solution_for(wedge), wedge)
        turned = ProblemSpec(wedge.wavenumber, wedge.incident_angle + 0.1, wedge.arrays, truncation=wedge.truncation)
        with pytest.raises(ConfigError, match="incident angle"):
            store.load(turned)

    def test_incident_angle_modulo_full_turn(self, tmp_path, wedge):
        store = CoefficientStore(tmp_path / "coefficients.csv")
        store.save(solution_for(wedge), wedge)
        wrapped = ProblemSpec(wedge.wavenumber, wedge.incident_angle - 2 * np.pi, wedge.arrays,
                              truncation=wedge.truncation)
        assert store.load(wrapped).n_arrays == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            CoefficientStore(tmp_path / "absent.csv").load()

    def test_unwritable(self, tmp_path, wedge):
        assert not CoefficientStore(tmp_path / "missing" / "coefficients.csv").save(solution_for(wedge), wedge)


class TestFieldStore:
    """Tests for field files."""

    def test_spl_line_and_mask(self, tmp_path, wedge):
        grid = GridSpec((0.0, 1.0), (0.0, 0.5), 3, 2)
        values = np.arange(6, dtype=complex).reshape(2, 3) * (1 + 1j)
        mask = np.zeros((2, 3), dtype=bool)
        mask[1, 2] = True
        values[mask] = np.nan
        store = FieldStore(tmp_path / "field.csv")
        assert store.save(FieldGrid(grid, values, mask), wedge, -12.5, SplRegion((0.0, 0.0), 0.05))
        loaded, spl_db = store.load()
        assert spl_db == -12.5
        assert loaded.grid == grid
        assert np.array_equal(loaded.mask, mask)
        assert np.array_equal(loaded.valid, values[~mask])
        assert "# spl_db=-12.5 region=0,0,0.050000000000000003" in (tmp_path / "field.csv").read_text()

    def test_without_spl(self, tmp_path, wedge):
        grid = GridSpec((0.0, 1.0), (0.0, 1.0), 2, 2)
        store = FieldStore(tmp_path / "field.csv")
        store.save(FieldGrid(grid, np.ones((2, 2), dtype=complex), np.zeros((2, 2), dtype=bool)), wedge)
        assert store.load()[1] is None


class TestOtherStores:
    """Tests for the comparison, kernel, diagnostics and sweep files."""

    def test_comparison_summary_lines(self, tmp_path):
        N = 20
        first = ScatteringSolution([np.zeros(N + 1, dtype=complex)] * 2, SolveMethod.FILE)
        second = ScatteringSolution([np.full(N + 1, 0.5 + 0j)] * 2, SolveMethod.FILE)
        report = reference.comparison_report(first, second, metadata={"preset": "line", "truncation": N})
        path = tmp_path / "comparison.csv"
        assert ComparisonStore(path).save(report)
        lines = path.read_text().splitlines()
        assert lines[0] == "# preset=line truncation=20"
        assert lines[1] == "# n,wh_lsc"
        assert len([line for line in lines if not line.startswith("#")]) == 2 * (N + 1)
        assert lines[-1].startswith("# wh_lsc max=0.5 ")

    def test_kernel_header(self, tmp_path, kd):
        path = tmp_path / "kernel.csv"
        assert KernelStore(path).save(kd)
        header = parse_header_line(path.read_text().splitlines()[0])
        assert float(header["K0_re"]) == kd.K0.real
        assert int(header["contour_size"]) == kd.contour_size
        rows = np.loadtxt(path, delimiter=",", comments="#")
        assert rows.shape == (max(kd.log_fourier.size, kd.lambdas.size), 5)

    def test_diagnostics(self, tmp_path):
        store = DiagnosticsStore(tmp_path / "diagnostics.txt")
        assert store.save({"method": "two-array", "condition_estimate": 12.25, "K0_1": [0.5, -1.0], "arrays": 2})
        assert store.load() == {"method": "two-array", "condition_estimate": "12.25", "K0_1": "0.5,-1",
                                "arrays": "2"}

    def test_sweep(self, tmp_path, wedge):
        rows = [{"truncation": 8, "log_det": {(0, 1): -3.0, (1, 0): -3.5}, "identity": {(0, 1): 1e-12, (1, 0): 0.0}}]
        path = tmp_path / "sweep.csv"
        assert SweepStore(path).save(rows, wedge)
        table = np.loadtxt(path, delimiter=",", comments="#")
        assert table.tolist() == [[8, 1, 2, -3.0, 1e-12], [8, 2, 1, -3.5, 0.0]]


def test_header_round_trip():
    header = format_header({"arrays": 2, "wavenumber": 0.1, "method": "lsc"})
    assert header == "arrays=2 wavenumber=0.10000000000000001 method=lsc"
    assert parse_header_line("# " + header) == {"arrays": "2", "wavenumber": "0.10000000000000001", "method": "lsc"}
    with pytest.raises(ConfigError):
        parse_header_line("# arrays 2")
