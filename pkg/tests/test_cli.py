"""
End-to-end tests of the command line: exit statuses and the files each command writes.
"""
import numpy as np
import pytest

from main import main
from config import preset_problem
from scattering import field
from scattering.errors import (ConfigError, ConvergenceError, GeometryError, ResonanceError, ShapeMismatchError,
                               SingularSystemError)
from scattering.objects import ScatteringSolution, SolveMethod
from storage import CoefficientStore, DiagnosticsStore, FieldStore
from utils import ExitStatus, exit_on_error
from utils.error_utils import status_for

GRAZING = """\
problem:
  wavenumber: 15.707963267948966
  incident_angle: 0
  truncation: 10
  arrays:
    - {spacing: 0.1, radius: 0.001, angle: 0}
"""


def data_rows(path):
    return [line for line in path.read_text().splitlines() if not line.startswith("#")]


class TestStatuses:
    """Tests for exit statuses."""

    def test_presets(self, capsys):
        assert main(["presets"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 8
        assert lines[0].startswith("wedge")

    def test_missing_problem_source(self, tmp_path):
        assert main(["solve", "--out", str(tmp_path)]) == ExitStatus.VALIDATION_FAILURE.value

    def test_missing_config_file(self, tmp_path):
        assert main(["solve", "--config", str(tmp_path / "absent.yaml")]) == 2

    def test_unknown_preset(self, tmp_path):
        assert main(["solve", "--preset", "hexagon", "--out", str(tmp_path)]) == 2

    @pytest.mark.parametrize("flags", [["--threads", "0"], ["--truncation", "-3"], ["--wavenumber", "-1"],
                                       ["--incident-angle", "sideways"], ["--iterations", "0"]])
    def test_invalid_flags(self, tmp_path, flags):
        assert main(["solve", "--preset", "wedge", "--out", str(tmp_path)] + flags) == 2

    def test_outward_resonance_refused(self, tmp_path):
        path = tmp_path / "grazing.yaml"
        path.write_text(GRAZING)
        assert main(["solve", "--config", str(path), "--out", str(tmp_path)]) == ExitStatus.RESONANCE_REFUSAL.value
        assert not (tmp_path / "run_coefficients.csv").exists()

    def test_pair_method_needs_two_arrays(self, tmp_path):
        assert main(["solve", "--preset", "semi-infinite", "--method", "two-array", "--truncation", "5",
                     "--out", str(tmp_path)]) == 2


class TestSolve:
    """Tests for the solve command."""

    def test_single_array_equals_driving(self, tmp_path):
        status = main(["solve", "--preset", "semi-infinite", "--truncation", "30", "--dump-driving",
                       "--out", str(tmp_path)])
        assert status == 0
        spec = preset_problem("semi-infinite", 30)
        coefficients = CoefficientStore(tmp_path / "run_coefficients.csv").load(spec)
        driving = CoefficientStore(tmp_path / "run_driving.csv").load(spec)
        assert np.array_equal(coefficients.coefficients[0], driving.coefficients[0])
        assert driving.extra["source_method"] == "driving"

    def test_wedge_rows_and_diagnostics(self, tmp_path):
        assert main(["solve", "--preset", "wedge", "--truncation", "100", "--out", str(tmp_path)]) == 0
        assert len(data_rows(tmp_path / "run_coefficients.csv")) == 202
        diagnostics = DiagnosticsStore(tmp_path / "run_diagnostics.txt").load()
        assert diagnostics["method"] == "block-solve"
        assert diagnostics["arrays"] == "2"
        assert float(diagnostics["condition_estimate"]) >= 1
        assert "solve_seconds" in diagnostics

    def test_kernel_dump_once_per_distinct_kernel(self, tmp_path):
        assert main(["solve", "--preset", "line", "--truncation", "10", "--dump-kernel", "--out", str(tmp_path)]) == 0
        assert (tmp_path / "run_kernel_1.csv").exists()
        assert not (tmp_path / "run_kernel_2.csv").exists()

    def test_direct_method(self, tmp_path):
        assert main(["solve", "--preset", "wedge", "--truncation", "20", "--method", "direct",
                     "--out", str(tmp_path)]) == 0
        diagnostics = DiagnosticsStore(tmp_path / "run_diagnostics.txt").load()
        assert diagnostics["method"] == "direct-foldy"
        assert float(diagnostics["foldy_residual"]) <= 1e-10

    def test_single_thread_output_is_reproducible(self, tmp_path):
        first, second = tmp_path / "first", tmp_path / "second"
        for directory in (first, second):
            assert main(["solve", "--preset", "wedge", "--truncation", "30", "--threads", "1",
                         "--out", str(directory)]) == 0
        assert (first / "run_coefficients.csv").read_bytes() == (second / "run_coefficients.csv").read_bytes()


class TestField:
    """Tests for the field command."""

    def test_zero_coefficients_give_incident_wave(self, tmp_path):
        spec = preset_problem("wedge", 10)
        zeros = ScatteringSolution([np.zeros(11, dtype=complex)] * 2, SolveMethod.FILE)
        path = tmp_path / "zeros.csv"
        CoefficientStore(path).save(zeros, spec)
        status = main(["field", "--preset", "wedge", "--truncation", "10", "--coefficients", str(path),
                       "--nx", "5", "--ny", "4", "--out", str(tmp_path)])
        assert status == 0
        grid_values, spl_db = FieldStore(tmp_path / "run_field.csv").load()
        assert spl_db is None
        incident = field.incident_field(spec, grid_values.grid).values
        assert np.allclose(grid_values.valid, incident[~grid_values.mask], rtol=1e-14)

    def test_spl_region_flag(self, tmp_path):
        spec = preset_problem("wedge", 10)
        zeros = ScatteringSolution([np.zeros(11, dtype=complex)] * 2, SolveMethod.FILE)
        path = tmp_path / "zeros.csv"
        CoefficientStore(path).save(zeros, spec)
        assert main(["field", "--preset", "wedge", "--truncation", "10", "--coefficients", str(path), "--nx", "3",
                     "--ny", "3", "--spl-region", "0.5,0.5,0.1", "--out", str(tmp_path)]) == 0
        assert FieldStore(tmp_path / "run_field.csv").load()[1] == pytest.approx(0.0, abs=1e-12)

    def test_mismatched_coefficients(self, tmp_path):
        spec = preset_problem("wedge", 10)
        path = tmp_path / "zeros.csv"
        CoefficientStore(path).save(ScatteringSolution([np.zeros(11, dtype=complex)] * 2, SolveMethod.FILE), spec)
        assert main(["field", "--preset", "wedge", "--truncation", "12", "--coefficients", str(path),
                     "--out", str(tmp_path)]) == 2

    def test_coefficients_for_other_incidence(self, tmp_path):
        spec = preset_problem("wedge", 10)
        path = tmp_path / "zeros.csv"
        CoefficientStore(path).save(ScatteringSolution([np.zeros(11, dtype=complex)] * 2, SolveMethod.FILE), spec)
        assert main(["field", "--preset", "wedge", "--truncation", "10", "--incident-angle", "pi/3",
                     "--coefficients", str(path), "--out", str(tmp_path)]) == 2
        assert not (tmp_path / "run_field.csv").exists()

    def test_missing_coefficients(self, tmp_path):
        assert main(["field", "--preset", "wedge", "--out", str(tmp_path)]) == 2


class TestCompareAndDiagnose:
    """Tests for the compare and diagnose commands."""

    def test_line_comparison_has_three_columns(self, tmp_path):
        assert main(["compare", "--preset", "line", "--truncation", "10", "--out", str(tmp_path)]) == 0
        lines = (tmp_path / "run_comparison.csv").read_text().splitlines()
        assert lines[1] == "# n,wh_exact,lsc_exact,wh_lsc"
        assert len(data_rows(tmp_path / "run_comparison.csv")) == 22

    def test_hybrid_column(self, tmp_path):
        assert main(["compare", "--preset", "line", "--truncation", "10", "--hybrid", "--out", str(tmp_path)]) == 0
        lines = (tmp_path / "run_comparison.csv").read_text().splitlines()
        assert lines[1] == "# n,wh_exact,lsc_exact,wh_lsc,hybrid_exact"

    def test_compare_rejects_many_arrays(self, tmp_path):
        assert main(["compare", "--preset", "faraday-cage", "--truncation", "5", "--out", str(tmp_path)]) == 2

    def test_diagnose_with_sweep(self, tmp_path):
        status = main(["diagnose", "--preset", "wedge", "--truncation", "16", "--det-sweep", "8,16",
                       "--out", str(tmp_path)])
        assert status == 0
        diagnostics = DiagnosticsStore(tmp_path / "run_diagnostics.txt").load()
        assert abs(float(diagnostics["det_identity_1_2"])) <= 1e-6
        assert "spectral_radius" in diagnostics
        assert len(data_rows(tmp_path / "run_det_sweep.csv")) == 4

    def test_bad_sweep(self, tmp_path):
        assert main(["diagnose", "--preset", "wedge", "--det-sweep", "8,x", "--out", str(tmp_path)]) == 2


class TestErrorMapping:
    """Tests for the exception to exit status mapping."""

    @pytest.mark.parametrize("error, status", [
        (ConfigError("bad"), ExitStatus.VALIDATION_FAILURE),
        (GeometryError("overlap"), ExitStatus.VALIDATION_FAILURE),
        (ShapeMismatchError("shape"), ExitStatus.VALIDATION_FAILURE),
        (ResonanceError("outward", [0]), ExitStatus.RESONANCE_REFUSAL),
        (ConvergenceError("slow"), ExitStatus.NUMERICAL_FAILURE),
        (SingularSystemError("singular", {"condition_estimate": 1e17}), ExitStatus.NUMERICAL_FAILURE),
    ])
    def test_mapping(self, error, status):
        assert status_for(error) == status

        @exit_on_error
        def handler(args):
            raise error

        assert handler(None) == status

    def test_passes_through_success(self):
        @exit_on_error
        def handler(args):
            return ExitStatus.SUCCESS

        assert handler(None) == ExitStatus.SUCCESS
