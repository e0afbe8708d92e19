import math
import subprocess
import sys

import pytest

from apollonian import cli


def parse_record(text):
    out = {}
    for line in text.strip().splitlines():
        if " = " in line:
            key, val = line.split(" = ", 1)
            out[key] = val
    return out


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDist:
    def test_record_round_trips_doubles(self, capsys):
        code, out, _ = run_cli(capsys, "dist", "0", "0", "0.5", "0")
        rec = parse_record(out)
        assert code == 0
        assert float(rec["dist.forward"]) == math.log(2.0)
        assert float(rec["dist.backward"]) == math.log(1.5)
        assert rec["dist.arc.kind"] == "diameter"
        assert rec["dist.a_plus"].split() == ["1", "0"]

    def test_degenerate_pair(self, capsys):
        code, out, _ = run_cli(capsys, "dist", "0", "0", "0", "0")
        rec = parse_record(out)
        assert code == 0
        assert float(rec["dist.forward"]) == 0.0
        assert rec["dist.supremum"] == "degenerate"

    def test_domain_error_exit_status(self, capsys):
        code, _, err = run_cli(capsys, "dist", "0", "0", "2", "0")
        assert code == 2
        assert "unit disc" in err

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "rec.txt"
        code, out, _ = run_cli(capsys, "dist", "0", "0", "0.5", "0", "--out", str(target))
        assert code == 0 and out == ""
        assert "dist.forward" in target.read_text()


class TestCurvature:
    def test_hand_values_and_margins(self, capsys):
        code, out, _ = run_cli(capsys, "curvature", "0.5", "0", "0", "1")
        rec = parse_record(out)
        assert code == 0
        assert float(rec["curvature.s"]) == pytest.approx(2.5, abs=1e-12)
        assert float(rec["curvature.flag"]) == pytest.approx(11 / 64, abs=1e-12)
        assert float(rec["curvature.flag_measured"]) == pytest.approx(-181 / 64, abs=1e-12)
        assert float(rec["curvature.margin.s_bound"]) == pytest.approx(0.5, abs=1e-12)
        assert float(rec["curvature.residual.measured_vs_numeric"]) <= 1e-4
        assert float(rec["curvature.residual.stated_vs_numeric"]) > 1e-2

    def test_origin_values(self, capsys):
        code, out, _ = run_cli(capsys, "curvature", "0", "0", "1", "0")
        rec = parse_record(out)
        assert float(rec["curvature.flag"]) == pytest.approx(-0.25, abs=1e-13)
        assert float(rec["curvature.s"]) == pytest.approx(1.5, abs=1e-12)

    def test_zero_vector_exit(self, capsys):
        code, _, err = run_cli(capsys, "curvature", "0.5", "0", "0", "0")
        assert code == 2


class TestGeodesic:
    def test_tabular_path(self, capsys):
        code, out, _ = run_cli(capsys, "geodesic", "0", "0", "1", "0", "0.5")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0].split("\t") == [
            "t", "x1", "x2", "v1", "v2", "finsler_norm", "carrier_residual"]
        assert len(lines) == 502
        last = [float(v) for v in lines[-1].split("\t")]
        assert last[0] == pytest.approx(0.5, abs=1e-12)
        assert abs(last[5] - 1.0) <= 1e-10

    def test_text_summary_and_radial_residual(self, capsys):
        code, out, _ = run_cli(capsys, "geodesic", "0", "0", "1", "0", "0.5",
                               "--format", "text")
        rec = parse_record(out)
        assert code == 0
        assert rec["geodesic.exit"] == "t_end"
        assert float(rec["geodesic.max_carrier_residual"]) <= 1e-10

    def test_boundary_exit_status(self, capsys):
        code, out, _ = run_cli(capsys, "geodesic", "0", "0", "1", "0", "9",
                               "--format", "text")
        rec = parse_record(out)
        assert code == 1
        assert rec["geodesic.exit"] == "boundary"

    def test_launch_beyond_margin_yields_single_sample(self, capsys):
        code, out, _ = run_cli(capsys, "geodesic", "0.96", "0", "-1", "0", "1",
                               "--format", "text")
        rec = parse_record(out)
        assert code == 1
        assert rec["geodesic.samples"] == "1"
        assert rec["geodesic.exit"] == "boundary"


class TestValidate:
    def test_small_grid_reports_documented_failures(self, capsys):
        code, out, err = run_cli(capsys, "validate", "--grid", "4x8x8@0.9", "--seed", "1")
        assert code == 1
        rec = parse_record(out)
        assert rec["validate.pass"] == "false"
        assert rec["validate.check.calculus-flag-upper.pass"] == "false"
        assert rec["validate.check.calculus-riemann-dual-stated.pass"] == "false"
        assert rec["validate.check.calculus-riemann-dual-measured.pass"] == "true"
        assert "failed" in err

    def test_byte_identical_reports(self, capsys):
        _, out1, _ = run_cli(capsys, "validate", "--grid", "4x8x8@0.9", "--seed", "1")
        _, out2, _ = run_cli(capsys, "validate", "--grid", "4x8x8@0.9", "--seed", "1")
        assert out1 == out2

    def test_fault_injection_negative_control(self, capsys):
        code, out, _ = run_cli(capsys, "validate", "--grid", "4x8x8@0.9",
                               "--inject-fault", "tau-sign")
        rec = parse_record(out)
        assert code == 1
        assert rec["validate.check.calculus-riemann-dual-measured.pass"] == "false"


class TestFigure:
    @pytest.mark.parametrize("kind", ["indicatrix", "geodesics"])
    def test_svg_emission(self, capsys, tmp_path, kind):
        out_file = tmp_path / f"{kind}.svg"
        code, out, _ = run_cli(capsys, "figure", kind, "--out", str(out_file))
        assert code == 0
        content = out_file.read_text()
        assert content.lstrip().startswith("<?xml")
        assert "svg" in content[:600]

    def test_curvature_field(self, capsys, tmp_path):
        out_file = tmp_path / "field.svg"
        code, _, _ = run_cli(capsys, "figure", "curvature-field", "--out", str(out_file),
                             "--grid", "4x8x8@0.8")
        assert code == 0
        assert out_file.exists()

    def test_custom_indicatrix_points(self, capsys, tmp_path):
        out_file = tmp_path / "ind.svg"
        code, _, _ = run_cli(capsys, "figure", "indicatrix", "--points", "0,0",
                             "--out", str(out_file))
        assert code == 0
        assert out_file.exists()

    def test_geodesic_pair_argument(self, capsys, tmp_path):
        out_file = tmp_path / "geo.svg"
        code, _, _ = run_cli(capsys, "figure", "geodesics", "--pair", "0,0.5", "0.5,0",
                             "--out", str(out_file))
        assert code == 0
        assert out_file.exists()


def test_installed_entry_point():
    proc = subprocess.run([sys.executable, "-m", "apollonian.cli", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "apollonian" in proc.stdout
