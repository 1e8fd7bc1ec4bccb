"""Command-line interface tests."""

import json

import numpy as np
import pytest

from walsh_edge import imaging
from walsh_edge.cli import main


@pytest.fixture
def checkerboard_file(tmp_path):
    path = tmp_path / "cb.pgm"
    imaging.save_image(imaging.checkerboard((64, 64), tile=9), path)
    return path


class TestGen:
    def test_checkerboard_pgm(self, tmp_path):
        out = tmp_path / "cb.pgm"
        code = main(["gen", "--kind", "checkerboard", "--size", "512",
                     "--tile", "64", "--output", str(out)])
        assert code == 0
        img = imaging.load_image(out)
        assert img.shape == (512, 512)

    def test_rectangular_size(self, tmp_path):
        out = tmp_path / "s.png"
        assert main(["gen", "--kind", "step", "--size", "16x32",
                     "--output", str(out)]) == 0
        assert imaging.load_image(out).shape == (16, 32)

    def test_blobs_deterministic(self, tmp_path):
        a = tmp_path / "a.pgm"
        b = tmp_path / "b.pgm"
        for out in (a, b):
            assert main(["gen", "--kind", "blobs", "--size", "32",
                         "--seed", "7", "--output", str(out)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_bad_size(self, tmp_path):
        code = main(["gen", "--kind", "constant", "--size", "100",
                     "--output", str(tmp_path / "c.pgm")])
        assert code == 1


class TestEdges:
    def test_produces_image_and_report(self, checkerboard_file, tmp_path):
        out = tmp_path / "edges.pgm"
        report_path = tmp_path / "report.json"
        code = main(["edges", "--input", str(checkerboard_file),
                     "--output", str(out), "--cutoff", "N/2",
                     "--report", str(report_path)])
        assert code == 0
        edge = imaging.load_image(out)
        assert edge.shape == (64, 64)
        assert edge.any()
        report = json.loads(report_path.read_text())
        assert report["schema_version"] == 1
        assert report["cutoff"] == 2048
        assert report["mode"] == "oracle"
        assert "vertical" in report["passes"] and "horizontal" in report["passes"]
        assert report["passes"]["vertical"]["postselect_probability"] > 0

    def test_cutoff_quarter_resolution(self, tmp_path):
        img_path = tmp_path / "img.pgm"
        rng = np.random.default_rng(0)
        imaging.save_image(rng.integers(0, 256, size=(64, 64)).astype(float), img_path)
        report_path = tmp_path / "r.json"
        assert main(["edges", "--input", str(img_path), "--output",
                     str(tmp_path / "e.pgm"), "--cutoff", "N/4",
                     "--report", str(report_path)]) == 0
        assert json.loads(report_path.read_text())["cutoff"] == 1024

    def test_circuit_mode_matches_oracle(self, checkerboard_file, tmp_path):
        oracle_out = tmp_path / "o.pgm"
        circuit_out = tmp_path / "c.pgm"
        for mode, out in [("oracle", oracle_out), ("circuit", circuit_out)]:
            assert main(["edges", "--input", str(checkerboard_file),
                         "--output", str(out), "--cutoff", "N/2",
                         "--mode", mode]) == 0
        assert oracle_out.read_bytes() == circuit_out.read_bytes()

    def test_constant_input_flags_degenerate(self, tmp_path):
        img_path = tmp_path / "const.pgm"
        imaging.save_image(np.full((32, 32), 99.0), img_path)
        report_path = tmp_path / "r.json"
        out = tmp_path / "e.pgm"
        assert main(["edges", "--input", str(img_path), "--output", str(out),
                     "--report", str(report_path)]) == 0
        report = json.loads(report_path.read_text())
        assert report["passes"]["vertical"]["degenerate"] is True
        assert report["passes"]["horizontal"]["degenerate"] is True
        assert not imaging.load_image(out).any()

    def test_missing_input_fails(self, tmp_path):
        code = main(["edges", "--input", str(tmp_path / "missing.pgm"),
                     "--output", str(tmp_path / "e.pgm")])
        assert code == 1

    def test_pad_flag(self, tmp_path):
        img_path = tmp_path / "odd.png"
        imaging.save_image(np.tile(np.arange(100.0), (100, 1)), img_path)
        assert main(["edges", "--input", str(img_path),
                     "--output", str(tmp_path / "e.pgm")]) == 1
        assert main(["edges", "--input", str(img_path),
                     "--output", str(tmp_path / "e.pgm"), "--pad"]) == 0


class TestQhed:
    def test_baseline_map(self, checkerboard_file, tmp_path):
        out = tmp_path / "qhed.pgm"
        report_path = tmp_path / "r.json"
        assert main(["qhed", "--input", str(checkerboard_file),
                     "--output", str(out), "--report", str(report_path)]) == 0
        assert imaging.load_image(out).any()
        assert json.loads(report_path.read_text())["report"] == "qhed"


class TestCompare:
    def test_writes_images_and_report(self, tmp_path):
        img_path = tmp_path / "poly.pgm"
        imaging.save_image(imaging.polygon((64, 64), seed=1), img_path)
        outdir = tmp_path / "cmp"
        assert main(["compare", "--input", str(img_path), "--cutoff", "N/2",
                     "--outdir", str(outdir)]) == 0
        report = json.loads((outdir / "compare.json").read_text())
        assert report["report"] == "compare"
        assert len(report["rows"]) == 2
        assert {row["algorithm"] for row in report["rows"]} == {"sequency-highpass", "qhed"}
        for row in report["rows"]:
            assert -1.0 <= row["ssim_vs_original"] <= 1.0
        assert (outdir / "edges_sequency_highpass.pgm").exists()
        assert (outdir / "edges_qhed.pgm").exists()
        # modes cross-checked on images this small
        assert report["mode_crosscheck_max_abs_diff"] is not None
        assert report["mode_crosscheck_max_abs_diff"] < 1e-10

    def test_zero_image_rejected(self, tmp_path):
        img_path = tmp_path / "zero.pgm"
        imaging.save_image(np.zeros((32, 32)), img_path)
        assert main(["compare", "--input", str(img_path),
                     "--outdir", str(tmp_path / "cmp")]) == 1


class TestResources:
    def test_table(self, capsys, tmp_path):
        report_path = tmp_path / "resources.json"
        assert main(["resources", "--qubits", "12", "--cutoff", "N/2",
                     "--report", str(report_path)]) == 0
        out = capsys.readouterr().out
        assert "wht_depth" in out
        rows = json.loads(report_path.read_text())["rows"]
        focus = next(r for r in rows if r["data_qubits"] == 12)
        assert focus["wht_depth"] == 12
        assert focus["filter_gates"] == 1
        # linear growth: constant depth increment once the filter gate no
        # longer overlaps the reordering cascade (n >= 3)
        depths = [r["pipeline_depth"] for r in sorted(rows, key=lambda r: r["data_qubits"])]
        tail = depths[1:]
        assert all(b - a == tail[1] - tail[0] for a, b in zip(tail, tail[1:]))


class TestQasm:
    def test_export_file(self, tmp_path):
        out = tmp_path / "pipe.qasm"
        assert main(["qasm", "--qubits", "3", "--cutoff", "4",
                     "--output", str(out)]) == 0
        text = out.read_text()
        assert text.startswith("OPENQASM 2.0;")
        assert "qreg q[4];" in text

    def test_stdout(self, capsys):
        assert main(["qasm", "--qubits", "2", "--cutoff", "2"]) == 0
        assert "OPENQASM 2.0;" in capsys.readouterr().out
