import json
import os

import pytest

from cabinet_psa.cli import main, parse_replacements
from cabinet_psa.datasets import sample15_truncated
from cabinet_psa.io_formats import write_components_csv, write_components_json
from cabinet_psa.model import ObjectiveVector, dominates


@pytest.fixture()
def sample7_csv(tmp_path, sample7):
    path = tmp_path / "sample7.csv"
    path.write_text(write_components_csv(sample7), encoding="utf-8")
    return str(path)


def run_cli(*argv):
    return main(list(argv))


class TestOptimize:
    def test_success_writes_verified_result(self, sample7_csv, tmp_path, capsys):
        out = tmp_path / "result.json"
        svg = tmp_path / "layout.svg"
        code = run_cli(
            "optimize", "--input", sample7_csv, "--t0", "60", "--seed", "4",
            "--out", str(out), "--svg", str(svg),
        )
        assert code == 0
        assert "heat=" in capsys.readouterr().out
        data = json.loads(out.read_text(encoding="utf-8"))
        vecs = [ObjectiveVector(e["heat"], e["wireMm"]) for e in data["archive"]]
        assert all(not dominates(a, b) for a in vecs for b in vecs if a is not b)
        assert svg.exists()

    def test_builtin_dataset_name(self, tmp_path):
        out = tmp_path / "r.json"
        assert run_cli("optimize", "--input", "sample-15", "--t0", "20", "--seed", "1",
                       "--out", str(out)) == 0
        assert out.exists()

    def test_missing_input(self, capsys):
        assert run_cli("optimize", "--input", "/nonexistent/file.csv") == 1
        assert "error:" in capsys.readouterr().err

    def test_invalid_alpha(self, sample7_csv):
        assert run_cli("optimize", "--input", sample7_csv, "--alpha", "1.5") == 2

    def test_json_input(self, tmp_path, sample7):
        path = tmp_path / "sample7.json"
        path.write_text(write_components_json(sample7), encoding="utf-8")
        assert run_cli("optimize", "--input", str(path), "--t0", "20") == 0

    def test_malformed_csv(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("nope\n", encoding="utf-8")
        assert run_cli("optimize", "--input", str(path)) == 1


class TestBench:
    def test_single_run_min_equals_mean(self, sample7_csv, tmp_path, capsys):
        out = tmp_path / "bench.json"
        code = run_cli("bench", "--input", sample7_csv, "--t0-list", "40", "--runs", "1",
                       "--seed-base", "2", "--out", str(out))
        assert code == 0
        report = json.loads(out.read_text(encoding="utf-8"))
        row = report["summary"]["40"]
        assert row["heatImprovement"]["min"] == row["heatImprovement"]["mean"] == row["heatImprovement"]["max"]
        assert "heat x" in capsys.readouterr().out

    def test_larger_t0_means_more_iterations(self, sample7_csv, tmp_path):
        out = tmp_path / "bench.json"
        assert run_cli("bench", "--input", sample7_csv, "--t0-list", "40,400", "--runs", "1",
                       "--seed-base", "1", "--out", str(out)) == 0
        report = json.loads(out.read_text(encoding="utf-8"))
        assert report["summary"]["400"]["meanIterations"] > report["summary"]["40"]["meanIterations"]

    def test_thread_pool_matches_serial(self, sample7_csv, tmp_path, monkeypatch):
        out_a = tmp_path / "serial.json"
        run_cli("bench", "--input", sample7_csv, "--t0-list", "40", "--runs", "2",
                "--seed-base", "3", "--out", str(out_a))
        monkeypatch.setenv("CABINET_PSA_THREADS", "3")
        out_b = tmp_path / "parallel.json"
        run_cli("bench", "--input", sample7_csv, "--t0-list", "40", "--runs", "2",
                "--seed-base", "3", "--out", str(out_b))
        a = json.loads(out_a.read_text(encoding="utf-8"))
        b = json.loads(out_b.read_text(encoding="utf-8"))
        for cell in a["cells"] + b["cells"]:
            cell.pop("wallTimeSeconds")
        a["summary"]["40"].pop("meanWallTimeSeconds")
        b["summary"]["40"].pop("meanWallTimeSeconds")
        assert a == b

    def test_bad_t0_list(self, sample7_csv):
        assert run_cli("bench", "--input", sample7_csv, "--t0-list", "abc") == 1


class TestReconfigure:
    @pytest.fixture()
    def previous(self, sample7_csv, tmp_path):
        out = tmp_path / "prev.json"
        assert run_cli("optimize", "--input", sample7_csv, "--t0", "60", "--seed", "4",
                       "--out", str(out)) == 0
        return str(out)

    def test_width_replacement(self, sample7_csv, previous, tmp_path, capsys):
        out = tmp_path / "new.json"
        code = run_cli("reconfigure", "--input", sample7_csv, "--previous", previous,
                       "--replace", "3:width=200", "--out", str(out))
        assert code == 0
        assert "reoptimized in" in capsys.readouterr().out
        data = json.loads(out.read_text(encoding="utf-8"))
        widths = {c["index"]: c["widthMm"] for c in data["recommended"]["placement"]["components"]}
        assert widths[3] == 200.0

    def test_is_hot_replacement(self, sample7_csv, previous, tmp_path):
        out = tmp_path / "new.json"
        assert run_cli("reconfigure", "--input", sample7_csv, "--previous", previous,
                       "--replace", "6:isHot=1", "--out", str(out)) == 0

    def test_unknown_component(self, sample7_csv, previous):
        assert run_cli("reconfigure", "--input", sample7_csv, "--previous", previous,
                       "--replace", "99:width=10") == 1

    def test_unknown_field(self, sample7_csv, previous):
        assert run_cli("reconfigure", "--input", sample7_csv, "--previous", previous,
                       "--replace", "3:mass=10") == 1

    def test_bad_value(self, sample7_csv, previous):
        assert run_cli("reconfigure", "--input", sample7_csv, "--previous", previous,
                       "--replace", "3:width=wide") == 1

    def test_missing_previous(self, sample7_csv, tmp_path):
        assert run_cli("reconfigure", "--input", sample7_csv,
                       "--previous", str(tmp_path / "gone.json"),
                       "--replace", "3:width=10") == 1

    def test_parse_replacements_grammar(self):
        assert parse_replacements(["8:width=200,6:isHot=1"]) == [
            (8, "width", "200"), (6, "isHot", "1"),
        ]
        assert parse_replacements(["8:width=200", "8:height=150"]) == [
            (8, "width", "200"), (8, "height", "150"),
        ]


class TestOracleCommand:
    def test_front_written(self, sample7_csv, tmp_path):
        out = tmp_path / "front.json"
        assert run_cli("oracle", "--input", sample7_csv, "--out", str(out)) == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["oracle"] is True
        assert data["iterations"] == 5040
        assert len(data["archive"]) >= 1

    def test_too_large_without_override(self):
        assert run_cli("oracle", "--input", "sample-15") == 2

    def test_single_component(self, tmp_path):
        doc = sample15_truncated(1)
        path = tmp_path / "one.csv"
        path.write_text(write_components_csv(doc), encoding="utf-8")
        out = tmp_path / "front.json"
        assert run_cli("oracle", "--input", str(path), "--out", str(out)) == 0
        assert len(json.loads(out.read_text(encoding="utf-8"))["archive"]) == 1


class TestDataset:
    def test_write_csv_and_json(self, tmp_path):
        csv_path = tmp_path / "a.csv"
        json_path = tmp_path / "a.json"
        assert run_cli("dataset", "synth-a", "--out", str(csv_path)) == 0
        assert run_cli("dataset", "synth-a", "--out", str(json_path)) == 0
        assert csv_path.exists() and json_path.exists()

    def test_unknown_name(self, tmp_path):
        assert run_cli("dataset", "mystery", "--out", str(tmp_path / "x.csv")) == 1
