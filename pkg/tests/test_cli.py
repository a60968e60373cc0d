import io
import json
import subprocess
import sys

import pytest

from fplab.cli import main
from fplab.families import EXAMPLES, cp3, s6
from fplab.fpdata import FixedPointData, serialize_data


def _write(tmp_path, name, d):
    path = tmp_path / name
    path.write_text(serialize_data(d))
    return str(path)


def _stdin(monkeypatch, text):
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))


class TestCheck:
    def test_cp3(self, tmp_path, capsys):
        assert main(["check", _write(tmp_path, "cp3.json", cp3(1, 2, 3))]) == 0
        out = capsys.readouterr().out
        assert "Todd=1 Euler=4 signature=0" in out

    def test_zero_weight(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"n":1,"points":[{"weights":[0]},{"weights":[1]}]}')
        assert main(["check", str(path)]) == 2
        assert "ZeroWeight" in capsys.readouterr().err

    def test_abbv_failure(self, tmp_path, capsys):
        path = _write(tmp_path, "two.json", FixedPointData.from_weights([[1, 2], [-1, -2]]))
        assert main(["check", path, "--json", "--full-eval"]) == 1
        doc = json.loads(capsys.readouterr().out)
        assert doc["filters"]["abbv"]["certificate"] == {"sum": "1"}
        assert doc["survivor"] is False

    def test_missing_file(self, capsys):
        assert main(["check", "/nonexistent/x.json"]) == 2

    def test_json_output(self, monkeypatch, capsys):
        _stdin(monkeypatch, serialize_data(s6(1, 1)))
        assert main(["check", "-", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["chi"] == [0, -1, 1, 0]
        assert doc["invariants"] == {"todd": 0, "euler": 2, "signature": 0}

    @pytest.mark.parametrize("name", sorted(EXAMPLES))
    def test_examples_pipe(self, name, monkeypatch, capsys):
        assert main(["examples", name]) == 0
        text = capsys.readouterr().out
        _stdin(monkeypatch, text)
        assert main(["check", "-"]) == 0


class TestEnumerate:
    def test_dim4(self, tmp_path, capsys):
        out_path = tmp_path / "s.jsonl"
        assert main(["enumerate", "--dim", "4", "--points", "4", "--max-weight", "3",
                     "--jsonl", str(out_path)]) == 0
        out = capsys.readouterr().out
        assert "unclassified=0" in out
        lines = out_path.read_text().splitlines()
        assert len(lines) == 9
        fams = {m["family"] for line in lines for m in json.loads(line)["matches"]}
        assert fams == {"T11"}

    def test_todd_one(self, capsys):
        assert main(["classify", "--dim", "6", "--points", "4", "--max-weight", "3",
                     "--todd", "1"]) == 0
        out = capsys.readouterr().out
        listed = {line.split()[0] for line in out.splitlines() if line.startswith("  T")}
        assert listed and listed <= {"T12_1", "T12_2", "T12_3"}

    def test_odd_dimension(self, capsys):
        assert main(["enumerate", "--dim", "3", "--points", "4", "--max-weight", "2"]) == 2
        assert "OddDimension" in capsys.readouterr().err

    def test_jsonl_stdout(self, capsys):
        assert main(["enumerate", "--dim", "2", "--points", "4", "--max-weight", "2",
                     "--jsonl", "-"]) == 0
        captured = capsys.readouterr()
        docs = [json.loads(line) for line in captured.out.splitlines()]
        assert len(docs) == 2
        assert "TwoSpheres" in captured.err

    def test_thread_cap(self, monkeypatch, capsys):
        monkeypatch.setenv("FPLAB_THREADS", "2")
        assert main(["enumerate", "--dim", "4", "--points", "4", "--max-weight", "2",
                     "--threads", "8"]) == 0
        assert "T11" in capsys.readouterr().out

    def test_usage_error(self, capsys):
        assert main(["enumerate", "--dim", "4"]) == 2


class TestGraphs:
    def test_cp2(self, monkeypatch, capsys):
        _stdin(monkeypatch, serialize_data(FixedPointData.from_weights([[3, 1], [-1, 2], [-2, -3]])))
        assert main(["graphs", "-"]) == 0
        out = capsys.readouterr().out
        assert "admissible multigraphs: 1" in out

    def test_dot_files(self, tmp_path, capsys):
        out_dir = tmp_path / "out"
        assert main(["graphs", _write(tmp_path, "s6.json", s6(1, 1)), "--dot", str(out_dir)]) == 0
        files = sorted(p.name for p in out_dir.iterdir())
        assert files == ["graph_001.dot"]
        assert (out_dir / "graph_001.dot").read_text().startswith("digraph graph_001 {")

    def test_unbalanced(self, tmp_path, capsys):
        path = _write(tmp_path, "u.json", FixedPointData.from_weights([[1], [1]]))
        assert main(["graphs", path]) == 1
        assert "balance failure" in capsys.readouterr().out


class TestExamples:
    def test_cp3(self, capsys):
        assert main(["examples", "cp3", "1", "2", "3", "--compact"]) == 0
        assert capsys.readouterr().out.strip() == serialize_data(cp3(1, 2, 3))

    def test_quadric_needs_distinct(self, capsys):
        assert main(["examples", "quadric", "1", "1"]) == 2
        assert "distinct" in capsys.readouterr().err

    def test_blowup_sphere(self, capsys):
        assert main(["examples", "blowup-sphere", "1", "1", "--compact"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert [p["weights"] for p in doc["points"]] == [[-2, 1, 3], [-3, 1, 1], [-1, -1, 3], [-3, -1, 2]]

    def test_unknown(self, capsys):
        assert main(["examples", "torus"]) == 2

    def test_non_integer(self, capsys):
        assert main(["examples", "cp3", "x", "2", "3"]) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fplab", "examples", "s2", "--compact"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["n"] == 1
