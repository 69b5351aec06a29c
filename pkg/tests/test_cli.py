"""Command surface: output shapes, exit codes, files."""

import json
import subprocess
import sys

import pytest

from gtrep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestDim:
    def test_spinor(self, capsys):
        code, out, _ = run(capsys, "dim", "--type", "B", "--rank", "1",
                           "--weight", "-1/2")
        assert code == 0 and out.strip() == "2"

    def test_gl(self, capsys):
        code, out, _ = run(capsys, "dim", "--type", "A", "--rank", "3",
                           "--weight", "2,1,0")
        assert code == 0 and out.strip() == "8"

    def test_equals_form(self, capsys):
        code, out, _ = run(capsys, "dim", "--type", "B", "--rank", "2",
                           "--weight=-1,-2")
        assert code == 0 and out.strip() == "35"


class TestBadInput:
    def test_mixed_parity(self, capsys):
        code, _, err = run(capsys, "dim", "--type", "B", "--rank", "2",
                           "--weight", "0,-1/2")
        assert code == 2 and err

    def test_wrong_entry_count(self, capsys):
        code, _, _ = run(capsys, "build", "--type", "A", "--rank", "3",
                         "--weight", "1,0")
        assert code == 2

    def test_unparsable_entry(self, capsys):
        code, _, _ = run(capsys, "dim", "--type", "B", "--rank", "1",
                         "--weight", "x")
        assert code == 2

    def test_increasing_gl_weight(self, capsys):
        code, _, _ = run(capsys, "dim", "--type", "A", "--rank", "2",
                         "--weight", "0,1")
        assert code == 2

    def test_cap_exceeded(self, capsys):
        code, _, err = run(capsys, "build", "--type", "B", "--rank", "2",
                           "--weight", "0,-1", "--cap", "3")
        assert code == 2 and "cap" in err

    def test_csv_outside_build(self, capsys):
        for cmd in ("patterns", "verify", "branch"):
            code, _, _ = run(capsys, cmd, "--type", "B", "--rank", "1",
                             "--weight", "-1", "--format", "csv")
            assert code == 2, cmd


class TestBuildJson:
    def test_spinor_golden(self, capsys):
        code, out, _ = run(capsys, "build", "--type", "B", "--rank", "1",
                           "--weight", "-1/2")
        assert code == 0
        obj = json.loads(out)
        assert obj["algebra"] == {"type": "B", "rank": 1}
        assert obj["highest_weight"] == ["-1/2"]
        assert obj["dimension"] == 2
        assert len(obj["basis"]) == 2
        ops = obj["operators"]
        assert len(ops) == 9
        assert ops["F(0,1)"]["entries"] == [[0, 1, "1/2"]]
        assert ops["F(1,1)"]["entries"] == [[0, 0, "-1/2"], [1, 1, "1/2"]]
        assert ops["F(-1,1)"]["entries"] == []

    def test_trivial_all_zero(self, capsys):
        code, out, _ = run(capsys, "build", "--type", "B", "--rank", "1",
                           "--weight", "0")
        obj = json.loads(out)
        assert code == 0
        assert all(not op["entries"] for op in obj["operators"].values())

    def test_gl_operator_count(self, capsys):
        code, out, _ = run(capsys, "build", "--type", "A", "--rank", "2",
                           "--weight", "1,0")
        obj = json.loads(out)
        assert code == 0
        assert set(obj["operators"]) == {"E(1,1)", "E(1,2)", "E(2,1)", "E(2,2)"}

    def test_output_ends_with_newline(self, capsys):
        _, out, _ = run(capsys, "build", "--type", "B", "--rank", "1",
                        "--weight", "-1")
        assert out.endswith("}\n")


class TestBuildCsv:
    def test_rows_and_quoting(self, capsys):
        code, out, _ = run(capsys, "build", "--type", "B", "--rank", "1",
                           "--weight", "-1/2", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "generator,row,col,value"
        assert '"F(0,1)",0,1,1/2' in lines

    def test_deterministic_row_order(self, capsys):
        _, out1, _ = run(capsys, "build", "--type", "B", "--rank", "2",
                         "--weight", "0,-1", "--format", "csv")
        _, out2, _ = run(capsys, "build", "--type", "B", "--rank", "2",
                         "--weight", "0,-1", "--format", "csv")
        assert out1 == out2


class TestOutFile:
    def test_atomic_write_and_determinism(self, tmp_path, capsys):
        p1 = tmp_path / "a.json"
        p2 = tmp_path / "b.json"
        for p in (p1, p2):
            code, out, _ = run(capsys, "build", "--type", "B", "--rank", "2",
                               "--weight", "-1/2,-1/2", "--out", str(p))
            assert code == 0 and out == ""
        assert p1.read_bytes() == p2.read_bytes()
        assert not list(tmp_path.glob("*.tmp"))

    def test_patterns_to_file(self, tmp_path, capsys):
        p = tmp_path / "pats.json"
        code, _, _ = run(capsys, "patterns", "--type", "A", "--rank", "3",
                         "--weight", "2,1,0", "--out", str(p))
        assert code == 0
        obj = json.loads(p.read_text())
        assert obj["dimension"] == 8 and len(obj["basis"]) == 8


class TestVerify:
    def test_fast_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--type", "B", "--rank", "1",
                           "--weight", "-1/2")
        assert code == 0
        obj = json.loads(out)
        assert obj["summary"] == "pass" and len(obj["checks"]) == 3

    def test_full_check_counts(self, capsys):
        code, out, _ = run(capsys, "verify", "--type", "B", "--rank", "2",
                           "--weight", "0,-1", "--level", "full")
        assert code == 0 and len(json.loads(out)["checks"]) == 8
        code, out, _ = run(capsys, "verify", "--type", "A", "--rank", "3",
                           "--weight", "2,1,0", "--level", "full")
        assert code == 0 and len(json.loads(out)["checks"]) == 7

    def test_corruption_hook_trips(self, capsys, monkeypatch):
        monkeypatch.setenv("GTREP_CORRUPT", "F(1,2):0:0:1/3")
        code, out, _ = run(capsys, "verify", "--type", "B", "--rank", "2",
                           "--weight", "0,-1")
        assert code == 1
        assert json.loads(out)["summary"] == "fail"

    def test_corruption_hook_zero_removes_entry(self, capsys, monkeypatch):
        monkeypatch.setenv("GTREP_CORRUPT", "F(0,1):0:1:0")
        code, out, _ = run(capsys, "verify", "--type", "B", "--rank", "1",
                           "--weight", "-1/2")
        assert code == 1

    def test_corruption_hook_malformed(self, capsys, monkeypatch):
        monkeypatch.setenv("GTREP_CORRUPT", "nonsense")
        code, _, _ = run(capsys, "verify", "--type", "B", "--rank", "1",
                         "--weight", "-1/2")
        assert code == 2

    def test_hook_ignored_outside_verify(self, capsys, monkeypatch):
        monkeypatch.setenv("GTREP_CORRUPT", "F(1,1):0:0:9")
        code, out, _ = run(capsys, "build", "--type", "B", "--rank", "1",
                           "--weight", "-1/2")
        assert code == 0
        obj = json.loads(out)
        assert obj["operators"]["F(1,1)"]["entries"][0] == [0, 0, "-1/2"]


class TestBranch:
    def test_so_table(self, capsys):
        code, out, _ = run(capsys, "branch", "--type", "B", "--rank", "2",
                           "--weight", "0,-1")
        assert code == 0
        lines = out.splitlines()
        assert "mu=(0): 2" in lines
        assert "mu=(-1): 1" in lines
        assert lines[-1] == "2*1+1*3=5 ok"

    def test_gl_betweenness(self, capsys):
        code, out, _ = run(capsys, "branch", "--type", "A", "--rank", "2",
                           "--weight", "1,0")
        assert code == 0
        assert out.splitlines() == ["mu=(0)", "mu=(1)"]

    def test_rank_one_so(self, capsys):
        code, out, _ = run(capsys, "branch", "--type", "B", "--rank", "1",
                           "--weight", "-1")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("rank 1")
        assert set(lines[1:]) == {"weight=(-1): 1", "weight=(0): 1",
                                  "weight=(1): 1"}


class TestPatterns:
    def test_json_shape(self, capsys):
        code, out, _ = run(capsys, "patterns", "--type", "B", "--rank", "1",
                           "--weight", "-1")
        obj = json.loads(out)
        assert code == 0
        assert obj["dimension"] == 3
        assert obj["basis"][0]["sigma"] == [0]


class TestTrace:
    def test_deformation_trace_goes_to_stderr(self, capsys):
        code, out, err = run(capsys, "build", "--type", "B", "--rank", "1",
                             "--weight", "-1", "--deform-trace")
        assert code == 0
        assert json.loads(out)["dimension"] == 3
        for line in err.splitlines():
            assert line.startswith("deform: level=")


def test_console_script_roundtrip():
    # one end-to-end subprocess pass through the installed entry point
    r = subprocess.run([sys.executable, "-m", "gtrep", "dim", "--type", "B",
                        "--rank", "2", "--weight", "-1/2,-3/2"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.strip() == "16"
