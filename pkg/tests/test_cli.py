import json
import subprocess
import sys
from pathlib import Path

import pytest

from graphkoszul.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "--family", "butterfly")
    assert code == 0
    assert "overlap_free = false" in out
    assert "triangles: (3,2,1) (5,4,1)" in out


def test_hilbert_formula_path(capsys):
    code, out, _ = run(capsys, "hilbert", "--family", "line", "--n", "3", "--algebra", "bdual", "--method", "formula")
    assert code == 0
    assert out.splitlines()[0] == "B!(z) = 1 + 5z + 5z^2 + z^3 + O(z^4)"


@pytest.mark.parametrize("method", ["inversion", "gb", "formula"])
def test_hilbert_q_triangle(capsys, method):
    code, out, _ = run(capsys, "hilbert", "--family", "triangle", "--algebra", "q", "--method", method, "--degree", "3")
    assert code == 0
    assert "coefficients: 1,6,31,157" in out


def test_class_violation_exit_code(capsys):
    code, _, err = run(capsys, "hilbert", "--family", "butterfly", "--method", "formula")
    assert code == 1
    assert "class violation" in err


def test_force_reports_agreement(capsys):
    code, out, _ = run(capsys, "hilbert", "--family", "butterfly", "--method", "formula", "--force", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["checks"][0]["name"] == "forced-agreement"
    assert report["flags"] == {"overlap_free": False, "triangle_free": False}


@pytest.mark.parametrize("argv", [
    ["hilbert", "--family", "butterfly", "--n", "7"],
    ["hilbert", "--graph6", "\x01"],
    ["hilbert", "--family", "line", "--n", "3", "--degree", "11"],
    ["info", "--edges", "/nonexistent/graph.txt"],
    ["info", "--graph6", "Bw", "--n", "3"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["hilbert"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_edge_list_source(tmp_path, capsys):
    path = tmp_path / "p3.txt"
    path.write_text("3\n1 2\n2 3\n")
    code, out, _ = run(capsys, "hilbert", "--edges", str(path))
    assert code == 0
    assert "coefficients: 1,5,5,1" in out
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n1 2\n3 3\n")
    code, _, err = run(capsys, "info", "--edges", str(bad))
    assert code == 2 and "line 3" in err


@pytest.mark.parametrize("argv, golden", [
    (["dump", "--edges", "{p3}", "--algebra", "q"], "P3_q.txt"),
    (["dump", "--edges", "{p3}", "--algebra", "b"], "P3_b.txt"),
    (["dump", "--edges", "{p3}", "--algebra", "bdual"], "P3_bdual.txt"),
    (["dump", "--edges", "{p3}", "--algebra", "bdual", "--gb", "--degree", "4"], "P3_bdual_gb4.txt"),
    (["dump", "--family", "triangle", "--algebra", "q", "--gb", "--degree", "4"], "K3_q_gb4.txt"),
])
def test_golden_dumps(tmp_path, capsys, argv, golden):
    path = tmp_path / "p3.txt"
    path.write_text("3\n1 2\n2 3\n")
    code, out, _ = run(capsys, *[a.format(p3=path) for a in argv])
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_verify_json_is_byte_stable(tmp_path, capsys):
    outputs = []
    for name in ("a.json", "b.json"):
        code, stdout, _ = run(capsys, "verify", "palindrome", "--max-n", "4", "--json", "--output", str(tmp_path / name))
        assert code == 0
        outputs.append(stdout)
    assert outputs[0] == outputs[1]
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()
    report = json.loads(outputs[0])
    assert report["schema_version"] == 1
    assert report["summary"]["failed"] == 0


def test_verify_text_summary(capsys):
    code, out, _ = run(capsys, "verify", "dual-match", "--max-n", "4")
    assert code == 0
    assert out.startswith("PASS dual-match:")


def test_degree_budget_flag(capsys, monkeypatch):
    # registered so that teardown restores the variable the command sets
    monkeypatch.setenv("KOSZUL_DEGREE_BUDGET", "")
    code, out, _ = run(capsys, "verify", "koszul", "--max-n", "3", "--degree-budget", "2", "--json")
    assert code == 0
    rows = [r for r in json.loads(out)["rows"] if r["check"] == "koszul-numeric"]
    assert rows and all(r["degrees"] == "0..2" for r in rows)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "graphkoszul", "info", "--graph6", "Bw"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "triangles: (3,2,1)" in proc.stdout
