import json
import subprocess
import sys

import pytest

from bresinski.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "5,6,7,8")
    assert code == 0
    assert "frobenius: 9" in out and "genus: 5" in out and "symmetric: true" in out


def test_info_json(capsys):
    code, out, _ = run(capsys, "info", "5, 6, 7, 8", "--json")
    d = json.loads(out)
    assert d["apery"] == {"modulus": 5, "entries": [0, 6, 7, 8, 14]}
    assert d["pseudo_frobenius"] == [9]


def test_ideal_json(capsys):
    code, out, _ = run(capsys, "ideal", "5,6,7,8", "--json")
    d = json.loads(out)
    assert code == 0 and d["mu"] == 5 and d["betti"] == [12, 13, 14, 15, 16]
    assert d["alpha"]["alphas"] == [3, 2, 2, 2]
    assert "x1^3 - x3*x4" in d["binomials"]


def test_structure_not_symmetric(capsys):
    code, out, _ = run(capsys, "structure", "4,5,6,7")
    assert code == 0 and "classification: not_symmetric" in out


def test_structure_json(capsys):
    code, out, _ = run(capsys, "structure", "5,6,7,8", "--json")
    d = json.loads(out)
    assert code == 0 and d["classification"] == "pfaffian_5"
    assert d["matrix"][4] == ["x4", "x1^2", "x2", "x3", "0"]


def test_structure_failure_exit_code(capsys, monkeypatch):
    import bresinski.cli as cli
    from bresinski.structure import CheckResult, verify_structure

    def failing(H):
        r = verify_structure(H)
        r.checks["pfaffians"] = CheckResult(False, "forced")
        return r

    monkeypatch.setattr(cli, "verify_structure", failing)
    code, _, _ = run(capsys, "structure", "5,6,7,8")
    assert code == 1


@pytest.mark.parametrize("argv", [["info", "4,6"], ["info", "a,b"], ["structure", "2,3"], ["info"]])
def test_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_file_input(tmp_path, capsys):
    f = tmp_path / "corpus.txt"
    f.write_text("5,6,7,8\n# comment\n10,14,15,21\n\n")
    code, out, _ = run(capsys, "structure", "--file", str(f), "--json")
    d = json.loads(out)
    assert code == 0 and [r["classification"] for r in d] == ["pfaffian_5", "complete_intersection"]


def test_verify_json_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "--max-gen", "11", "--json")
    _, b, _ = run(capsys, "verify", "--max-gen", "11", "--json", "--jobs", "2")
    assert a == b
    assert json.loads(a)["failures"] == []


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bresinski", "ideal", "10,14,15,21", "--json"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["betti"] == [30, 35, 42]
