import io
import json
import subprocess
import sys

import pytest

from vanbrauer.cli import dumps, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_classify_table():
    code, text = run("classify", "--tau", "0", "--n", "2")
    assert code == 0
    assert "[[2, 0], [0, -4]]" in text
    assert "PointOrderTwo" in text and "OddTheta" in text
    assert "admissible           no" in text


def test_classify_json_roundtrip():
    code, text = run("classify", "--tau", "1", "--n", "2", "--format", "json")
    assert code == 0
    data = json.loads(text)
    assert data["pic_gram"] == [[2, 1], [1, -14]]
    assert data["clifford_relation"] == "Equal" and data["admissible"] is True
    assert dumps(data) == text


def test_classify_excluded(capsys):
    code, _ = run("classify", "--tau", "3", "--n", "2")
    assert code == 2
    assert "(3,2), (4,2) or (4,3)" in capsys.readouterr().err


def test_classify_out_of_range(capsys):
    assert run("classify", "--tau", "7", "--n", "3")[0] == 2
    assert "tau" in capsys.readouterr().err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--tau", "x"])
    assert exc.value.code == 2


def test_verify_theorem_small():
    code, text = run("verify-theorem", "--n-max", "2")
    assert code == 0
    assert "cases: 3" in text and "failed: 0" in text and "(3,2), (4,2)" in text


def test_verify_theorem_json():
    code, text = run("verify-theorem", "--n-max", "4", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["checks_failed"] == 0 and data["cases"] == 12


def test_verify_theorem_inject_fault():
    code, text = run("verify-theorem", "--n-max", "3", "--kernel-n-max", "0", "--inject-fault")
    assert code == 1
    assert "FAIL" in text


def test_glue_check():
    code, text = run("glue-check", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["ok"]
    assert data["discriminant_groups"]["K8"] == [8]
    assert data["discriminant_groups"]["T_alpha"] == [8]
    assert data["discriminant_groups"]["L"] == []


def test_lookup():
    code, text = run("lookup", "--c", "-2")
    assert code == 0 and text == "tau=0 n=2\ntau=4 n=5\n"
    assert run("lookup", "--c", "3")[0] == 2


def test_admissible():
    assert run("admissible", "--tau", "4", "--n", "5") == (0, "yes\n")
    assert run("admissible", "--tau", "0", "--n", "4") == (0, "no\n")
    assert run("admissible")[0] == 2


def test_admissible_table():
    code, text = run("admissible", "--table", "6", "--format", "json")
    rows = json.loads(text)["rows"]
    assert code == 0
    assert len(rows) == 6 and all(len(r) == 6 for r in rows)
    grid = [r[1:] for r in rows[1:]]
    assert grid[3][0] == "x" and grid[4][0] == "x" and grid[4][1] == "x"
    assert grid[1] == ["Y"] * 5
    assert grid[0] == [".", "Y", ".", "Y", "."]


def test_abbv_check():
    code, text = run("abbv-check")
    assert code == 0 and text.endswith("PASS\n")


def test_lattice_info(tmp_path):
    path = tmp_path / "k8.json"
    path.write_text(json.dumps({"rank": 2, "gram": [[3, 1], [1, 3]]}))
    code, text = run("lattice-info", str(path))
    data = json.loads(text)
    assert code == 0
    assert data == {"rank": 2, "det": 8, "signature": [2, 0], "even": False, "discriminant_group": [8]}
    path.write_text(json.dumps({"rank": 2, "gram": [[1, 1], [1, 1]]}))
    assert run("lattice-info", str(path))[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "vanbrauer", "lookup", "--c", "-3", "--format", "json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"c": -3, "candidates": [[0, 3], [4, 6]]}
