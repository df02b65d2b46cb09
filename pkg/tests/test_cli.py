import json
import os
import subprocess
import sys

import pytest

from monodromy import presentation
from monodromy.cli import main

FIX = os.path.join(os.path.dirname(__file__), "fixtures")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_ok(capsys):
    code, out, _ = run(capsys, "validate", "h4")
    assert code == 0
    assert out.rstrip().endswith("PASS")


def test_validate_coassociativity_witness(capsys):
    code, out, _ = run(capsys, "validate", os.path.join(FIX, "broken_coassociativity.json"))
    assert code == 1
    assert "[FAIL] coassociativity" in out
    tail = out[out.index("[FAIL] coassociativity"):]
    assert "at = ['g']" in tail.splitlines()[1]


def test_validate_g_tensor_e(capsys):
    # coassociative, but the counit and antipode axioms fail at g
    code, out, _ = run(capsys, "validate", os.path.join(FIX, "delta_g_is_g_e.json"))
    assert code == 1
    assert "[FAIL] counit" in out
    assert "[FAIL] coassociativity" not in out


def test_zero_denominator_exit_2(capsys):
    code, _, err = run(capsys, "validate", os.path.join(FIX, "zero_denominator.json"))
    assert code == 2
    assert "counit.g" in err


def test_truncated_json_exit_2(capsys):
    code, _, err = run(capsys, "rank", os.path.join(FIX, "truncated.json"))
    assert code == 2
    assert "line" in err


def test_missing_file_and_unknown_theorem(capsys):
    assert run(capsys, "validate", "/nonexistent/x.json")[0] == 2
    assert run(capsys, "verify", "thm9.9", "h4")[0] == 2
    assert run(capsys, "rank", "h4", "--r", "nope")[0] == 2


def test_bad_r_matrix_exit_1(capsys):
    code, out, _ = run(capsys, "rank", os.path.join(FIX, "bad_r_matrix.json"))
    assert code == 1
    assert "FAIL" in out


def test_budget_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("MONODROMY_BUDGET", "8")
    code, _, err = run(capsys, "build", "multiloop", "h4", "--r", "R1", "--m", "2")
    assert code == 3
    assert "budget" in err


def test_rank(capsys):
    code, out, _ = run(capsys, "rank", "double_z2")
    assert code == 0
    assert "4/4 factorizable" in out
    code, out, _ = run(capsys, "rank", "h4", "--r", "R1", "--json")
    assert json.loads(out)["verdict"] == "1/4 not factorizable"


@pytest.mark.parametrize("what,extra", [("dual", []), ("double", []), ("monodromy", ["--r", "R1"]),
                                        ("gauged", ["--r", "R1"]), ("multiloop", ["--r", "R1", "--m", "2"]),
                                        ("twisted-square", ["--r", "R1"])])
def test_build_round_trip(capsys, tmp_path, what, extra):
    out = tmp_path / f"{what}.json"
    code, _, _ = run(capsys, "build", what, "h4", *extra, "-o", str(out))
    assert code == 0
    text = out.read_text()
    p = presentation.loads(text)
    assert presentation.dumps(p.algebra, p.r_matrices) == text
    code, stdout, _ = run(capsys, "validate", str(out))
    assert code == 0, stdout


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "prop2.1", "z2_group", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["schema"] == "monodromy-report/1"
    assert doc["reports"][0]["id"] == "prop2.1"


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "monodromy", "rank", "double_z2"], capture_output=True, text=True)
    assert r.returncode == 0
    assert "4/4 factorizable" in r.stdout
