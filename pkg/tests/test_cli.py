import io
import json
import subprocess
import sys

import pytest

from conftest import FIXTURES, TREFOIL
from leadsto.cli import main


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def fx(name):
    return str(FIXTURES / name)


def test_validate(capsys, tmp_path):
    code, out, _ = run(["validate", fx("trefoil.pd")], capsys)
    assert code == 0 and json.loads(out)["crossings"] == 3
    bad = tmp_path / "bad.pd"
    bad.write_text("X[1,4,2,5] X[3,6,4,1] X[5,2,6]")
    assert run(["validate", str(bad)], capsys)[0] == 2
    split = tmp_path / "split.pd"
    split.write_text("X[1,1,2,2] X[3,3,4,4]")
    assert run(["validate", str(split)], capsys)[0] == 3
    assert run(["validate", "--code", "X[1,1,2,3] X[2,4,3,4]"], capsys)[0] == 3
    assert run(["validate", "--code", "X[1,2,1]"], capsys)[0] == 2


def test_validate_stdin_and_gauss(capsys, monkeypatch):
    code, out, _ = run(["validate", "--format", "text"], capsys, stdin=TREFOIL, monkeypatch=monkeypatch)
    assert code == 0 and out.startswith("valid: n=3")
    code, out, _ = run(["validate", "--code", "O1+U2+O3+U1+O2+U3+"], capsys)
    assert code == 0
    assert run(["validate", "--code", "O1+U2+U1+O2+"], capsys)[0] == 3


def test_tait(capsys):
    code, out, _ = run(["tait", fx("torus_2_5.pd")], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["strong"] is True and doc["torus_minimal"] == 5
    sizes = sorted((doc["gray"]["vertices"], doc["white"]["vertices"]))
    assert sizes == [2, 5]
    code, out, _ = run(["tait", fx("nonstrong_8.pd")], capsys)
    doc = json.loads(out)
    assert doc["strong"] is False and len(doc["strength_witness"]["arcs"]) == 2
    code, out, _ = run(["tait", fx("figure_eight.pd")], capsys)
    assert json.loads(out)["strong"] is True
    code, out, _ = run(["tait", fx("trefoil.pd"), "--format", "dot"], capsys)
    assert out.count("graph ") == 2


def test_decompose(capsys):
    code, out, _ = run(["decompose", fx("trefoil_sum.pd")], capsys)
    assert code == 0 and [p["crossings"] for p in json.loads(out)["parts"]] == [3, 3]


def test_decide_exit_codes(capsys):
    code, out, _ = run(["decide", fx("torus_2_7.pd"), "--family", "torus", "--m", "5", "--verify"], capsys)
    assert code == 0 and json.loads(out)["certificate"]["kind"] == "minor-witness"
    code, out, _ = run(["decide", fx("torus_2_9.pd"), "--family", "twist", "--m", "5"], capsys)
    assert code == 1 and json.loads(out)["certificate"]["reason"] == "torus-minimal-projection"
    code, out, _ = run(["decide", fx("trefoil.pd"), "--family", "torus", "--m", "5"], capsys)
    assert code == 1 and json.loads(out)["certificate"]["reason"] == "exhausted-assignments"
    code, out, _ = run(["decide", fx("nonstrong_8.pd"), "--family", "torus", "--m", "5",
                        "--budget", "1"], capsys)
    assert code == 4 and json.loads(out)["answer"] == "undecided-budget"


def test_usage_errors(capsys):
    assert run(["decide", fx("trefoil.pd"), "--family", "torus", "--m", "2"], capsys)[0] == 64
    assert run(["decide", fx("trefoil.pd"), "--family", "twist", "--m", "1"], capsys)[0] == 64
    assert run(["decide", fx("trefoil.pd")], capsys)[0] == 64
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main(["validate", "--budget", "-1", fx("trefoil.pd")])
    assert exc.value.code == 64
    assert run(["validate", "/nonexistent/file.pd"], capsys)[0] == 64


def test_oracle(capsys):
    code, out, _ = run(["oracle", fx("trefoil.pd")], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["assignments"] == 64
    assert sum(r["count"] for r in doc["reached"]) == 64
    code, out, _ = run(["oracle", "--code", "X[1,1,2,2]"], capsys)
    assert len(json.loads(out)["reached"]) == 2
    code, out, _ = run(["oracle", "--code", ""], capsys)
    assert len(json.loads(out)["reached"]) == 1
    code, out, _ = run(["oracle", fx("torus_2_5.pd"), "--target-pd", TREFOIL], capsys)
    assert code == 0 and json.loads(out)["answer"] == "yes"
    code, out, _ = run(["oracle", fx("torus_2_7.pd"), "--family", "twist", "--m", "4"], capsys)
    assert code == 1
    assert run(["oracle", fx("torus_2_7.pd"), "--budget", "3"], capsys)[0] == 4


def test_render(capsys):
    code, out, _ = run(["render", fx("torus_2_7.pd"), "--format", "dot", "--family", "torus", "--m", "5"], capsys)
    assert code == 0 and "cluster_0" in out
    code, out, _ = run(["render", fx("trefoil.pd"), "--format", "dot"], capsys)
    assert out.startswith("graph projection")
    code, out, _ = run(["render", fx("trefoil.pd"), "--format", "text"], capsys)
    assert out.strip().startswith("X[")


def test_random_input(capsys):
    a = run(["validate", "--random-crossings", "6", "--seed", "4"], capsys)
    b = run(["validate", "--random-crossings", "6", "--seed", "4"], capsys)
    assert a == b and a[0] == 0


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("LEADSTO_BUDGET", "2")
    assert run(["oracle", fx("trefoil.pd")], capsys)[0] == 4


def test_output_deterministic():
    cmd = [sys.executable, "-m", "leadsto.cli", "decide", fx("torus_2_7.pd"),
           "--family", "torus", "--m", "5"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout
