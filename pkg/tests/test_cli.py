import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from octalg.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_mul():
    assert run("mul", "--algebra", "oct", "--pretty", "e1", "e4") == (0, "e5\n")
    assert run("mul", "--algebra", "oct", "e4", "e1") == (0, "[0, 0, 0, 0, 0, -1, 0, 0]\n")
    assert run("mul", "--algebra", "quat", "--params", "2,3", "--pretty", "e1", "e3") == (0, "-2e2\n")
    assert run("mul", "--algebra", "coct", "--pretty", "i*e2", "e2") == (0, "-i\n")
    assert run("mul", "--algebra", "coct", "--kind", "central", "--pretty", "e1 + i", "e1") == (0, "-1 + i*e1\n")
    code, out = run("mul", "--algebra", "zorn", "[0,1,0,0,0,0,0,0]", "[0,0,0,0,1,0,0,0]")
    assert code == 0 and json.loads(out) == {"a": 1, "u": [0, 0, 0], "v": [0, 0, 0], "b": 0}


@pytest.mark.parametrize("argv,name", [
    (("rep", "lambda", "i"), "lambda_i"),
    (("rep", "rho", "i"), "rho_i"),
    (("rep", "const", "L1"), "L1"),
    (("rep", "const", "R1"), "R1"),
    (("rep", "const", "M1"), "M1"),
    (("rep", "const", "eps"), "eps"),
    (("rep", "const", "tau"), "tau"),
    (("rep", "const", "sigma"), "sigma"),
    (("rep", "const", "theta"), "theta"),
    (("rep", "Lambda", "e1"), "theta"),
])
def test_rep_golden(argv, name):
    code, out = run(*argv)
    assert code == 0
    assert out.encode() == (GOLDEN / f"{name}.csv").read_bytes()


def test_rep_json():
    code, out = run("rep", "lambda", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    code, out = run("rep", "Phi", "i", "--format", "json")
    m = json.loads(out)
    assert len(m) == 16 and m[8][0] == 1 and m[0][8] == -1


def test_verify():
    code, out = run("verify", "2.3")
    report = json.loads(out)
    assert code == 0 and report["verdict"] == "holds" and report["mode"] == "exhaustive"
    code, out = run("verify", "2.6")
    report = json.loads(out)
    assert code == 0 and report["verdict"] == "fails" and not report["asserted"]
    assert {"id", "mode", "seed", "verdict", "counterexamples"} <= set(report)
    code, out = run("verify", "E2.22", "--random", "20", "--seed", "5")
    report = json.loads(out)
    assert report["seed"] == 5 and report["count"] == 20


def test_verify_all_emits_one_line_each():
    code, out = run("verify", "all", "--random", "5")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 27
    assert [json.loads(x)["id"] for x in lines][:2] == ["R2.2a", "R2.2b"]


def test_invertibles():
    code, out = run("invertibles", "--rec", "1,1,1", "--seed", "0,1,1", "--algebra", "quat",
                    "--params", "1,-1", "--bound", "200")
    report = json.loads(out)
    assert code == 0 and report["n0"] == 0 and report["zero_norm_indices"] == []
    assert len(report["norms"]) == 201
    code, out = run("invertibles", "--rec", "1,0,0", "--seed", "1,1,1", "--algebra", "quat",
                    "--params", "1,-1", "--bound", "50", "--out", "csv")
    rows = out.splitlines()
    assert rows[0] == "n,norm,nonzero" and rows[1] == "0,0,0" and len(rows) == 52


def test_tables():
    code, out = run("tables", "--algebra", "quat", "--params", "2,3")
    table = json.loads(out)["table"]
    assert table[1] == ["e1", "-2", "e3", "-2e2"]
    assert table[3][3] == "-6"
    code, out = run("tables", "--algebra", "oct", "--pretty")
    assert out.splitlines()[1].split() == ["1", "1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"]


@pytest.mark.parametrize("argv,code", [
    (("verify", "9.9"), 2),
    (("mul", "--algebra", "oct", "e9", "e1"), 2),
    (("mul", "--algebra", "nope", "e1", "e1"), 2),
    (("invertibles", "--rec", "1,1", "--seed", "0,1,1", "--algebra", "quat"), 2),
    (("rep", "const", "nope"), 2),
    (("rep", "lambda", "e1", "--params", "1,-1"), 3),
    (("mul", "--algebra", "quat", '{"coeffs":[1,0,0,0],"params":{"beta1":1,"beta2":2}}', "e1"), 3),
])
def test_exit_codes(argv, code, capsys):
    assert run(*argv)[0] == code
    assert "error" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "octalg", "rep", "const", "M1"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == (GOLDEN / "M1.csv").read_text()
