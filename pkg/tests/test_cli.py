import json
import subprocess
import sys

import pytest

from unigf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_text(capsys):
    code, out, _ = run(capsys, "poly", "2")
    assert code == 0
    assert out == "(a+b)*x^2 + (l+m)*x\n"


def test_poly_bound_and_structured(capsys):
    code, out, _ = run(capsys, "poly", "3", "--bind", "a=1,b=0,l=1,m=0", "--format", "structured")
    assert code == 0
    env = json.loads(out)
    assert env["command"] == "poly"
    assert env["parameters"] == {"n": 3, "bind": {"a": "1", "b": "0", "l": "1", "m": "0"}}
    assert env["result"]["text"] == "x^3 + 3*x^2 + x"
    assert {tuple(r["exponents"]): r["coeff"] for r in env["result"]["terms"]} == {
        (3, 0, 0, 0, 0): "1", (2, 0, 0, 0, 0): "3", (1, 0, 0, 0, 0): "1"}


@pytest.mark.parametrize("argv", [
    ["poly", "0"], ["poly", "2", "--bind", "q=1"], ["triangle", "99", "3"],
    ["triangle", "1", "3"], ["triangle", "2", "0"], ["enumerate", "9", "2"],
    ["enumerate", "0", "1"], ["verify", "3", "bogus"], ["oeis-check", "abc", "x.txt"]])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "usage error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["poly"])
    assert exc.value.code == 2


def test_triangle(capsys):
    code, out, _ = run(capsys, "triangle", "2", "4")
    assert code == 0
    assert out == "1\n1 1\n1 3 1\n1 7 6 1\n"
    code, out, _ = run(capsys, "triangle", "1", "3", "--bind", "b=0,m=0")
    assert out == "1\n1 1\n1 3 1\n"
    code, out, _ = run(capsys, "triangle", "-", "2", "--bind", "a=1,b=1/2,l=1,m=0",
                       "--allow-rational")
    assert code == 0 and out == "1\n1 3/2\n"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "2", "1", "--stats")
    assert code == 0
    assert out == "1,2 rlb=0 nsb=0 rle=1 nse=0\n2,1 rlb=0 nsb=0 rle=0 nse=1\n"
    code, out, _ = run(capsys, "enumerate", "3", "2", "--format", "structured")
    assert json.loads(out)["result"]["count"] == 12
    code, out, err = run(capsys, "enumerate", "2", "3")
    assert code == 0 and out == "" and "warning" in err


def test_verify_and_mutate(capsys):
    code, out, _ = run(capsys, "verify", "4", "recurrences", "lemmas")
    assert code == 0
    assert out.rstrip().endswith("ALL PASS: 9/9")
    code, out, _ = run(capsys, "verify", "4", "recurrences", "lemmas", "ode", "--mutate")
    assert code == 1
    assert "FAIL  four-way equality" in out
    assert "FAIL  differential equation" in out


def test_oeis_check(capsys, bfile_dir, tmp_path):
    code, out, _ = run(capsys, "oeis-check", "2", str(bfile_dir / "b008277.txt"), "--n-max", "6")
    assert code == 0
    assert out == "case 2 [triangle-by-rows]: agree on all 21 terms\n"
    code, out, _ = run(capsys, "oeis-check", "4", str(bfile_dir / "b008277.txt"), "--n-max", "4")
    assert code == 1 and "MISMATCH" in out
    code, _, err = run(capsys, "oeis-check", "2", str(tmp_path / "missing.txt"))
    assert code == 3 and "cannot read" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("1 1\n2 two\n")
    code, _, err = run(capsys, "oeis-check", "2", str(bad))
    assert code == 3 and "line 2" in err


def test_timing_goes_to_stderr(capsys):
    code, out, err = run(capsys, "--timing", "poly", "1")
    assert out == "x\n"
    assert err.startswith("elapsed")


@pytest.mark.parametrize("argv", [
    ["poly", "5", "--format", "structured"], ["triangle", "13", "6"],
    ["enumerate", "4", "2", "--stats"], ["verify", "3", "degenfun"]])
def test_repeatable(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[:2] == second[:2]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "unigf", "poly", "1"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "x\n"
