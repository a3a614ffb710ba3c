import json
import subprocess
import sys

import pytest

from descalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_descent_type_a(capsys):
    assert run(capsys, "descent", "-f", "A", "3,4,5,2,6,1")[:2] == (0, "3,2,1")


def test_descent_signed_window_with_leading_minus(capsys):
    assert run(capsys, "descent", "-f", "S", "-3,4,5,-6,-2,-7,1")[:2] == (0, "-1,2,-2,-1,1")


def test_count(capsys):
    assert run(capsys, "count", "-f", "S", "-n", "4")[:2] == (0, "54")
    code, out, _ = run(capsys, "count", "-f", "B", "-n", "3", "--group", "--json")
    assert json.loads(out) == {"flavor": "B", "n": 3, "indices": 8, "group_order": 48}


def test_multiply(capsys):
    assert run(capsys, "multiply", "-f", "A", "-n", "2", "1,1", "1,1")[:2] == (0, "1*(2)")


def test_multiply_json(capsys):
    code, out, _ = run(capsys, "multiply", "-f", "S", "-1,1", "2", "--json")
    assert code == 0
    assert json.loads(out)["terms"] == [{"index": "-1,1", "coeff": 1}]


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "-f", "A", "-N", "3", "--basis", "monomial", "2,1")
    assert (code, out) == (0, "x1^2*x2 + x1^2*x3 + x2^2*x3")


def test_gamma_window_and_poset(capsys, tmp_path):
    code, out, _ = run(capsys, "gamma", "-f", "B", "-N", "3", "-3,2,-1")
    assert code == 0 and "x1*x2*x3" in out
    poset = tmp_path / "p.txt"
    poset.write_text("3\n2 < 3\n2 < 1\n")
    code, out, _ = run(capsys, "gamma", "-N", "2", "--poset", str(poset))
    assert (code, out) == (0, "x1*x2^2 + x1^2*x2")


def test_table_csv_and_json(capsys):
    code, out, _ = run(capsys, "table", "-f", "A", "-n", "2")
    assert code == 0 and len(out.splitlines()) == 5
    code, out, _ = run(capsys, "table", "-f", "A", "-n", "2", "--json", "--include-zero")
    assert len(json.loads(out)) == 8


def test_cap_error_names_flag(capsys):
    code, out, err = run(capsys, "table", "-f", "B", "-n", "5")
    assert code != 0 and "--cap-override" in err and out == ""


def test_bad_input_is_reported(capsys):
    code, _, err = run(capsys, "descent", "-f", "A", "1,1")
    assert code != 0 and "error" in err
    code, _, err = run(capsys, "multiply", "-f", "A", "2", "1,2")
    assert code != 0 and "degrees differ" in err
    code, _, err = run(capsys, "gamma", "--poset", "/nonexistent/poset")
    assert code != 0


def test_unknown_verb_exits_nonzero(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code != 0


def test_verify_single_flavor(capsys):
    code, out, _ = run(capsys, "verify", "-f", "B", "--only")
    assert code == 0
    assert out and all(line.startswith("PASS") for line in out.splitlines())


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "descalg", "descent", "-f", "B", "-3,2,-1"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "0,2,1"
