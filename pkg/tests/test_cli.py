import json
import subprocess
import sys
from pathlib import Path

import pytest

from lagrange_fps.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, golden", [
    (["series", "sin(tan(x))", "--order", "7"], "series_sin_tan_7.json"),
    (["limit", "sin(tan(x)) - tan(sin(x))", "asin(atan(x)) - atan(asin(x))"], "limit_arnold.json"),
    (["limit", "x", "x^3"], "limit_x_over_x3.json"),
    (["inverse", "x - x^2", "--order", "6"], "inverse_catalan_6.json"),
    (["arnold"], "arnold.json"),
])
def test_json_golden(capsys, argv, golden):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / golden).read_text())


def test_arnold_text(capsys):
    code, out, _ = run(capsys, "arnold")
    assert code == 0
    assert out.count("-1/30 x^7") == 2
    assert "limit = 1" in out


def test_arnold_order_too_low(capsys):
    code, _, err = run(capsys, "arnold", "--order", "5")
    assert code == 1
    assert "x^5" in err


def test_limit_text(capsys):
    assert run(capsys, "limit", "sin(x)", "x") == (0, "1\n", "")
    assert run(capsys, "limit", "x", "x^3")[1] == "+inf (order gap 2)\n"
    assert run(capsys, "limit", "--", "x", "-x^2")[1] == "two-sided divergence (order gap 1)\n"
    assert run(capsys, "limit", "x - x", "x", "--order", "4", "--max-order", "8")[1] \
        == "undetermined at order 8\n"


def test_limit_json_kinds(capsys):
    out = run(capsys, "limit", "x", "x^2", "--json")[1]
    assert json.loads(out) == {"kind": "two_sided_divergence", "gap": 1}
    out = run(capsys, "limit", "0", "x", "--order", "2", "--max-order", "4", "--json")[1]
    assert json.loads(out) == {"kind": "undetermined", "reached_order": 4}


def test_series_text(capsys):
    assert run(capsys, "series", "x - x^3/6", "--order", "4") == (0, "[0, 1, 0, -1/6, 0]\n", "")


def test_inverse_text(capsys):
    assert run(capsys, "inverse", "sin(x)", "--order", "5")[1] == "[0, 1, 0, 1/6, 0, 3/40]\n"


def test_check_theorem2(capsys):
    code, out, _ = run(capsys, "check-theorem2", "--trials", "100", "--order", "10", "--seed", "7")
    assert code == 0
    assert out == "100/100 hold\n"


def test_check_theorem2_json_deterministic(capsys):
    argv = ["check-theorem2", "--trials", "20", "--order", "6", "--seed", "3", "--json"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
    assert json.loads(first)["held"] == 20


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["series"],
    ["series", "x", "--order", "0"],
    ["series", "x", "--order", "65"],
    ["series", "x", "--order", "ten"],
    ["limit", "x"],
    ["limit", "x", "x", "--order", "10", "--max-order", "5"],
    ["check-theorem2", "--order", "1"],
    ["check-theorem2", "--trials", "0"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize("argv", [
    ["series", "sin[x]"],
    ["series", "sin(1 + x)"],
    ["series", "1/x"],
    ["inverse", "x^2"],
    ["series", "cosh(x)"],
])
def test_evaluation_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err.startswith("error:")


def test_syntax_error_message_has_offset(capsys):
    err = run(capsys, "series", "sin[x]")[2]
    assert "offset 3" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lagrange_fps", "arnold"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "limit = 1" in proc.stdout
