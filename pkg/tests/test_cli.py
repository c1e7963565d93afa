import io
import json
import subprocess
import sys

import jsonschema
import pytest

from mjpoly.cli import coeffs_from_json, coeffs_to_json, latex_polynomial, main
from mjpoly.mpoly import MPolyKey, m_polynomial
from mjpoly.poly import Polynomial
from mjpoly.report import REPORT_SCHEMA, VerificationReport


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_coeffs_csv():
    assert run("coeffs", "--j", "0", "--ell", "1", "--mu", "3", "--format", "csv") == (0, "2,1\n1,1\n")


def test_coeffs_json():
    code, text = run("coeffs", "--j", "1", "--ell", "1", "--mu", "3")
    assert code == 0
    doc = json.loads(text)
    assert doc == {"j": 1, "ell": 1, "mu": "3", "coeffs": [["4", "1"], ["2", "1"], ["-1", "1"]]}


def test_coeffs_latex():
    code, text = run("coeffs", "--j", "2", "--ell", "1", "--mu", "3", "--format", "latex")
    assert text == r"\frac{1}{2}x^{3} - 4x^{2} + \frac{10}{3}x + \frac{20}{3}" + "\n"


@pytest.mark.parametrize("argv", [
    ["coeffs", "--j", "0", "--ell", "1", "--mu", "-2"],
    ["coeffs", "--j", "0", "--ell", "1", "--mu", "1.5"],
    ["coeffs", "--j", "-1", "--ell", "1", "--mu", "3"],
    ["eval", "--j", "1", "--ell", "1", "--x", "0"],
    ["eval", "--j", "1", "--ell", "1", "--mu", "3", "--x", "0.5"],
    ["verify", "--suites", "nope"],
    ["verify", "--mus", "3,-1"],
    ["gram", "--jmax", "1", "--ell", "0", "--mu", "-4"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert capsys.readouterr().err


def test_eval():
    assert run("eval", "--j", "1", "--ell", "1", "--mu", "3", "--x", "0") == (0, "4\n")
    assert run("eval", "--j", "0", "--ell", "2", "--x", "1") == (0, "19\n")
    assert run("eval", "--j", "0", "--ell", "0", "--x", "5") == (0, "1\n")
    assert run("eval", "--j", "2", "--ell", "1", "--mu", "3", "--x", "1/2") == (0, "355/48\n")
    code, text = run("eval", "--j", "0", "--ell", "1", "--mu", "3", "--x", "0.25", "--float")
    assert text == "2.25\n"


def test_eval_float_has_17_significant_digits():
    code, text = run("eval", "--j", "2", "--ell", "1", "--mu", "3", "--x", "0.3", "--float")
    assert float(text) == m_polynomial(j=2, ell=1, mu=3).eval_float(0.3)
    assert len(text.strip().replace(".", "").lstrip("0")) == 17


def test_gram():
    assert run("gram", "--jmax", "1", "--ell", "1", "--mu", "3") == (0, "18,0\n0,48\n")
    code, text = run("gram", "--jmax", "1", "--ell", "1", "--mu", "3", "--format", "json")
    assert json.loads(text)["gram"] == [["18", "0"], ["0", "48"]]


def test_latex_table():
    code, text = run("latex", "--jmax", "1", "--ell", "1", "--mu", "3")
    assert text.splitlines() == [r"M_{0}^{3,1}(x) &= x + 2 \\", r"M_{1}^{3,1}(x) &= -x^{2} + 2x + 4 \\"]


def test_verify_examples():
    code, text = run("verify", "--suites", "eigen", "--jmax", "2", "--ellmax", "1", "--mus", "3")
    assert code == 0
    jsonschema.validate(json.loads(text), REPORT_SCHEMA)
    code, text = run("verify", "--suites", "ortho", "--mus", "2")
    assert code == 0
    assert {e["status"] for e in json.loads(text)["entries"]} == {"reported"}


def test_verify_exit_1_on_failure(monkeypatch):
    from mjpoly import suites
    from mjpoly.report import make_entry

    def broken(grid):
        return VerificationReport(entries=[make_entry("broken", 0, 0, 1, False)])

    monkeypatch.setitem(suites.SUITES, "eigen", broken)
    code, text = run("verify", "--suites", "eigen")
    assert code == 1
    assert json.loads(text)["entries"][0]["status"] == "fail"


def test_verify_is_byte_stable():
    argv = ["verify", "--suites", "recurrences,laguerre,integral", "--jmax", "2", "--ellmax", "1",
            "--mus", "3,5/2"]
    assert run(*argv) == run(*argv)


def test_quadrature_flags_reach_the_numeric_checks():
    code, text = run("verify", "--suites", "hankel", "--jmax", "1", "--mus", "1",
                     "--quad-panels", "12", "--quad-order", "24")
    assert code == 0 and json.loads(text)["entries"]


def test_coefficient_file_round_trip():
    for key in (MPolyKey(3, 2, "5/2"), MPolyKey(4, 1, "-1/2"), MPolyKey(0, 0, 7)):
        text = coeffs_to_json(key)
        back_key, poly = coeffs_from_json(text)
        assert back_key == key and poly == m_polynomial(key)
        assert coeffs_to_json(back_key, poly) == text


def test_latex_polynomial_edge_cases():
    assert latex_polynomial(Polynomial()) == "0"
    assert latex_polynomial(Polynomial([-1])) == "-1"
    assert latex_polynomial(Polynomial([0, -1])) == "-x"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mjpoly", "coeffs", "--j", "0", "--ell", "1",
                           "--mu", "3", "--format", "csv"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2,1\n1,1\n"
