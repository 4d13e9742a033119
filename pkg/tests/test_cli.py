import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from tanhlah import wire
from tanhlah.cli import run
from tanhlah.errors import UsageError
from tanhlah.series import Family
from tanhlah.suites import SUITES
from tanhlah.triangles import triangle


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_table_csv_example():
    code, text = call("table", "--family", "tanh", "--n", "3", "--format", "csv")
    assert code == 0
    lines = text.splitlines()
    assert lines[0].startswith("# family=tanh;")
    assert "l(0,m)=L(0,m)=[m=0]" in lines[0]
    assert lines[-1] == "0,-2,0,1"


def test_table_json():
    code, text = call("table", "--family", "s2", "--n", "3", "--format", "json")
    assert code == 0
    assert json.loads(text)["rows"][3] == ["0", "4", "6", "1"]


@pytest.mark.parametrize("family", [f.value for f in Family])
@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_dump_round_trip(family, fmt):
    code, text = call("table", "--family", family, "--n", "12", "--format", fmt)
    assert code == 0
    if fmt == "csv":
        fam, rows = wire.parse_table_csv(text)
        again = wire.table_csv(fam, rows)
    else:
        fam, rows = wire.parse_table_json(text)
        again = wire.table_json(fam, rows)
    assert fam.value == family
    assert rows == triangle(fam).rows(12)
    assert again == text


def test_verify_orthogonality_exit_zero():
    code, text = call("verify", "--suite", "orthogonality", "--n-max", "10")
    assert code == 0
    assert json.loads(text)["ok"] is True


@pytest.mark.parametrize("suite", [*SUITES, "all"])
def test_every_suite_addressable(suite, capsys):
    code, text = call("verify", "--suite", suite, "--n-max", "6")
    data = json.loads(text)
    assert data["suite"] == suite
    assert code == (0 if data["ok"] else 1)
    assert "PASS" in capsys.readouterr().err


def test_verify_mismatch_exit_one():
    # the polynomials suite carries the odd-sum-from-one identity, which does not vanish
    code, text = call("verify", "--suite", "polynomials", "--n-max", "6")
    data = json.loads(text)
    failing = [r["identity"] for r in data["reports"] if not r["ok"]]
    assert code == 1
    assert failing == ["odd-stirling-sum-from-1"]


def test_cumulants_example():
    code, text = call("cumulants", "--r", "1", "--lambda", "1/2", "--n", "3")
    assert code == 0
    data = json.loads(text)
    assert data["shifted_gamma"] == {"a": "3/4", "b": "1", "c": "1/4"}
    assert data["sg_cumulants"] == ["1/2", "3/4", "3/2"]
    assert data["nb_cumulants"] == ["1/2", "3/4", "3/2"]


def test_cumulants_reciprocity_flag():
    code, text = call("cumulants", "--r", "7/3", "--lambda", "2/5", "--n", "8", "--check-reciprocity")
    assert code == 0
    assert json.loads(text)["reciprocity"]["ok"] is True


def test_cumulants_zero_lambda_is_usage_error():
    assert call("cumulants", "--r", "1", "--lambda", "0", "--n", "3")[0] == 2


def test_convert():
    code, text = call("convert", "--rule", "tanh-from-s2-via-lah-upper", "--n", "4")
    data = json.loads(text)
    assert code == 0 and data["matches_target"] is True
    assert data["rows"][3] == ["0", "-2", "0", "1"]


def test_poly_json_and_text():
    code, text = call("poly", "--family", "delta", "--k", "4")
    data = json.loads(text)
    assert code == 0
    assert data["coeffs"] == ["-7/90", "1/18"]
    assert data["degree"] == "1" and data["leading"] == "1/18"
    code, text = call("poly", "--family", "lambda", "--k", "2", "--format", "text")
    assert text == "lambda_2(x) = -1/2*x^0 + 1/2*x^1\n"


def test_poly_lambda_zero_is_usage_error():
    assert call("poly", "--family", "lambda", "--k", "0")[0] == 2


def test_series():
    code, text = call("series", "--family", "tanh", "--m", "1", "--order", "5")
    data = json.loads(text)
    assert data["coeffs"] == ["0", "1", "0", "-1/3", "0", "2/15"]
    assert data["egf_values"] == ["0", "1", "0", "-2", "0", "16"]


@pytest.mark.parametrize("argv", [
    ["table", "--family", "bogus", "--n", "3"],
    ["table", "--family", "tanh", "--n", "-1"],
    ["table", "--family", "tanh"],
    ["verify", "--suite", "nope", "--n-max", "3"],
    ["cumulants", "--r", "0.5", "--lambda", "1", "--n", "2"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_two(argv, capsys):
    assert call(*argv)[0] == 2
    assert "usage" in capsys.readouterr().err


def test_no_floats_on_the_wire():
    with pytest.raises(TypeError):
        wire.to_wire(0.5)
    assert wire.to_wire(Fraction(-3, 4)) == "-3/4"
    assert wire.fmt(Fraction(6, 3)) == "2"


def test_parse_rational():
    assert wire.parse_rational("-7/3") == Fraction(-7, 3)
    for bad in ("1/0", "1.5", "a", "1/-2"):
        with pytest.raises(UsageError):
            wire.parse_rational(bad)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tanhlah", "table", "--family", "lah", "--n", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "0,2,1"
