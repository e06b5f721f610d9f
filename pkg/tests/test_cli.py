import csv
import io
import json

import pytest

from montesinos.cli import CSV_FIELDS, main


def run(argv, capsys=None):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, [json.loads(l) for l in out.getvalue().splitlines() if l.startswith("{")], out.getvalue()


def test_cf():
    code, recs, _ = run(["cf", "47/36"])
    assert code == 0
    assert recs == [{"fraction": "47/36", "cf": "(1,3,3,1,2)", "crossings": 10}]


def test_cf_negative_argument():
    code, recs, _ = run(["cf", "-1/3"])
    assert code == 0 and recs[0]["cf"] == "(0,-3)"


def test_cf_rejects_integer_and_garbage(capsys):
    assert run(["cf", "4"])[0] == 1
    assert run(["cf", "x/y"])[0] == 1
    assert run(["cf", "1/0"])[0] == 1


def test_cr():
    code, recs, _ = run(["cr", "1/2,1/3,-2/3"])
    assert code == 0
    assert recs[0]["total"] == 8 and recs[0]["per_tangle"] == [2, 3, 3]


def test_cr_negative_first_tangle():
    code, recs, _ = run(["cr", "-1/2,-1/3,1/3"])
    assert code == 0 and recs[0]["total"] == 8


def test_bounds():
    code, recs, _ = run(["bounds", "1/2,1/3,-1/3"])
    assert code == 0
    assert (recs[0]["tau_min"], recs[0]["tau_max"]) == ("-8", "8")


def test_paths():
    code, recs, _ = run(["paths", "2/5"])
    assert code == 0 and len(recs) == 3
    assert all(r["type"] == "II" and r["length"] == "2" for r in recs)
    code, recs, _ = run(["paths", "2/5", "--monotone", "dec"])
    assert [r["path"] for r in recs] == ["<0>--<1/3>--<2/5>"]
    assert run(["paths", "3"])[0] == 1


def test_check_exit_codes(capsys):
    code, recs, _ = run(["check", "1/2,1/3,1/7"])
    assert code == 0 and recs[0]["equality"] is True
    assert run(["check", "1/2,1/4,1/3"])[0] == 1
    err = json.loads(capsys.readouterr().err.splitlines()[-1])
    assert err["error"] == "NotAKnot"
    assert run(["check", "1/2,2,1/3"])[0] == 1
    assert json.loads(capsys.readouterr().err.splitlines()[-1])["error"] == "IntegralTangle"


def test_sweep_json():
    code, recs, _ = run(["sweep", "--max-den", "3", "--tangles", "3"])
    assert code == 0
    assert recs[-1]["summary"] is True and recs[-1]["records"] == len(recs) - 1 == 128


def test_sweep_csv(capsys):
    code, _, text = run(["sweep", "--max-den", "3", "--tangles", "3", "--format", "csv"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_FIELDS
    assert len(rows) == 129
    assert all(r[4] == "true" for r in rows[1:])
    assert json.loads(capsys.readouterr().err)["records"] == 128


def test_sweep_bad_arguments():
    assert run(["sweep", "--max-den", "1", "--tangles", "3"])[0] == 1
    assert run(["sweep", "--max-den", "3", "--tangles", "2"])[0] == 1


def test_usage_errors():
    assert run([])[0] == 1
    assert run(["nope"])[0] == 1
    assert run(["--help"])[0] == 0


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "montesinos", "cf", "1/2"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["crossings"] == 2
