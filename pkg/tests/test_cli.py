import csv
import io
import json
import math

import pytest

from spheregreen.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_eval_all_methods_agree(capsys):
    code, out, _ = run(capsys, "eval", "--n", "2", "--L", "-0.4", "--theta", "1.5707963",
                       "--method", "all")
    assert code == 0
    table = rows(out)
    assert out.splitlines()[0] == "theta,t,method,value,error_estimate,work"
    routes = {r["method"]: r for r in table}
    assert set(routes) == {"series", "integral", "appell", "max_discrepancy"}
    gap = routes["max_discrepancy"]
    assert float(gap["value"]) <= float(gap["error_estimate"])


def test_theta_zero_rejected(capsys):
    code, _, err = run(capsys, "eval", "--n", "2", "--a", "0", "--theta-min", "0",
                       "--theta-max", "1", "--theta-steps", "3")
    assert code == 2 and "theta = 0 is excluded" in err


def test_excluded_L(capsys):
    code, _, err = run(capsys, "eval", "--n", "2", "--L", "-0.5", "--method", "integral",
                       "--theta", "1")
    assert code == 2 and "(1-n)/2" in err


def test_a_and_L_exclusive(capsys):
    with pytest.raises(SystemExit):
        main(["eval", "--n", "2", "--a", "1", "--L", "0.5", "--theta", "1"])


def test_grid_order_and_threads(capsys, monkeypatch):
    args = ("eval", "--n", "3", "--a", "2.5", "--theta-min", "0.3", "--theta-max", "3.1",
            "--theta-steps", "7")
    _, serial, _ = run(capsys, *args)
    monkeypatch.setenv("THREADS", "4")
    _, parallel, _ = run(capsys, *args)
    assert serial == parallel
    thetas = [float(r["theta"]) for r in rows(serial)]
    assert thetas == sorted(thetas) and len(thetas) == 7


def test_seventeen_digits(capsys):
    _, out, _ = run(capsys, "eval", "--n", "2", "--a", "0", "--theta", "2")
    value = rows(out)[0]["value"]
    assert float(value) == pytest.approx(1 + math.log((1 - math.cos(2)) / 2), abs=1e-10)
    assert float(repr(float(value))) == float(value)


def test_json_and_output_file(capsys, tmp_path):
    target = tmp_path / "g.json"
    code, out, _ = run(capsys, "eval", "--n", "3", "--L", "0.3", "--theta", "1",
                       "--format", "json", "--output", str(target))
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert list(data[0]) == ["theta", "t", "method", "value", "error_estimate", "work"]


def test_route_failure_marks_row(capsys, monkeypatch):
    from spheregreen import AccuracyError, cli

    def refuse(*args, **kwargs):
        raise AccuracyError("quadrature missed tol")

    monkeypatch.setattr(cli, "green_integral", refuse)
    code, out, err = run(capsys, "eval", "--n", "3", "--L", "0.3", "--theta", "1")
    assert code == 1
    assert rows(out)[0]["value"] == "nan" and "AccuracyError" in err


def test_modes_nonresonant(capsys):
    code, out, _ = run(capsys, "modes", "--n", "2", "--a", "5", "--l", "0-5")
    assert code == 0
    assert all(float(r["rel_err"]) < 1e-6 for r in rows(out))


def test_modes_resonant(capsys):
    code, out, _ = run(capsys, "modes", "--n", "2", "--a", "6", "--l", "1-3")
    assert code == 0
    r2 = [r for r in rows(out) if r["l"] == "2"][0]
    assert r2["exact"] == "omitted (l=L)" and abs(float(r2["extracted"])) < 1e-8


def test_modes_beyond_support(capsys):
    code, out, err = run(capsys, "modes", "--n", "2", "--a", "5", "--l", "40")
    assert code == 1 and rows(out)[0]["exact"] == "AccuracyError"


def test_selftest_forced_failure(capsys):
    code, out, _ = run(capsys, "selftest", "--tol", "1e-16", "--only", "3")
    assert code == 1 and "AccuracyError" in out


def test_selftest_empty_filter(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "")
    assert code == 0 and "no criteria selected" in out


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "2,6,8")
    assert code == 0 and out.count("[PASS]") == 3


def test_selftest_full_suite(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and out.count("[PASS]") == 8
