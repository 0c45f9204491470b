import csv
import io
import json
import subprocess
import sys

import pytest

from unitcharge.cli import emit_report, run, to_json


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_balance_json():
    code, out, _ = invoke("balance", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert list(data) == [
        "charge_gaussian",
        "charge_si",
        "alpha",
        "alpha_inverse",
        "alpha_exp",
        "discrepancy_a",
        "discrepancy_b",
    ]
    assert f"{data['charge_si']:.3g}" == "1.55e-19"


def test_balance_diameter_does_not_change_result():
    base = json.loads(invoke("balance", "--format", "json")[1])
    other = json.loads(invoke("balance", "--diameter", "3nm", "--format", "json")[1])
    assert other["charge_si"] == pytest.approx(base["charge_si"], rel=1e-12)


def test_casimir_routes_opposite_sign():
    e3 = json.loads(invoke("casimir", "--diameter", "1m", "--route", "3d", "--format", "json")[1])["energy"]
    e1 = json.loads(invoke("casimir", "--diameter", "1m", "--route", "1d", "--format", "json")[1])["energy"]
    assert e3 < 0 < e1
    assert e1 / e3 == pytest.approx(-3.0, rel=1e-15)


def test_casimir_csv_header():
    code, out, _ = invoke("casimir", "--diameter", "1um", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["route", "diameter", "energy", "pressure", "series_coefficient", "zeta4"]
    assert float(rows[1][3]) == pytest.approx(-1.3794e-4, rel=1e-4)


def test_casimir_1d_csv_has_empty_pressure():
    out = invoke("casimir", "--route", "1d", "--format", "csv")[1]
    assert list(csv.DictReader(io.StringIO(out)))[0]["pressure"] == ""


def test_casimir_lambda_max_json():
    data = json.loads(invoke("casimir", "--route", "3d", "--lambda-max", "100", "--format", "json")[1])
    assert data["lambda_max"] == 100
    assert data["series_partial"] == pytest.approx(data["series_coefficient"], rel=1e-6)


def test_sweep_rows_identical_charge():
    code, out, _ = invoke("sweep", "--diameters", "1e-9m,1m", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 2
    assert float(rows[0]["charge_si"]) == pytest.approx(float(rows[1]["charge_si"]), rel=1e-12)


@pytest.mark.parametrize("diameters", [",", "", " , "])
def test_sweep_empty_list_is_usage_error(diameters):
    code, _, err = invoke("sweep", "--diameters", diameters)
    assert code == 1
    assert err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["casimir", "--route", "2d"],
        ["casimir", "--diameter", "1 furlong"],
        ["balance", "--format", "xml"],
        ["casimir", "--lambda-max", "0"],
    ],
)
def test_usage_errors_exit_1(argv):
    assert invoke(*argv)[0] == 1


def test_numeric_failure_exit_2():
    code, _, err = invoke("moments", "--eps", "1e-6", "--contour", "real", "--format", "json")
    assert code == 2
    report = json.loads(err)
    assert report["error"] == "QuadratureError"
    assert "error_estimate" in report


def test_domain_error_exit_2():
    code, _, err = invoke("sum-check", "--family", "lorentzian", "--beta", "-1")
    assert code == 2
    assert json.loads(err)["error"] == "DomainError"


def test_moments_json_schema():
    data = json.loads(invoke("moments", "--kernel", "cosine", "--eps", "0.5", "--lam", "1", "--format", "json")[1])
    assert list(data) == ["kernel", "eps", "xi", "closed_form", "quadrature", "quadrature_error", "limit"]
    assert data["quadrature"] == pytest.approx(data["closed_form"], rel=1e-10)
    no_oracle = json.loads(invoke("moments", "--no-oracle", "--format", "json")[1])
    assert "quadrature" not in no_oracle


def test_sum_check_json():
    data = json.loads(invoke("sum-check", "--family", "gaussian", "--format", "json")[1])
    assert data["converged"] is True
    rows = json.loads(invoke("sum-check", "--family", "lorentzian", "--beta", "0.1,1,10", "--format", "json")[1])
    assert [r["param"] for r in rows] == [0.1, 1.0, 10.0]
    assert all(r["converged"] for r in rows)


def test_constants_json():
    rows = json.loads(invoke("constants", "--format", "json")[1])
    names = {r["name"]: r for r in rows}
    assert names["c"]["value"] == 2.997924562e8
    assert names["c"]["unit"] == "m/s"


def test_output_file(tmp_path):
    target = tmp_path / "b.json"
    code, out, _ = invoke("balance", "--format", "json", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["alpha_inverse"] == pytest.approx(145.903, rel=1e-5)


def test_unwritable_output(tmp_path):
    code, _, err = invoke("balance", "--output", str(tmp_path / "missing" / "x.json"))
    assert code == 1


@pytest.mark.parametrize("fmt", ["json", "csv", "table"])
def test_deterministic_output(fmt):
    a = invoke("sweep", "--diameters", "1nm,1um,1m", "--format", fmt)[1]
    b = invoke("sweep", "--diameters", "1nm,1um,1m", "--format", fmt, "--parallel")[1]
    assert a == b


def test_json_round_trip_is_exact():
    from unitcharge.electro import balance_charge

    res = balance_charge()
    data = json.loads(invoke("balance", "--format", "json")[1])
    assert data["charge_gaussian"] == res.charge_gaussian.value
    assert data["charge_si"] == res.charge_si.value
    assert data["alpha"] == res.alpha
    assert data["discrepancy_b"] == res.discrepancy_b


def test_float_format_17_digits():
    assert to_json(0.1) == "0.10000000000000001"
    assert to_json(1.0) == "1.0"
    assert to_json({"x": None, "y": [True, 2]}) == '{"x": null, "y": [true, 2]}'


def test_emit_table_alignment():
    text = emit_report([{"a": 1.0, "bb": "x"}, {"a": 22.5, "bb": "yy"}], "table", single=False)
    lines = text.splitlines()
    assert len({len(line) for line in lines}) == 1


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "unitcharge", "balance", "--format", "csv"],
        capture_output=True,
        text=True,
        check=True,
    )
    header = out.stdout.splitlines()[0]
    assert header.startswith("charge_gaussian,charge_si,alpha")
