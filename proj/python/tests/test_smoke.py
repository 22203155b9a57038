"""Smoke tests for the python extension module."""

import math

import mlasym


def close(a, b, rel=1e-12):
    a, b = float(a), float(b)
    return abs(a - b) <= rel * max(abs(a), abs(b), 1e-300)


def test_ml_reduces_to_exp():
    assert close(mlasym.ml("1", "3"), math.exp(-3), 1e-14)


def test_string_precision_exceeds_float():
    v = mlasym.ml("0.5", "5", digits=40)
    mantissa = v.split("e")[0].replace("-", "").replace(".", "")
    assert len(mantissa) >= 40


def test_optimal_truncation():
    t = mlasym.optimal_truncation("0.99", "40")
    assert t["M"] == 42
    assert t["nu"].startswith("6.1427271")


def test_script_E_matches_reference_table():
    v = mlasym.script_E("0.99", "40", digits=20)
    assert v.startswith("1.56913322326564")


def test_remainder_breakdown():
    rep = mlasym.exp_small_remainder("0.99", "40", kmax=6, digits=30)
    assert rep["truncation"]["M"] == 42
    assert rep["kmax_used"] == 6
    assert not rep["validity_warning"]
    assert rep["value"].startswith("1.5691332232656")
    assert len(rep["series_terms"]) == 7


def test_remainder_matches_script_E():
    se = float(mlasym.script_E("0.9", "20", digits=20))
    rm = float(mlasym.exp_small_remainder("0.9", "20", kmax=5, digits=25)["value"])
    assert close(se, rm, 1e-11)


def test_rational_order_parameter():
    v = mlasym.script_E("1/3", "3", digits=20)
    assert v.startswith("8.3453778377")


def test_erfc_and_gamma():
    re, im = mlasym.erfc("1")
    assert close(re, 0.15729920705028513, 1e-14)
    assert im.startswith("0.0")
    assert close(mlasym.gamma("0.5"), math.sqrt(math.pi), 1e-14)


def test_half_order_identity():
    lhs = float(mlasym.ml("0.5", "2", digits=30))
    re, _ = mlasym.erfc("2", digits=30)
    rhs = math.exp(4) * float(re)
    assert close(lhs, rhs, 1e-13)


def test_locus_endpoint():
    rows = mlasym.c_locus("0.9", samples=40, digits=20)
    assert len(rows) == 40
    last = rows[-1]
    # approaching 2 sqrt(pi) e^{i pi/4}: |arg c| stays below pi/4
    assert abs(float(last["arg_c"])) < math.pi / 4
    assert float(last["re_c"]) > 2.0


def test_leading_order_at_one():
    lo = mlasym.leading_order_estimate("1", "5")
    assert close(lo["value"], math.exp(-5), 1e-14)
    assert lo["omega_x_small"]


def test_general_theta_on_axis_is_half_the_remainder():
    j = mlasym.exp_small_general_theta("0.9", "20", "1", kmax=5, digits=25)
    rm = mlasym.exp_small_remainder("0.9", "20", kmax=5, digits=25)
    assert close(2 * float(j["value_re"]), float(rm["value"]), 1e-12)


def test_run_cli_surface():
    code, doc, err = mlasym.run_cli(
        ["eval", "--a", "0.95", "--x", "20", "--kmax", "5", "--format", "json"]
    )
    assert code == 0 and not err
    import json

    report = json.loads(doc)
    assert report["results"]["script_E"].startswith("-2.521343284521")
    assert float(report["results"]["rel_dev"]) < 1e-12


def main():
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"[PASS] {name}")
            except AssertionError as exc:
                failures += 1
                print(f"[FAIL] {name}: {exc}")
    if failures:
        raise SystemExit(f"{failures} smoke tests failed")
    print("python smoke tests passed")


if __name__ == "__main__":
    main()
