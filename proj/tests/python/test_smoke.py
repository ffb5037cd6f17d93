"""Smoke tests for the python bindings."""

import math

import pytest

import relog


def test_transforms():
    assert relog.transform(1.1, 0.1) == pytest.approx(1.0)
    assert relog.inverse_transform(2.0, 0.1) == pytest.approx(1.21)
    assert relog.transform_log1p(0.1, 0.1) == pytest.approx(1.0)
    assert relog.transform_asinh(1.0) == pytest.approx(math.asinh(1.0))
    with pytest.raises(ValueError):
        relog.transform(0.0, 0.1)
    with pytest.raises(ValueError):
        relog.transform(1.0, 0.0)


def test_interpretation():
    assert relog.exact_percent_change(0.1, 2.0) == pytest.approx(0.21)
    assert relog.traditional_error(0.1) == pytest.approx(-0.00517, abs=1e-4)
    assert relog.rescaled_error(0.1, 0.2) == pytest.approx(-0.01)
    assert 0.046 <= relog.crossover(0.1) <= 0.050
    scan = relog.base_quality_scan([2.35], 0.43)
    assert scan[0]["max_abs_error"] <= 0.014


def test_zeros():
    assert relog.rescaled_zero_error(0.1, 1.0) == pytest.approx(0.1)
    assert relog.traditional_zero_error(0.1, 1.0) == pytest.approx(0.10517, abs=1e-4)
    assert relog.exact_prop_change_x(0.1, 1.0) == pytest.approx(1.2)
    assert relog.delta_method_se(1.0, 0.5, 0.1, 1.0) == pytest.approx(0.10484, abs=1e-4)
    r = relog.elasticity_recovery(2.0, 0.0, 0.1, 1.0, 0.1, 10.0)
    assert r["prop_change_y"] == pytest.approx(1.231)
    assert "large samples" in r["note"]


def test_rescale():
    assert relog.rescale_coefficient(-0.3145, 0.1, 1.0) == pytest.approx(-2.287, abs=1e-3)
    assert relog.rescale_coefficient_from_natural(-3.3, 0.1) == pytest.approx(
        -0.3145, abs=1e-4
    )


def test_fit_and_simulate():
    cols = relog.simulate(seed=7, n=500, dgp="linear-log", beta1=0.2, noise_sd=0.05)
    fit = relog.fit(cols, "y ~ log(x, p=0.1)")
    assert fit["n"] == 500
    beta = fit["coefficients"][1]
    se = fit["standard_errors"][1]
    assert abs(beta - 0.2) < 3 * se
    assert fit["p_values"][1] < 0.01
    # deterministic
    again = relog.simulate(seed=7, n=500, dgp="linear-log", beta1=0.2, noise_sd=0.05)
    assert cols["x"] == again["x"]


def test_reports():
    csv = relog.error_curve_csv()
    assert csv.splitlines()[0] == "p,error_traditional,error_base_1_1,error_base_1_4"
    text = relog.audit("lin2018-bmi")
    assert "0.0081" in text
