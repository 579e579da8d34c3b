import json
from fractions import Fraction
from pathlib import Path

import pytest

import relfreq

CONFIGS = Path(__file__).resolve().parents[2] / "configs"


def test_solve_example_config():
    config = json.loads((CONFIGS / "five_of_eight.json").read_text())
    report = relfreq.solve(config)
    assert report["availability"]["rational"] == Fraction(615925280183, 625000000000)
    assert report["frequency"]["rational"] == Fraction(8012914359, 156250000000)
    assert report["frequency"]["per"] == "mu"


def test_approx_mode_has_no_rationals():
    report = relfreq.solve((CONFIGS / "lincon_4_11.json").read_text(), mode="approx")
    assert report["availability"]["rational"] is None
    assert float(report["rate"]["decimal"]) == pytest.approx(0.0516505, abs=1e-7)


def test_kofn_identical_accepts_fractions():
    r = relfreq.kofn_g_identical(1, 2, Fraction(2, 5), 3)
    p = Fraction(2, 5)
    assert r["availability"]["rational"] == 1 - (1 - p) ** 2
    assert r["frequency"]["rational"] == 3 * 2 * p * (1 - p)


def test_ladder():
    closed = relfreq.ladder_closed_form("2/3", "1/2", 5, mode="exact")
    pass_ = relfreq.ladder_frequency("2/3", "1/2", 1, 2, 5)
    assert closed["Tn"]["rational"] == pass_["availability"]["rational"]
    assert closed["Sn"]["rational"] - closed["Tn"]["rational"] == (Fraction(2, 3) * Fraction(1, 2) * Fraction(2, 3)) ** 6 / Fraction(2, 3)


def test_asymptotics():
    z0, zp, zm = relfreq.eigenvalues(1.0, 1.0)
    assert (z0, zp, zm) == pytest.approx((0.0, 1.0, 0.0))
    d_zeta, d_alpha = relfreq.log_derivatives(0.251641)
    assert d_zeta == pytest.approx(1.13827, abs=1e-5)
    assert relfreq.asymptotic_rate(0.9, 10, 0.0) == 0.0
    with pytest.raises(relfreq.ValidationError):
        relfreq.log_derivatives(1.0)


def test_series_and_operator():
    coeffs = relfreq.series_coeffs("kofn-g", 1, 3)
    assert coeffs[2] == [0, 2, -1]  # 1 - (1-p)^2
    assert relfreq.rate_operator("x*y", {"x": 2, "y": "1/2"}) == "5/2*x*y"


def test_verify_and_sweep():
    assert relfreq.verify(8, 30)["passed"]
    csv = relfreq.sweep("ladder", "n", "1:3:1", p=Fraction(9, 10))
    assert csv.splitlines()[0] == "n,A,nu,lambda_bar,d_ln_zeta,d_ln_alpha"
    assert len(csv.splitlines()) == 4


def test_errors_map_to_python_exceptions():
    with pytest.raises(relfreq.ParseError):
        relfreq.solve("{")
    with pytest.raises(relfreq.ValidationError):
        relfreq.solve({"family": "kofn-g", "k": 1, "components": []})
    assert issubclass(relfreq.ValidationError, relfreq.RelfreqError)
