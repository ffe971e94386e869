import os

import pytest

import fmax

DATA_DIR = os.environ.get("FMAX_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "data"))


def fourlabel():
    return fmax.SparseJoint(4, {"0001": 0.1, "0010": 0.2, "0100": 0.2, "1000": 0.5})


def test_metric_values():
    assert fmax.metric_value("f", "0000", "0000") == 1.0
    assert fmax.metric_value("f", "1100", "1000") == pytest.approx(2 / 3)
    assert fmax.metric_value("jaccard", "0000", "0000") == 0.0
    assert fmax.metric_value("hamming", "1010", "1001") == 0.5


def test_gfm_on_the_worked_table():
    h, value = fmax.gfm_maximize(fourlabel())
    assert h == "1000"
    assert value == pytest.approx(0.5, abs=1e-12)


def test_oracle_and_regret():
    dist = fourlabel()
    h, value = fmax.oracle(dist, "f")
    assert (h, round(value, 12)) == ("1000", 0.5)
    assert fmax.regret(dist, "1000", "f") == pytest.approx(0.0, abs=1e-12)
    assert fmax.regret(dist, "1100", "f") > 0


def test_fm_maximize():
    h, value = fmax.fm_maximize([0.5, 0.5])
    assert h == "11"
    assert value == pytest.approx(7 / 12, abs=1e-12)


def test_threshold_maximize():
    dist = fmax.SparseJoint(
        12,
        {
            "000000000000": 0.21,
            "100000000000": 0.39,
            "011111100000": 0.2,
            "010000011111": 0.2,
        },
    )
    h, theta, value = fmax.threshold_maximize(dist)
    assert h == "110000000000"
    assert value == pytest.approx(0.36, abs=1e-12)


def test_witness_verification():
    report = fmax.verify_witness("3.2", 3)
    assert report["regret"] == pytest.approx(0.4875, abs=1e-9)
    assert report["closed_form"] == pytest.approx(0.4875, abs=1e-12)


def test_expected_metric_and_support():
    dist = fourlabel()
    assert fmax.expected_metric(dist, "1000", "f") == pytest.approx(0.5, abs=1e-12)
    assert dist.mass_of("1000") == pytest.approx(0.5)
    assert sum(dist.support().values()) == pytest.approx(1.0)


def test_load_distribution():
    dist = fmax.load_distribution(os.path.join(DATA_DIR, "fourlabel.dist"))
    assert fmax.gfm_maximize(dist)[0] == "1000"


def test_cap_exceeded():
    big = fmax.SparseJoint(15, {"1" * 15: 1.0})
    with pytest.raises(fmax.CapExceeded):
        fmax.oracle(big, "f")
