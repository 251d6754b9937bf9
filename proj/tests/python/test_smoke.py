import json

import pytest

import ternalg


def test_evaluate_examples():
    assert ternalg.evaluate("[P_0, x^0]") == "1"
    assert ternalg.evaluate("{theta^0, theta^1, d_1} - 2*theta^0") == "0"
    assert ternalg.evaluate("[[theta^1, d_2], theta^2]") == "theta^1"
    assert ternalg.evaluate("(1+2*q)*theta^0", star=True) == "(-1-2*q)*theta^0"
    assert "theta^0[1]" in ternalg.evaluate("theta^0", normal_form=True)


def test_kappa_one_changes_the_bracket():
    assert ternalg.evaluate("[[theta^0, d_1], theta^1]", dim=2, kappa="1") == "2*theta^0"


def test_errors_become_value_errors():
    with pytest.raises(ValueError, match="column"):
        ternalg.evaluate("[theta^0, ]")
    with pytest.raises(ValueError):
        ternalg.evaluate("bogus^1")
    with pytest.raises(ValueError):
        ternalg.run_suite("nope")


def test_run_suite_report():
    doc = json.loads(ternalg.run_suite("para", dim=2))
    assert doc["version"] == "1.0"
    assert doc["config"]["dimension"] == 2
    assert len(doc["checks"]) == 10
    assert all(c["status"] == "pass" for c in doc["checks"])
    assert "para" in ternalg.suite_ids()


def test_structure_constants_round_trip():
    sc = ternalg.cubic_poincare_json(3)
    assert json.loads(sc)["dim0"] == 6
    report = json.loads(ternalg.check_structure_constants(sc))
    assert all(c["status"] == "pass" for c in report["checks"])


def test_factor_table():
    rows = ternalg.dump_factor_csv().strip().split("\n")
    assert len(rows) == 28
    assert all(len(r.split(",")) == 28 for r in rows)
