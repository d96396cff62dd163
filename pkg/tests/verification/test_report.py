import pytest

from figure_eight.util.io import read_json
from figure_eight.verification import (
    CheckResult,
    VerificationReport,
    upper_check,
    lower_check,
    record,
)


def test_check_result():
    check = upper_check("energy_drift", 1e-11, 1e-9)
    assert check.passed
    assert check.bound == 1e-9
    assert str(check) == "[PASS] energy_drift: 1e-11 (bound 1e-09)"

    check = lower_check("lemma8.H", -1.3, -1.2, "H > H0")
    assert not check.passed
    assert str(check) == "[FAIL] lemma8.H: -1.3 (bound -1.2) H > H0"

    check = record("relative_variation.I", 0.05)
    assert check.passed
    assert check.bound is None
    assert check.to_dict() == dict(
        name="relative_variation.I", value=0.05, bound=None, passed=True, detail=""
    )
    return


def test_equal_bound_fails():
    assert not upper_check("a", 1.0, 1.0).passed
    assert not lower_check("a", 1.0, 1.0).passed
    return


def test_verification_report(tmp_path):
    report = VerificationReport()
    assert report.passed
    assert len(report) == 0

    report.add(upper_check("a", 0.5, 1.0))
    report.extend([lower_check("b", 0.5, 1.0), record("c", 2.0)])
    report.info["period"] = 6.3

    assert len(report) == 3
    assert not report.passed
    assert [check.name for check in report.failed()] == ["b"]
    assert report["a"].value == 0.5
    assert "c" in report
    assert "d" not in report
    assert [check.name for check in report] == ["a", "b", "c"]

    with pytest.raises(KeyError):
        report["d"]
    with pytest.raises(TypeError):
        report.add(("a", 0.5))

    summary = report.summary().splitlines()
    assert summary[1].startswith("[FAIL] b")
    assert summary[-1] == "2/3 checks passed"

    filename = tmp_path / "report.json"
    report.to_json(filename)
    data = read_json(filename)
    assert data["passed"] is False
    assert [check["name"] for check in data["checks"]] == ["a", "b", "c"]
    assert data["info"] == {"period": 6.3}
    return


def test_merge():
    inner = VerificationReport([upper_check("drift", 0.1, 1.0)], {"H": -1.2})
    outer = VerificationReport()
    outer.merge(inner, prefix="trajectory.")
    assert outer["trajectory.drift"].passed
    assert outer.info == {"trajectory.H": -1.2}
    # the merged report keeps its own checks
    assert inner["drift"].name == "drift"
    assert isinstance(outer.checks[0], CheckResult)
    return
