import json
from fractions import Fraction

import numpy as np
import pytest

from core.errors import DomainError, VerificationFailure
from core.exact_core import RationalPoly
from core.state import CheckRecord, VerificationReport, to_jsonable
from suites.base import Outcome, VerificationSuite, below, close_to, exact_equal
from utils.report_writer import report_to_csv, report_to_frame, report_to_json


def make_report(errors=()):
    checks = [
        CheckRecord("exact_check", {"n": 2, "alpha": Fraction(1, 2)}, Fraction(15, 8), Fraction(15, 8), True, True, 0.25),
        CheckRecord("float_check", {"x": 0.5}, 1.0, 1.0 + 1e-14, False, True, 0.5),
    ]
    return VerificationReport("demo", checks, list(errors))


class TestJsonable:
    def test_rationals_become_strings(self):
        assert to_jsonable(Fraction(1, 2)) == "1/2"
        assert to_jsonable(3) == "3"
        assert to_jsonable(0.25) == 0.25
        assert to_jsonable(True) is True

    def test_nested_structures(self):
        value = {"poly": RationalPoly((1, Fraction(-1, 2))), "pair": (Fraction(2), 1.5), 7: None}
        assert to_jsonable(value) == {"poly": ["1", "-1/2"], "pair": ["2", 1.5], "7": None}

    def test_numpy_scalars(self):
        assert to_jsonable(np.float64(1.5)) == 1.5


class TestReport:
    def test_summary_and_pass(self):
        report = make_report()
        assert report.passed
        assert report.summary == {"total": 2, "passed": 2, "failed": 0, "exact": 1, "errors": 0}

    def test_any_error_fails(self):
        error = {"suite": "demo", "check": "x", "error_type": "DomainError", "message": "m", "recoverable": True}
        assert not make_report([error]).passed

    def test_json_schema_and_runtime(self):
        payload = json.loads(report_to_json(make_report()))
        assert payload["schema"] == "1"
        assert payload["checks"][0]["expected"] == "15/8"
        assert payload["checks"][0]["inputs"] == {"alpha": "1/2", "n": "2"}
        assert "runtime_s" not in payload["checks"][0]
        timed = json.loads(report_to_json(make_report(), timings=True))
        assert timed["checks"][1]["runtime_s"] == 0.5

    def test_json_is_deterministic(self):
        assert report_to_json(make_report()) == report_to_json(make_report())

    def test_csv(self):
        frame = report_to_frame(make_report())
        assert list(frame.columns) == ["suite", "name", "inputs", "expected", "computed", "exact", "passed"]
        text = report_to_csv(make_report())
        assert text.splitlines()[0] == "suite,name,inputs,expected,computed,exact,passed"
        assert "1.00000000000001" in text


class TestOutcomes:
    def test_helpers(self):
        assert exact_equal(Fraction(1, 2), Fraction(2, 4)).passed
        assert close_to(1.0, 1.0 + 1e-12, 1e-10).passed
        assert not close_to(1.0, 1.1, 1e-10).passed
        assert below(1e-8, -1e-9).passed
        assert not below(1e-8, 1.0).exact


class FlakySuite(VerificationSuite):
    name = "flaky"

    def plan(self, config):
        yield "passes", {}, lambda: Outcome(1, 1, True)
        yield "fails", {"n": 1}, lambda: Outcome(1, 2, False)
        yield "domain", {}, self._domain
        yield "identity", {}, self._identity

    @staticmethod
    def _domain():
        raise DomainError("alpha must exceed -1")

    @staticmethod
    def _identity():
        raise VerificationFailure("residual is not zero")


def test_suite_guard_records_exceptions(small_config):
    result = FlakySuite().run({"suite": "flaky", "config": small_config, "checks": [], "errors": [], "completed": []})
    assert [check.passed for check in result["checks"]] == [True, False, False, False]
    assert result["completed"] == ["flaky"]
    assert [(e["check"], e["error_type"], e["recoverable"]) for e in result["errors"]] == [
        ("domain", "DomainError", True),
        ("identity", "VerificationFailure", False),
    ]


def test_base_suite_has_no_plan(small_config):
    with pytest.raises(NotImplementedError):
        list(VerificationSuite().plan(small_config))
