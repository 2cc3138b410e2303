from fractions import Fraction

import pytest

import core.graph as graph
from core.errors import ConfigError
from suites.base import Outcome, VerificationSuite


class RecordingSuite(VerificationSuite):
    def __init__(self, name):
        self.name = name

    def plan(self, config):
        yield f"{self.name}_check", {"nmax": config.nmax}, lambda: Outcome(0, 0, True)


def test_resolve_suites():
    assert graph.resolve_suites("all") == ["ortho", "uniqueness", "basis", "operator", "limit"]
    assert graph.resolve_suites("basis") == ["basis"]
    with pytest.raises(ConfigError, match="unknown suite"):
        graph.resolve_suites("everything")


def test_build_graph_needs_a_suite():
    with pytest.raises(ConfigError):
        graph.build_graph([])


def test_all_runs_every_suite_in_order(monkeypatch, small_config):
    for name in graph.SUITE_ORDER:
        monkeypatch.setitem(graph.SUITES, name, RecordingSuite(name))
    report = graph.run_suite("all", small_config)
    assert report.suite == "all"
    assert [check.name for check in report.checks] == [f"{name}_check" for name in graph.SUITE_ORDER]
    assert report.passed


@pytest.mark.parametrize("name", ["ortho", "uniqueness", "basis", "operator", "limit"])
def test_every_suite_plans_checks(name, small_config):
    planned = list(graph.SUITES[name].plan(small_config))
    assert planned
    assert all(callable(fn) for _, _, fn in planned)


def test_uniqueness_suite_passes(small_config):
    report = graph.run_suite("uniqueness", small_config)
    assert report.errors == []
    assert report.passed, [c for c in report.checks if not c.passed]
    names = {check.name for check in report.checks}
    assert {"gamma1_solve", "resultant_vanishing_pattern", "kappa1_phi1_phin"} <= names


def test_resultant_records_nonzero_at_one_half(small_config):
    report = graph.run_suite("uniqueness", small_config)
    records = [
        c for c in report.checks
        if c.name == "resultant_vanishing_pattern" and c.inputs["kappa"] == Fraction(1, 2)
    ]
    assert records and all(c.expected == "nonzero" and c.computed != 0 for c in records)


def test_family_checks_reach_degree_eight(small_config):
    report = graph.run_suite("uniqueness", small_config)
    family = [c for c in report.checks if c.name.endswith("_family_cross_terms")]
    assert family and all(c.inputs["nmax"] == 8 and c.passed for c in family)
