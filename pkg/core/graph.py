import logging
from typing import Sequence

from langgraph.graph import END, StateGraph

from core.config import VerificationConfig
from core.errors import ConfigError
from core.state import VerificationReport, VerificationState
from suites.basis_suite import BasisSuite
from suites.limit_suite import LimitSuite
from suites.operator_suite import OperatorSuite
from suites.ortho_suite import OrthogonalitySuite
from suites.uniqueness_suite import UniquenessSuite

logger = logging.getLogger(__name__)

# Initialize Suites
SUITES = {
    suite.name: suite
    for suite in (
        OrthogonalitySuite(),
        UniquenessSuite(),
        BasisSuite(),
        OperatorSuite(),
        LimitSuite(),
    )
}
SUITE_ORDER = ["ortho", "uniqueness", "basis", "operator", "limit"]


def resolve_suites(name: str) -> list:
    if name == "all":
        return list(SUITE_ORDER)
    if name not in SUITES:
        raise ConfigError(f"unknown suite {name!r}; choose from {', '.join(SUITE_ORDER + ['all'])}")
    return [name]


def build_graph(names: Sequence[str]):
    """Chain one node per suite, in order, ending at END."""
    if not names:
        raise ConfigError("at least one suite is required")
    workflow = StateGraph(VerificationState)
    for name in names:
        workflow.add_node(name, SUITES[name].run)
    workflow.set_entry_point(names[0])
    for before, after in zip(names, names[1:]):
        workflow.add_edge(before, after)
    workflow.add_edge(names[-1], END)
    return workflow.compile()


def run_suite(name: str, config: VerificationConfig) -> VerificationReport:
    names = resolve_suites(name)
    logger.info("--- Verification graph: %s ---", " -> ".join(names))
    graph = build_graph(names)
    final = graph.invoke(
        {"suite": name, "config": config, "checks": [], "errors": [], "completed": []}
    )
    if final["completed"] != names:
        logger.warning("suites completed out of order: %s", final["completed"])
    return VerificationReport(name, list(final["checks"]), list(final["errors"]))
