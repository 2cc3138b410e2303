import logging
import time
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterator, Tuple

from core.config import VerificationConfig
from core.errors import DomainError
from core.state import CheckRecord, VerificationState

logger = logging.getLogger(__name__)


@dataclass
class Outcome:
    expected: Any
    computed: Any
    passed: bool
    exact: bool = True


def exact_equal(expected, computed) -> Outcome:
    return Outcome(expected, computed, computed == expected)


def close_to(expected: float, computed: float, rel: float, exact: bool = False) -> Outcome:
    scale = max(abs(expected), 1e-300)
    return Outcome(expected, computed, abs(computed - expected) <= rel * scale, exact)


def below(bound: float, computed: float) -> Outcome:
    return Outcome(f"< {bound:g}", computed, abs(computed) < bound, exact=False)


Planned = Tuple[str, Dict[str, Any], Callable[[], Outcome]]


class VerificationSuite:
    """
    One node of the verification graph. Subclasses yield planned checks; run()
    executes them under a guard so an exception becomes a failed record plus an
    error entry instead of aborting the graph.
    """

    name = "base"

    def plan(self, config: VerificationConfig) -> Iterator[Planned]:
        raise NotImplementedError

    def run(self, state: VerificationState) -> dict:
        logger.info("--- Running %s suite ---", self.name)
        config = state["config"]
        checks, errors = [], []
        for check_name, inputs, fn in self.plan(config):
            start = time.perf_counter()
            try:
                outcome = fn()
            except Exception as e:
                elapsed = time.perf_counter() - start
                logger.error("Error in %s/%s %s: %s", self.name, check_name, inputs, e)
                checks.append(CheckRecord(check_name, inputs, None, None, False, False, elapsed))
                errors.append({
                    "suite": self.name,
                    "check": check_name,
                    "error_type": type(e).__name__,
                    "message": str(e),
                    "recoverable": isinstance(e, DomainError),
                })
                continue
            elapsed = time.perf_counter() - start
            if not outcome.passed:
                logger.warning(
                    "%s/%s failed at %s: expected %s, computed %s",
                    self.name, check_name, inputs, outcome.expected, outcome.computed,
                )
            checks.append(
                CheckRecord(
                    check_name, inputs, outcome.expected, outcome.computed,
                    outcome.exact, outcome.passed, elapsed,
                )
            )
        passed = sum(1 for c in checks if c.passed)
        logger.info("--- %s suite: %d/%d checks passed ---", self.name, passed, len(checks))
        return {"checks": checks, "errors": errors, "completed": [self.name]}
