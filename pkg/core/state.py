import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Annotated, Any, Dict, List, TypedDict

from core.config import VerificationConfig
from core.exact_core import RationalPoly, format_rational

SCHEMA_VERSION = "1"


def to_jsonable(value: Any) -> Any:
    """Fractions as "p/q" strings, polynomials as coefficient lists, floats untouched."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, RationalPoly):
        return [format_rational(c) for c in value.coeffs]
    if isinstance(value, int):
        return format_rational(Fraction(value))
    if isinstance(value, float):
        return value
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "item"):  # numpy scalar
        return value.item()
    return str(value)


@dataclass
class CheckRecord:
    name: str
    inputs: Dict[str, Any]
    expected: Any
    computed: Any
    exact: bool
    passed: bool
    runtime_s: float = 0.0

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        record = {
            "name": self.name,
            "inputs": to_jsonable(self.inputs),
            "expected": to_jsonable(self.expected),
            "computed": to_jsonable(self.computed),
            "exact": self.exact,
            "passed": self.passed,
        }
        if timings:
            record["runtime_s"] = self.runtime_s
        return record


@dataclass
class VerificationReport:
    suite: str
    checks: List[CheckRecord] = field(default_factory=list)
    errors: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.errors and all(check.passed for check in self.checks)

    @property
    def summary(self) -> Dict[str, int]:
        passed = sum(1 for check in self.checks if check.passed)
        return {
            "total": len(self.checks),
            "passed": passed,
            "failed": len(self.checks) - passed,
            "exact": sum(1 for check in self.checks if check.exact),
            "errors": len(self.errors),
        }

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "passed": self.passed,
            "summary": self.summary,
            "checks": [check.to_dict(timings) for check in self.checks],
            "errors": self.errors,
        }


class VerificationState(TypedDict):
    # Inputs
    suite: str
    config: VerificationConfig

    # Outputs, merged across suite nodes
    checks: Annotated[List[CheckRecord], operator.add]
    errors: Annotated[List[Dict[str, Any]], operator.add]  # [{suite, check, error_type, message, recoverable}]

    # Suites that have run, in order
    completed: Annotated[List[str], operator.add]
