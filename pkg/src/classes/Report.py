import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List

from .Expression import Expression
from .NoetherScan import FORCED_ZERO, INCONCLUSIVE

ZERO = "zero"
NONZERO = "nonzero"
VERDICTS = (ZERO, NONZERO, FORCED_ZERO, INCONCLUSIVE)


def verdict_of(residual: Expression) -> str:
    return ZERO if residual.is_zero() else NONZERO


@dataclass
class Report:
    """Outcome of one verification; ``verdict`` is zero exactly when the residual is 0."""

    id: str
    verdict: str
    residual: str
    millis: float = 0.0
    inputs: Dict[str, str] = field(default_factory=dict)
    expected: str = ZERO
    provenance: str = ""

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def passed(self) -> bool:
        return self.verdict == self.expected

    @staticmethod
    def of_residual(id: str, residual: Expression, **kwargs: Any) -> "Report":
        return Report(id, verdict_of(residual), str(residual), **kwargs)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["millis"] = round(self.millis, 3)
        data["passed"] = self.passed
        return data


@dataclass
class SuiteReport:
    suite: str
    cases: List[Report] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for case in self.cases if case.passed)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    def all_passed(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "cases": [case.to_dict() for case in sorted(self.cases, key=lambda c: c.id)],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)
