from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    n: int
    passed: bool
    detail: Any = None

    def to_json(self) -> dict:
        return {"name": self.name, "n": self.n, "pass": self.passed, "detail": self.detail}


@dataclass
class VerificationReport:
    """Outcome of one or more verification suites; passing iff every check passes."""

    suite: str
    max_n: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def record(self, name: str, n: int, passed: bool, detail: Any = None) -> None:
        self.checks.append(Check(name, n, bool(passed), None if passed else detail))

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite, "max_n": self.max_n, "checks": [c.to_json() for c in self.checks]}
