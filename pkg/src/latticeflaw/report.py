from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

MAX_RECORDED_FAILURES = 20


@dataclass
class CheckReport:
    """Outcome of a verification suite; keeps the first few counterexamples."""

    name: str
    params: dict[str, Any] = field(default_factory=dict)
    checks: int = 0
    failed: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def check(self, ok: bool, payload: dict[str, Any] | None = None) -> bool:
        self.checks += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_RECORDED_FAILURES:
                self.failures.append(payload or {})
        return ok

    def merge(self, other: CheckReport) -> None:
        self.checks += other.checks
        self.failed += other.failed
        room = MAX_RECORDED_FAILURES - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])

    def as_dict(self) -> dict[str, Any]:
        return {
            "suite": self.name,
            "params": self.params,
            "passed": self.passed,
            "checks": self.checks,
            "failed": self.failed,
            "failures": self.failures,
            "details": self.details,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{status} {self.name} [{params}] {self.checks - self.failed}/{self.checks} checks"
