"""Tiny shared shape for named pass/fail/indeterminate check outcomes."""

from __future__ import annotations

from dataclasses import dataclass

PASS = "pass"
FAIL = "fail"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # pass | fail | indeterminate
    condition: str  # the condition checked, with concrete values filled in

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "condition": self.condition}
