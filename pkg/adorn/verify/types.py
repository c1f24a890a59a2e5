from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from adorn.errors import AdornError


class VerifyError(AdornError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class UnknownCheckError(VerifyError):
    def __init__(self, name: str):
        super().__init__(f"Unknown check '{name}'")
        self.name = name


@dataclass(frozen=True)
class CheckResult:
    name: str
    statement: str
    passed: bool
    detail: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "statement": self.statement,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class SuiteReport:
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[str]:
        return [r.name for r in self.results if not r.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "total": len(self.results),
            "failed": self.failures(),
            "checks": [r.to_dict() for r in self.results],
        }
