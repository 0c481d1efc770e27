"""Check reports: each verified law keeps its full difference map, so a
failure always comes with concrete witnesses (basis tuples and the
nonzero discrepancy).  A law passes exactly when its difference is the
zero map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List

from .tensor import LinMap

__all__ = ["LawCheck", "CheckReport", "CheckFailedError", "law"]


@dataclass
class LawCheck:
    law: str
    diff: LinMap

    @property
    def ok(self) -> bool:
        return self.diff.is_zero()

    def witnesses(self, limit: int = 3) -> list:
        """Up to ``limit`` nonzero entries of the difference, labelled."""
        found = []
        for i, j, value in self.diff.nonzero_entries():
            found.append(
                (self.diff.domain.label_at(i), self.diff.codomain.label_at(j), value)
            )
            if len(found) >= limit:
                break
        return found

    def describe(self) -> str:
        if self.ok:
            return f"{self.law}: ok"
        row, col, value = self.witnesses(1)[0]
        src = "(x)".join(row) if row else "1"
        dst = "(x)".join(col) if col else "1"
        return f"{self.law}: FAIL  [{src} -> {dst}] differs by {value}"


class CheckReport:
    """An ordered bundle of law checks for one subject."""

    def __init__(self, subject: str, checks: Iterable[LawCheck]):
        self.subject = subject
        self.checks: List[LawCheck] = list(checks)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> List[LawCheck]:
        return [c for c in self.checks if not c.ok]

    def check(self, name: str) -> LawCheck:
        for c in self.checks:
            if c.law == name:
                return c
        raise KeyError(f"no law named {name!r} in report for {self.subject}")

    def require_ok(self) -> "CheckReport":
        if not self.ok:
            raise CheckFailedError(self)
        return self

    def merged(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        extra = [
            LawCheck(f"{prefix}{c.law}", c.diff) for c in other.checks
        ]
        return CheckReport(self.subject, self.checks + extra)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [
                {
                    "law": c.law,
                    "ok": c.ok,
                    "witnesses": [
                        {
                            "from": list(row),
                            "to": list(col),
                            "difference": str(value),
                        }
                        for row, col, value in c.witnesses()
                    ],
                }
                for c in self.checks
            ],
        }

    def __str__(self) -> str:
        lines = [f"{self.subject}: {'pass' if self.ok else 'FAIL'}"]
        lines += [f"  {c.describe()}" for c in self.checks]
        return "\n".join(lines)


class CheckFailedError(ValueError):
    """Raised when an operation requires a report that did not pass."""

    def __init__(self, report: CheckReport):
        super().__init__(str(report))
        self.report = report


def law(name: str, lhs: LinMap, rhs: LinMap) -> LawCheck:
    """Record the exact identity lhs = rhs as a law check."""
    return LawCheck(name, lhs - rhs)
