from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class IdentityReport:
    """Outcome of checking one identity over an index range.

    Each mismatch is ``(index, lhs, rhs)``; ``index`` is whatever the check
    iterates over (an int, an ``(n, m)`` pair, ...).
    """

    identity: str
    checked: str
    mismatches: list[tuple[Any, Any, Any]] = field(default_factory=list)
    count: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def compare(self, index, lhs, rhs) -> None:
        self.count += 1
        if lhs != rhs:
            self.mismatches.append((index, lhs, rhs))

    def __bool__(self):
        return self.ok

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else f", {len(self.mismatches)} mismatches"
        return f"{status} {self.identity} [{self.checked}] ({self.count} comparisons{tail})"


def merge(identity: str, reports: list[IdentityReport]) -> IdentityReport:
    out = IdentityReport(identity, "; ".join(r.checked for r in reports))
    for r in reports:
        out.count += r.count
        out.mismatches.extend((f"{r.identity}:{idx}", lhs, rhs) for idx, lhs, rhs in r.mismatches)
    return out
