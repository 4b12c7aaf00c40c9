"""Pass/fail records produced by the identity verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


@dataclass(frozen=True)
class Report:
    name: str
    order: int
    passed: bool
    mismatch: int | None = None
    detail: str = ""
    parts: tuple[Report, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.passed

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} order={self.order}"
        if not self.passed:
            bad = self.first_failure()
            if bad.mismatch is not None:
                text += f" first mismatch at coefficient {bad.mismatch}"
            if bad is not self:
                text += f" in {bad.name}"
            if bad.detail:
                text += f" ({bad.detail})"
        return text

    def first_failure(self) -> Report:
        for part in self.parts:
            if not part.passed:
                return part.first_failure()
        return self


def compare(name: str, order: int, lhs: Sequence, rhs: Sequence, detail: str = "") -> Report:
    """Coefficient-wise equality of ``lhs`` and ``rhs`` through index ``order``."""
    if len(lhs) <= order or len(rhs) <= order:
        return Report(name, order, False, detail=f"sides known only to order {min(len(lhs), len(rhs)) - 1}")
    for k in range(order + 1):
        if lhs[k] != rhs[k]:
            return Report(name, order, False, k, detail or f"{lhs[k]} != {rhs[k]}")
    return Report(name, order, True, detail=detail)


def combine(name: str, order: int, parts: Sequence[Report]) -> Report:
    parts = tuple(parts)
    return Report(name, order, all(p.passed for p in parts), parts=parts)
