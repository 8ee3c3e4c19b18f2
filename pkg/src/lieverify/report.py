"""Pass/fail record produced by every verification routine."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .series import PowerSeries, first_difference


@dataclass
class VerificationReport:
    check: str
    params: dict[str, Any]
    passed: bool
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def discrepancy_degree(self) -> int | None:
        return self.detail.get("first_discrepancy_degree")

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "params": dict(self.params),
            "status": self.status,
            "detail": self.detail,
        }

    def summary_line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        line = f"{self.status.upper():4}  {self.check}  {params}"
        if not self.passed and "first_discrepancy_degree" in self.detail:
            d = self.detail
            line += (
                f"  (first discrepancy at degree {d['first_discrepancy_degree']}:"
                f" left={d.get('left')} right={d.get('right')})"
            )
        return line


def compare_series(check: str, params: dict, left: PowerSeries, right: PowerSeries,
                   **extra) -> VerificationReport:
    """Report whether two series agree coefficientwise up to the smaller cap."""
    d = first_difference(left, right)
    detail = dict(extra)
    detail["compared_through"] = min(left.cap, right.cap)
    if d is not None:
        detail.update(first_discrepancy_degree=d, left=left[d], right=right[d])
    return VerificationReport(check, params, d is None, detail)
