"""Machine-readable run reports and scan rows.

One JSON object per run: {command, config, reports[], summary}.  Exact
symbolic results are reported with the distinct marker ``"exact-zero"``,
never as the float 0.0, so regression diffs preserve the exact/approximate
distinction.  Scan rows serialize to CSV with a fixed documented header; all
floats are written with shortest round-trip formatting, so output is
reproducible bit-for-bit for fixed inputs on one platform.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

EXACT_ZERO = "exact-zero"

SCAN_COLUMNS = [
    "u",
    "v",
    "theta",
    "maxRicci",
    "meanCurvSq",
    "deficit",
    "alpha",
    "hopfDefect",
    "traceA",
    "flags",
]


@dataclass
class CheckReport:
    """Outcome of one named check: status plus residual and payload."""

    name: str
    status: str  # "pass" | "fail" | "error"
    max_abs_residual: float | str
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "checkName": self.name,
            "status": self.status,
            "maxAbsResidual": self.max_abs_residual,
            "details": self.details,
        }

    @staticmethod
    def from_dict(d: dict[str, Any]) -> "CheckReport":
        return CheckReport(
            name=d["checkName"],
            status=d["status"],
            max_abs_residual=d["maxAbsResidual"],
            details=d["details"],
        )


def passed(reports: list[CheckReport]) -> bool:
    return all(r.status == "pass" for r in reports)


def run_report(command: str, config: dict[str, Any], reports: list[CheckReport]) -> dict[str, Any]:
    statuses = [r.status for r in reports]
    return {
        "command": command,
        "config": config,
        "reports": [r.to_dict() for r in reports],
        "summary": {
            "total": len(reports),
            "passed": statuses.count("pass"),
            "failed": statuses.count("fail"),
            "errors": statuses.count("error"),
        },
    }


def report_to_json(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, allow_nan=True)


def report_from_json(text: str) -> dict[str, Any]:
    return json.loads(text)


@dataclass
class ScanRow:
    """One grid point of a scan; parameter names follow the chart order."""

    u: float
    v: float
    theta: float
    max_ricci: float
    mean_curv_sq: float
    deficit: float
    alpha: float
    hopf_defect: float
    trace_a: float
    flags: str = "ok"

    def values(self) -> list[Any]:
        return [
            self.u,
            self.v,
            self.theta,
            self.max_ricci,
            self.mean_curv_sq,
            self.deficit,
            self.alpha,
            self.hopf_defect,
            self.trace_a,
            self.flags,
        ]

    def to_dict(self) -> dict[str, Any]:
        return dict(zip(SCAN_COLUMNS, self.values()))


def _fmt(x: Any) -> str:
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        return repr(x)
    return str(x)


def scan_to_csv(rows: list[ScanRow]) -> str:
    lines = [",".join(SCAN_COLUMNS)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row.values()))
    return "\n".join(lines) + "\n"


def scan_to_json(rows: list[ScanRow]) -> str:
    def clean(v: Any) -> Any:
        if isinstance(v, float) and not math.isfinite(v):
            return None
        return v

    payload = [{k: clean(v) for k, v in r.to_dict().items()} for r in rows]
    return json.dumps(payload, indent=2)
