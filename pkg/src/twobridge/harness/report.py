"""Run reports and their JSON/CSV serialization."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..obstruction import ObstructionReport, Verdict

__all__ = ["SuiteResult", "CaseResult", "RunReport", "CSV_COLUMNS"]

CSV_COLUMNS = (
    "key", "g", "det", "a2", "a4", "four_v3", "slope_lmo", "slope_hf",
    "main_ineq", "equality_violated", "verdict",
)


def _plain(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


@dataclass
class SuiteResult:
    """Outcome of one oracle suite; ``failure`` holds the first disagreeing pair."""

    name: str
    checked: int
    passed: bool
    failure: dict | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return _plain({"name": self.name, "checked": self.checked, "passed": self.passed,
                       "failure": self.failure, "note": self.note})


@dataclass
class CaseResult:
    """A replayed claim over a parameter grid."""

    name: str
    claim: str
    checked: int
    counterexamples: list = field(default_factory=list)
    known_deviation: str = ""

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return _plain({"name": self.name, "claim": self.claim, "checked": self.checked,
                       "passed": self.passed, "counterexamples": self.counterexamples,
                       "known_deviation": self.known_deviation})


@dataclass
class RunReport:
    spec: dict
    reports: list[ObstructionReport] = field(default_factory=list)
    oracle: list[SuiteResult] = field(default_factory=list)
    cases: list[CaseResult] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def counts(self) -> dict[str, int]:
        out = {v.value: 0 for v in Verdict}
        for r in self.reports:
            out[r.verdict.value] += 1
        return out

    @property
    def ok(self) -> bool:
        """No inconclusive verdict, no failing suite, no unexplained case failure."""
        return (
            self.counts[Verdict.INCONCLUSIVE.value] == 0
            and all(s.passed for s in self.oracle)
            and all(c.passed or c.known_deviation for c in self.cases)
        )

    def to_dict(self, include_timing: bool = False) -> dict:
        d = {
            "spec": _plain(self.spec),
            "counts": self.counts,
            "ok": self.ok,
            "reports": [r.to_dict() for r in self.reports],
            "oracle": [s.to_dict() for s in self.oracle],
            "cases": [c.to_dict() for c in self.cases],
        }
        if include_timing:
            d["wall_time"] = self.wall_time
        return d

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.reports:
            d = r.to_dict()
            w.writerow([d[c] for c in CSV_COLUMNS])
        return buf.getvalue()
