"""
Theorem reports and the recorder verifiers fill them with.

A report passes when every sub-check passes. Sub-checks that exhibit a
constructive counterexample the theorem predicts are recorded as
``witness`` and count as successes; a predicted witness that cannot be
found is a ``fail``.
"""
import time
from typing import Any, Literal

import structlog
from pydantic import BaseModel, Field

from relsim.modules.scalar import Scalar

log = structlog.get_logger(__name__)

Outcome = Literal["pass", "fail", "witness", "skipped"]
Status = Literal["pass", "fail", "witness", "skipped"]


class SubCheck(BaseModel):
    name: str
    outcome: Outcome
    inputs: dict[str, str] = Field(default_factory=dict)
    values: dict[str, str] = Field(default_factory=dict)
    note: str | None = None


class TheoremReport(BaseModel):
    theorem_id: str
    status: Status
    description: str | None = None
    scope: str | None = None
    details: list[SubCheck] = Field(default_factory=list)
    seed: int
    elapsed: float = 0.0

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def failures(self) -> list[SubCheck]:
        return [d for d in self.details if d.outcome == "fail"]


def render(value: Any) -> str:
    """Exact text for report values."""
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(render(v) for v in value) + ")"
    if isinstance(value, Scalar):
        return str(value).replace(" ", "")
    return str(value)


def _rendered(mapping: dict[str, Any] | None) -> dict[str, str]:
    return {k: render(v) for k, v in (mapping or {}).items()}


class CheckRecorder:
    """Collects sub-checks for one theorem and builds its report."""

    def __init__(self, theorem_id: str, seed: int, scope: str | None = None):
        self.theorem_id = theorem_id
        self.seed = seed
        self.scope = scope
        self.details: list[SubCheck] = []
        self._witness: str | None = None
        self._skipped: str | None = None
        self._started = time.perf_counter()

    def check(self, name: str, condition: bool, inputs=None, values=None, note: str | None = None) -> bool:
        outcome = "pass" if condition else "fail"
        self.details.append(SubCheck(name=name, outcome=outcome, inputs=_rendered(inputs), values=_rendered(values), note=note))
        if not condition:
            log.info("Sub-check failed", theorem_id=self.theorem_id, check=name)
        return bool(condition)

    def witness(self, name: str, found: bool, inputs=None, values=None, note: str | None = None) -> bool:
        outcome = "witness" if found else "fail"
        self.details.append(SubCheck(name=name, outcome=outcome, inputs=_rendered(inputs), values=_rendered(values), note=note))
        return bool(found)

    def skip_check(self, name: str, reason: str, inputs=None) -> None:
        self.details.append(SubCheck(name=name, outcome="skipped", inputs=_rendered(inputs), note=reason))

    def declare_witness(self, description: str) -> None:
        """Mark the theorem's conclusion as a constructive counterexample."""
        self._witness = description

    def skip(self, reason: str) -> None:
        self._skipped = reason

    def absorb(self, prefix: str, report: TheoremReport) -> None:
        """Fold another report's sub-checks in, names prefixed by instance."""
        if report.status == "skipped":
            self.skip_check(prefix, report.description or "skipped")
            return
        if report.status == "witness" and self._witness is None:
            self._witness = f"{prefix}: {report.description}"
        for d in report.details:
            self.details.append(d.model_copy(update={"name": f"{prefix}: {d.name}"}))

    @property
    def failed(self) -> bool:
        return any(d.outcome == "fail" for d in self.details)

    def report(self) -> TheoremReport:
        elapsed = time.perf_counter() - self._started
        if self._skipped is not None and not self.details:
            status, description = "skipped", self._skipped
        elif self.failed:
            status, description = "fail", self._witness or self._skipped
        elif self._witness is not None:
            status, description = "witness", self._witness
        elif self.details and all(d.outcome == "skipped" for d in self.details):
            status, description = "skipped", self._skipped or "every instance skipped"
        else:
            status, description = "pass", self._skipped
        return TheoremReport(
            theorem_id=self.theorem_id,
            status=status,
            description=description,
            scope=self.scope,
            details=self.details,
            seed=self.seed,
            elapsed=round(elapsed, 6),
        )
