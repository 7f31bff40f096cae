# relsim/services/reports.py
"""Rendering and writing suite reports."""
from pathlib import Path
from typing import Literal, Sequence

import structlog
from pydantic import TypeAdapter

from relsim.core.process_lock import report_lock
from relsim.modules.theorems import TheoremReport

log = structlog.get_logger(__name__)

ReportFormat = Literal["text", "json"]

_REPORTS = TypeAdapter(list[TheoremReport])


def render_json(reports: Sequence[TheoremReport], include_timing: bool = True) -> str:
    exclude = None if include_timing else {"__all__": {"elapsed"}}
    return _REPORTS.dump_json(list(reports), indent=2, exclude=exclude).decode() + "\n"


def render_text(reports: Sequence[TheoremReport]) -> str:
    lines = []
    for r in reports:
        head = f"{r.status.upper():8} {r.theorem_id}  ({r.elapsed:.2f}s, seed {r.seed})"
        lines.append(head)
        if r.description:
            lines.append(f"         {r.description}")
        for d in r.failures():
            lines.append(f"  FAIL   {d.name}")
            for key, value in {**d.inputs, **d.values}.items():
                lines.append(f"           {key} = {value}")
            if d.note:
                lines.append(f"           note: {d.note}")
    failed = sum(r.failed for r in reports)
    lines.append(f"{len(reports)} theorems, {failed} failed")
    return "\n".join(lines) + "\n"


def render(reports: Sequence[TheoremReport], fmt: ReportFormat) -> str:
    return render_json(reports) if fmt == "json" else render_text(reports)


def write_report(reports: Sequence[TheoremReport], path: str | Path, fmt: ReportFormat) -> Path:
    """Write under the report's cross-process lock; OSError propagates."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with report_lock(path):
        path.write_text(render(reports, fmt), encoding="utf-8")
    log.info("Report written", path=str(path), theorems=len(reports), format=fmt)
    return path
