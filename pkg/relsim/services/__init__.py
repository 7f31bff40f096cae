# relsim/services/__init__.py
"""Suite orchestration and report output."""
from .reports import ReportFormat, render, render_json, render_text, write_report
from .suite import REGISTRY, SuiteRunner, Theorem, parse_selection, run_suite

__all__ = [
    "REGISTRY",
    "ReportFormat",
    "SuiteRunner",
    "Theorem",
    "parse_selection",
    "render",
    "render_json",
    "render_text",
    "run_suite",
    "write_report",
]
