import asyncio
import json

import pytest

from relsim.core.errors import PreconditionError
from relsim.modules.theorems import CheckRecorder
from relsim.services import REGISTRY, SuiteRunner, parse_selection, render_json, render_text, run_suite, write_report

SMALL = "hogarth,join-meet"

THEOREM_IDS = [
    "rotation-span",
    "newton-family",
    "conformal-uniqueness",
    "poincare-nogo",
    "join-meet",
    "rest-pencil",
    "causality",
    "alexandrov-forward",
    "malament",
    "hogarth",
    "subgroup-dichotomy",
    "lattice-action",
]


def test_registry_order():
    assert list(REGISTRY) == THEOREM_IDS
    assert all(t.description for t in REGISTRY.values())


def test_parse_selection():
    assert parse_selection(None) == THEOREM_IDS
    assert parse_selection("all") == THEOREM_IDS
    # registry order, not request order
    assert parse_selection("lattice-action, rotation-span") == ["rotation-span", "lattice-action"]
    assert parse_selection(["hogarth"]) == ["hogarth"]


def test_parse_selection_unknown():
    with pytest.raises(PreconditionError, match="no-such-theorem"):
        parse_selection("hogarth,no-such-theorem")


def test_small_selection_passes():
    reports = run_suite(SMALL, seed=0, parallel=False)
    assert [r.theorem_id for r in reports] == ["join-meet", "hogarth"]
    assert not any(r.failed for r in reports)
    statuses = {r.theorem_id: r.status for r in reports}
    assert statuses == {"join-meet": "pass", "hogarth": "witness"}
    assert all(r.description for r in reports)


def test_reports_are_deterministic():
    first = render_json(run_suite(SMALL, seed=7, parallel=True), include_timing=False)
    second = render_json(run_suite(SMALL, seed=7, parallel=False), include_timing=False)
    assert first == second
    assert "elapsed" not in first


def test_instances_are_prefixed():
    (report,) = run_suite("hogarth", seed=0, parallel=False)
    assert {d.name.split(":")[0] for d in report.details} == {"s=1", "s=0"}


def test_write_report(tmp_path):
    reports = run_suite("join-meet", seed=0, parallel=False)
    path = write_report(reports, tmp_path / "out" / "report.json", "json")
    data = json.loads(path.read_text())
    assert data[0]["theorem_id"] == "join-meet"
    assert data[0]["status"] == "pass"
    assert data[0]["seed"] == 0


def test_run_suite_writes_text(tmp_path):
    path = tmp_path / "report.txt"
    run_suite("join-meet", seed=0, report_path=path, fmt="text", parallel=False)
    assert path.read_text().splitlines()[-1] == "1 theorems, 0 failed"


def test_render_text_lists_failures():
    rec = CheckRecorder("demo", 1)
    rec.check("holds", True)
    rec.check("breaks", False, inputs={"p": "(0,0,0,0)"}, note="counterexample")
    text = render_text([rec.report()])
    assert text.startswith("FAIL")
    assert "  FAIL   breaks" in text
    assert "           p = (0,0,0,0)" in text
    assert "           note: counterexample" in text
    assert "holds" not in text
    assert text.endswith("1 theorems, 1 failed\n")


def test_runner_reports_verifier_crash(monkeypatch):
    from relsim.services import suite

    def boom(seed):
        raise RuntimeError("broken verifier")

    monkeypatch.setitem(REGISTRY, "hogarth", suite.Theorem("hogarth", "crashes", boom))
    (report,) = asyncio.run(SuiteRunner(parallel=False).run("hogarth", 0))
    assert report.failed
    assert report.details[0].name == "verifier completed"
    assert "broken verifier" in report.description


@pytest.mark.slow
def test_full_suite_passes():
    reports = run_suite("all", seed=0)
    assert [r.theorem_id for r in reports] == THEOREM_IDS
    assert [r.theorem_id for r in reports if r.failed] == []
