# relsim/services/suite.py
"""
Theorem registry and the concurrent suite runner.

Every registry entry runs a verifier on its documented default instances.
Entries with several instances fold them into one report, sub-check names
prefixed by the instance.
"""
import asyncio
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

import structlog

from relsim.config import settings
from relsim.core.errors import PreconditionError
from relsim.modules.groups import GroupTag, cayley_matrix, group
from relsim.modules.relations import RealSubgroupSpec
from relsim.modules.scalar import Scalar
from relsim.modules.spacetime import E4
from relsim.modules.synchrony import InertialCoords
from relsim.modules.theorems import (
    CheckRecorder,
    SubCheck,
    TheoremReport,
    verify_alexandrov_forward,
    verify_causality_theorems,
    verify_conformal_uniqueness,
    verify_hogarth,
    verify_join_meet,
    verify_lattice_action,
    verify_malament,
    verify_newton_family,
    verify_poincare_nogo,
    verify_rest_pencil,
    verify_rotation_span,
    verify_subgroup_dichotomy,
)
from relsim.modules.theorems.newton import default_subgroups
from relsim.modules.theorems.poincare import default_boost
from relsim.modules.theorems.subgroups import default_generator_lists
from .reports import ReportFormat, write_report

log = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Theorem:
    theorem_id: str
    description: str
    run: Callable[[int], TheoremReport]


def _instances(theorem_id: str, seed: int, runs: Iterable[tuple[str, Callable[[], TheoremReport]]]) -> TheoremReport:
    rec = CheckRecorder(theorem_id, seed)
    for label, run in runs:
        rec.absorb(label, run())
    return rec.report()


def _newton(seed: int) -> TheoremReport:
    return _instances(
        "newton-family", seed, ((f"H={H}", lambda H=H: verify_newton_family(H, seed=seed)) for H in default_subgroups())
    )


def _conformal(seed: int) -> TheoremReport:
    u = default_boost().apply_linear(E4)
    cases = [
        (group(GroupTag.CONFORMAL_NEWTON), RealSubgroupSpec.cyclic(1)),
        (group(GroupTag.CONFORMAL_GALILEI), RealSubgroupSpec.generated([1, Scalar(0, 1)])),
        (group(GroupTag.CONFORMAL_REST_ISOTROPY, u), RealSubgroupSpec.cyclic(1)),
    ]
    return _instances(
        "conformal-uniqueness",
        seed,
        ((f"{G} H={H}", lambda G=G, H=H: verify_conformal_uniqueness(G, H, seed)) for G, H in cases),
    )


def _nogo(seed: int) -> TheoremReport:
    return _instances(
        "poincare-nogo", seed, ((f"H={H}", lambda H=H: verify_poincare_nogo(H, seed=seed)) for H in default_subgroups())
    )


def _rest_pencil(seed: int) -> TheoremReport:
    cases = [RealSubgroupSpec.cyclic(1), RealSubgroupSpec.zero()]
    return _instances(
        "rest-pencil", seed, ((f"H={H}", lambda H=H: verify_rest_pencil(H, seed=seed)) for H in cases)
    )


def _causality(seed: int) -> TheoremReport:
    standard = InertialCoords(lam=Scalar(2), A=cayley_matrix(1, 2, 3))
    cases = [
        ("k=(1/2,0,0)", None),
        ("k=0, λ=2, rotated", standard),
    ]
    return _instances(
        "causality", seed, ((label, lambda phi=phi: verify_causality_theorems(phi, seed=seed)) for label, phi in cases)
    )


def _subgroups(seed: int) -> TheoremReport:
    lists = default_generator_lists()
    return _instances(
        "subgroup-dichotomy",
        seed,
        (
            ("gens=" + ";".join(str(g).replace(" ", "") for g in gens), lambda gens=gens: verify_subgroup_dichotomy(gens, seed=seed))
            for gens in lists
        ),
    )


def _hogarth(seed: int) -> TheoremReport:
    return _instances(
        "hogarth", seed, ((f"s={s}", lambda s=s: verify_hogarth(seed=seed, s=s)) for s in (1, 0))
    )


REGISTRY: dict[str, Theorem] = {
    t.theorem_id: t
    for t in (
        Theorem("rotation-span", "rotation orbits of a nonzero vector span R³", lambda seed: verify_rotation_span((3, 4, 0), seed=seed)),
        Theorem("newton-family", "Newton-invariant relations come in two families", _newton),
        Theorem("conformal-uniqueness", "dilatations leave only the zero subgroup", _conformal),
        Theorem("poincare-nogo", "no nontrivial Poincaré-invariant relation", _nogo),
        Theorem("join-meet", "standard synchronies join to T and meet to I", lambda seed: verify_join_meet(seed=seed)),
        Theorem("rest-pencil", "rest-isotropy invariant pencils", _rest_pencil),
        Theorem("causality", "causality under non-standard synchrony", _causality),
        Theorem("alexandrov-forward", "conformal maps preserve the causal order", lambda seed: verify_alexandrov_forward(seed=seed)),
        Theorem("malament", "half-cones and standard synchrony along a worldline", lambda seed: verify_malament(seed=seed)),
        Theorem("hogarth", "a unique representative on the worldline", _hogarth),
        Theorem("subgroup-dichotomy", "subgroups of R are zero, cyclic or dense", _subgroups),
        Theorem("lattice-action", "the induced action respects the lattice", lambda seed: verify_lattice_action(seed)),
    )
}


def parse_selection(selection: str | Iterable[str] | None) -> list[str]:
    """'all', None, a comma list or an iterable of theorem ids, in registry order."""
    if selection is None or selection == "all":
        return list(REGISTRY)
    names = [s.strip() for s in selection.split(",")] if isinstance(selection, str) else list(selection)
    unknown = [n for n in names if n not in REGISTRY]
    if unknown:
        raise PreconditionError(f"unknown theorem id(s): {', '.join(unknown)}; known: {', '.join(REGISTRY)}")
    return [n for n in REGISTRY if n in names]


def _run_one(theorem: Theorem, seed: int) -> TheoremReport:
    started = time.perf_counter()
    log.info("Verifier started", theorem_id=theorem.theorem_id, seed=seed)
    try:
        report = theorem.run(seed)
    except Exception as e:
        log.exception("Verifier raised", theorem_id=theorem.theorem_id)
        report = TheoremReport(
            theorem_id=theorem.theorem_id,
            status="fail",
            description=f"{type(e).__name__}: {e}",
            details=[SubCheck(name="verifier completed", outcome="fail", note=str(e))],
            seed=seed,
            elapsed=round(time.perf_counter() - started, 6),
        )
    if report.description is None:
        report = report.model_copy(update={"description": theorem.description})
    log.info("Verifier finished", theorem_id=theorem.theorem_id, status=report.status, elapsed=report.elapsed)
    return report


class SuiteRunner:
    """Runs selected verifiers, concurrently in worker threads when enabled."""

    def __init__(self, parallel: bool | None = None):
        self.parallel = settings.PARALLEL_VERIFIERS if parallel is None else parallel

    async def run(self, selection: str | Iterable[str] | None = None, seed: int | None = None) -> list[TheoremReport]:
        seed = settings.SEED if seed is None else seed
        theorems = [REGISTRY[name] for name in parse_selection(selection)]
        log.info("Suite started", theorems=len(theorems), seed=seed, parallel=self.parallel)
        if self.parallel:
            reports = await asyncio.gather(*(asyncio.to_thread(_run_one, t, seed) for t in theorems))
        else:
            reports = [_run_one(t, seed) for t in theorems]
        failed = [r.theorem_id for r in reports if r.failed]
        log.info("Suite finished", theorems=len(reports), failed=failed)
        return list(reports)


def run_suite(
    selection: str | Iterable[str] | None = None,
    seed: int | None = None,
    report_path: str | Path | None = None,
    fmt: ReportFormat | None = None,
    parallel: bool | None = None,
) -> list[TheoremReport]:
    """Run the suite and write the report when a path is given."""
    reports = asyncio.run(SuiteRunner(parallel).run(selection, seed))
    if report_path is not None:
        write_report(reports, report_path, fmt or settings.REPORT_FORMAT)
    return reports
