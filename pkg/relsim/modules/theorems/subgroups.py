"""
Finitely generated subgroups of (R, +) are zero, cyclic or dense.

The exact classifier is cross-validated against a floating-point sweep of
integer combinations. The sweep is an oracle only: its tolerance never
decides the exact verdict, it only confirms that the verdict is plausible.
"""
from typing import Sequence

import numpy as np
import structlog

from relsim.modules.relations import Classification, RealSubgroupSpec, SubgroupClass, classify_subgroup, subgroup_contains
from relsim.modules.scalar import Scalar
from .config import theorem_settings
from .report import CheckRecorder, TheoremReport

log = structlog.get_logger(__name__)

THEOREM_ID = "subgroup-dichotomy"

# relative tolerance of the float oracle
ORACLE_TOLERANCE = 1e-9


def default_generator_lists() -> list[list[Scalar]]:
    r2 = Scalar(0, 1)
    return [
        [Scalar(1) / 2, Scalar(1) / 3],
        [Scalar(1), r2],
        [Scalar(2), Scalar(4)],
        [Scalar(0)],
        [r2, 3 * r2],
        [1 + r2, 3 - r2],
    ]


def sweep_bound(count: int, bound: int, max_values: int) -> int:
    """Largest B ≤ bound with (2B+1)^count ≤ max_values."""
    b = bound
    while b > 1 and (2 * b + 1) ** count > max_values:
        b = int(b * 0.8)
    return b


def combination_sweep(gens: Sequence[Scalar], bound: int) -> np.ndarray:
    """All Σ n_i g_i with |n_i| ≤ bound, as floats."""
    coefficients = np.arange(-bound, bound + 1, dtype=np.float64)
    values = np.zeros(1)
    for g in gens:
        values = np.add.outer(values, coefficients * float(g)).ravel()
    return values


def _interval_hits(values: np.ndarray, intervals: int) -> np.ndarray:
    inside = values[(values > 0) & (values < 1)]
    bins = np.floor(inside * intervals).astype(np.int64)
    return np.bincount(bins, minlength=intervals)[:intervals] > 0


def verify_subgroup_dichotomy(
    gens: Sequence[Scalar],
    intervals: int | None = None,
    seed: int = 0,
    bound: int | None = None,
) -> TheoremReport:
    intervals = theorem_settings.ORACLE_INTERVALS if intervals is None else intervals
    bound = theorem_settings.ORACLE_BOUND if bound is None else bound
    gens = [Scalar.coerce(g) for g in gens]
    spec = RealSubgroupSpec.generated(gens)
    verdict: Classification = classify_subgroup(spec)
    rec = CheckRecorder(THEOREM_ID, seed, scope=f"gens = {spec}; float oracle, |n_i| bounded")

    rec.check(
        "every generator belongs to the subgroup",
        all(subgroup_contains(spec, g) for g in gens),
        values={"verdict": verdict},
    )
    nonzero = [g for g in gens if g]
    b = sweep_bound(len(nonzero), bound, theorem_settings.ORACLE_MAX_VALUES)
    inputs = {"bound": b, "values": (2 * b + 1) ** len(nonzero)}

    if verdict.kind is SubgroupClass.ZERO:
        rec.check("zero verdict: no nonzero generator", not nonzero, inputs=inputs)
        return rec.report()

    values = combination_sweep(nonzero, b)
    scale = max(abs(float(g)) for g in nonzero)
    tol = ORACLE_TOLERANCE * scale * b
    if verdict.kind is SubgroupClass.CYCLIC:
        a = verdict.generator
        rec.check(
            "cyclic verdict: every generator is an integer multiple of the generator",
            all((g / a).is_integer() for g in nonzero),
            values={"generator": a},
        )
        positive = values[values > tol]
        smallest = float(positive.min()) if positive.size else None
        rec.check(
            "oracle: no combination strictly between 0 and the generator",
            smallest is not None and abs(smallest - float(a)) <= tol,
            inputs=inputs,
            values={"generator": a, "smallest positive": smallest},
            note="floating-point oracle",
        )
    else:
        hits = _interval_hits(values, intervals)
        missing = [j for j in range(intervals) if not hits[j]]
        rec.check(
            f"oracle: combinations in each of {intervals} intervals of (0, 1)",
            not missing,
            inputs=inputs,
            values={"first empty interval": missing[0]} if missing else {"hit": int(hits.sum())},
            note="floating-point oracle",
        )
    log.debug("Subgroup oracle swept", gens=str(spec), verdict=str(verdict), values=int(values.size))
    return rec.report()
