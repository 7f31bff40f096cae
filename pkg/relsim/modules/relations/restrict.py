"""
Bridges from intensional relations to finite partitions.
"""
from dataclasses import dataclass

import structlog

from relsim.core.errors import BoundExhaustedError, InvariantViolation, PreconditionError
from relsim.modules.groups import Affine4
from relsim.modules.lattice import EventSet, FinitePartition, UnionFind
from relsim.modules.spacetime import Event, SpacetimeKind, causally_connectible
from .specs import (
    CosetRelation,
    HalfCone,
    Identity,
    NewtonTypeI,
    NewtonTypeII,
    PencilTypeI,
    PencilTypeII,
    RelationSpec,
    StandardSim,
    Total,
    Verdict,
)
from .subgroups import SubgroupClass, classify_subgroup

log = structlog.get_logger(__name__)


def _decide(spec: RelationSpec, X: EventSet, profiles: list, i: int, j: int) -> bool:
    verdict = spec.compare(profiles[i], profiles[j])
    if not verdict.decided:
        raise BoundExhaustedError(X.ids[i], X.ids[j])
    return verdict.value


def relation_matrix(spec: RelationSpec, X: EventSet) -> list[list[bool]]:
    """Pairwise decisions, each pair decided in both orders and checked for symmetry."""
    profiles = [spec.profile(e) for e in X.events]
    n = len(X)
    table = [[False] * n for _ in range(n)]
    for i in range(n):
        table[i][i] = True
        for j in range(i + 1, n):
            forward = _decide(spec, X, profiles, i, j)
            backward = _decide(spec, X, profiles, j, i)
            if forward != backward:
                raise InvariantViolation(
                    f"{spec.name} is not symmetric on {X.name!r}: "
                    f"({X.ids[i]}, {X.ids[j]}) decided {forward} but ({X.ids[j]}, {X.ids[i]}) decided {backward}"
                )
            table[i][j] = table[j][i] = forward
    return table


def restrict(spec: RelationSpec, X: EventSet) -> FinitePartition:
    """Trace of the spec's classes on X, with symmetry and transitivity checked."""
    table = relation_matrix(spec, X)
    n = len(X)
    uf = UnionFind(n)
    for i in range(n):
        row = table[i]
        for j in range(i + 1, n):
            if row[j]:
                uf.union(i, j)
    partition = FinitePartition.from_union_find(X, uf)
    labels = partition.labels
    for i in range(n):
        row = table[i]
        for j in range(i + 1, n):
            if row[j] != (labels[i] == labels[j]):
                raise InvariantViolation(
                    f"{spec.name} is not transitive on {X.name!r}: "
                    f"({X.ids[i]}, {X.ids[j]}) decided {row[j]} but joined {not row[j]}"
                )
    return partition


@dataclass(frozen=True)
class CausalityResult:
    ok: bool
    pair: tuple[str, str] | None = None

    def __str__(self) -> str:
        return "ok" if self.ok else f"violation{self.pair}"


def satisfies_causality(spec: RelationSpec, X: EventSet, kind: SpacetimeKind) -> CausalityResult:
    """First related pair of events that are causally connectible, if any."""
    partition = restrict(spec, X)
    for i, j in partition.related_pairs():
        if causally_connectible(X.events[i], X.events[j], kind):
            return CausalityResult(False, (X.ids[i], X.ids[j]))
    return CausalityResult(True)


def connected_classes(spec: RelationSpec) -> bool:
    """Whether every class of the spec is a connected subset of R^4."""
    if isinstance(spec, (Total, Identity, StandardSim, HalfCone)):
        return True
    if isinstance(spec, (NewtonTypeI, NewtonTypeII, PencilTypeI, PencilTypeII)):
        return classify_subgroup(spec.H).kind in (SubgroupClass.ZERO, SubgroupClass.FULL)
    if isinstance(spec, CosetRelation):
        raise PreconditionError("connectedness of coset classes is not decided")
    raise PreconditionError(f"unknown relation {spec!r}")


def sim_isotropy(spec: RelationSpec, g: Affine4, p: Event) -> Verdict:
    """g belongs to the ~-isotropy subgroup of p: g·p ~ p."""
    return spec.related(g.apply(p), p)
