"""Invariance sub-checks shared by the verifiers."""
import random
from typing import Callable, Sequence

from relsim.core.errors import PreconditionError
from relsim.modules.groups import Affine4
from relsim.modules.groups.sampling import random_vec4
from relsim.modules.lattice import FinitePartition, Policy, invariance_witness
from relsim.modules.relations import RealSubgroupSpec, RelationSpec, SubgroupKind
from relsim.modules.scalar import Scalar
from relsim.modules.spacetime import Event, Vec4
from .report import CheckRecorder


def expect_invariant(
    rec: CheckRecorder, label: str, R: FinitePartition, g: Affine4, gname: str, policy: Policy
) -> bool:
    pair = invariance_witness(R, g, policy)
    return rec.check(
        f"{label} fixed by {gname}",
        pair is None,
        inputs={"events": R.base.name, "policy": policy.value},
        values={"blocks": R.block_count} if pair is None else {"counterexample": pair},
    )


def expect_broken(
    rec: CheckRecorder, label: str, R: FinitePartition, g: Affine4, gname: str, policy: Policy
) -> tuple[str, str] | None:
    pair = invariance_witness(R, g, policy)
    rec.witness(
        f"{label} broken by {gname}",
        pair is not None,
        inputs={"events": R.base.name, "policy": policy.value},
        values={"pair": pair} if pair else {},
    )
    return pair


def breaks_pair(spec: RelationSpec, g: Affine4, p: Event, q: Event) -> bool:
    """p ~ q but g·p ≁ g·q (or the reverse): g does not preserve the relation."""
    before = spec.related(p, q).value
    after = spec.related(g.apply(p), g.apply(q)).value
    return before != after


def preserves_pairs(spec: RelationSpec, g: Affine4, pairs: Sequence[tuple[Event, Event]]) -> tuple[Event, Event] | None:
    """First pair whose relatedness g changes, or None."""
    for p, q in pairs:
        if breaks_pair(spec, g, p, q):
            return p, q
    return None


def positive_element(H: RealSubgroupSpec) -> Scalar:
    """A strictly positive element of a nonzero subgroup."""
    if H.kind is SubgroupKind.FULL:
        return Scalar(1)
    if not H.gens:
        raise PreconditionError("the zero subgroup has no positive element")
    return abs(H.gens[0])


def related_pairs_along(
    rng: random.Random, count: int, direction: Callable[[random.Random], Vec4]
) -> list[tuple[Event, Event]]:
    """Half related-looking pairs p, p + w(rng), half unconstrained pairs."""
    pairs = []
    for i in range(count):
        p = Event(*random_vec4(rng))
        if i % 2 == 0:
            pairs.append((p, p + direction(rng)))
        else:
            pairs.append((p, Event(*random_vec4(rng))))
    return pairs
