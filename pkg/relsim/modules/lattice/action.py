"""
Induced group action on partitions and the invariant-closure fixpoint.

    p (g·R) q  ⟺  (g⁻¹p) R (g⁻¹q)

Under the strict policy g must permute the base set; under the partial
policy events whose preimage lies outside the set stay singletons.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import structlog

from relsim.config import settings
from relsim.core.errors import ClosureError
from relsim.modules.groups import Affine4
from relsim.modules.spacetime import Event
from .events import EventSet
from .partition import FinitePartition
from .union_find import UnionFind

log = structlog.get_logger(__name__)


class Policy(str, Enum):
    STRICT = "strict"
    PARTIAL = "partial"


def image_map(g: Affine4, X: EventSet, policy: Policy = Policy.STRICT) -> list[int | None]:
    """Index of g(x_i) in X for each i, None where the image leaves X."""
    images = [X.index_of(g.apply(e)) for e in X.events]
    if policy is Policy.STRICT:
        for i, k in enumerate(images):
            if k is None:
                raise ClosureError(X.ids[i], f"event {X.ids[i]!r} is mapped outside {X.name!r}")
    return images


def _push_forward(R: FinitePartition, images: Sequence[int | None], uf: UnionFind) -> bool:
    """Merge the images of every block of R into uf; True if anything changed."""
    first_image: dict[int, int] = {}
    changed = False
    for i, k in enumerate(images):
        if k is None:
            continue
        rep = R.labels[i]
        anchor = first_image.setdefault(rep, k)
        if anchor != k and uf.union(anchor, k):
            changed = True
    return changed


def induced(g: Affine4, R: FinitePartition, policy: Policy = Policy.STRICT) -> FinitePartition:
    images = image_map(g, R.base, policy)
    uf = UnionFind(len(R.base))
    _push_forward(R, images, uf)
    return FinitePartition.from_union_find(R.base, uf)


def invariance_witness(
    R: FinitePartition, g: Affine4, policy: Policy = Policy.STRICT
) -> tuple[str, str] | None:
    """
    First pair whose relatedness differs from that of its g-image.

    Only pairs with both images inside the base set are compared.
    """
    images = image_map(g, R.base, policy)
    ids = R.base.ids
    labels = R.labels
    anchor: dict[int, int] = {}
    source_of: dict[int, int] = {}
    for i, k in enumerate(images):
        if k is None:
            continue
        a = anchor.setdefault(labels[i], i)
        if labels[images[a]] != labels[k]:
            return ids[a], ids[i]
        s = source_of.setdefault(labels[k], i)
        if labels[s] != labels[i]:
            return ids[s], ids[i]
    return None


def is_invariant(R: FinitePartition, g: Affine4, policy: Policy = Policy.STRICT) -> bool:
    return invariance_witness(R, g, policy) is None


@dataclass(frozen=True)
class ClosureResult:
    partition: FinitePartition
    converged: bool
    rounds: int


def _inverse_images(g: Affine4, X: EventSet, images: list[int | None], policy: Policy) -> list[int | None]:
    if policy is Policy.STRICT:
        inverse: list[int | None] = [None] * len(images)
        for i, k in enumerate(images):
            inverse[k] = i
        return inverse
    return image_map(g.invert(), X, policy)


def invariant_closure(
    R: FinitePartition,
    gens: Iterable[Affine4],
    policy: Policy = Policy.STRICT,
    max_rounds: int | None = None,
) -> ClosureResult:
    """Least fixpoint of R ↦ R ∨ ⋁ g·R over gens and their inverses."""
    max_rounds = settings.MAX_CLOSURE_ROUNDS if max_rounds is None else max_rounds
    X = R.base
    maps = []
    for g in gens:
        images = image_map(g, X, policy)
        maps.append(images)
        maps.append(_inverse_images(g, X, images, policy))

    uf = R.union_find()
    current = R
    for rounds in range(1, max_rounds + 1):
        changed = False
        for images in maps:
            changed |= _push_forward(current, images, uf)
            current = FinitePartition.from_union_find(X, uf)
        if not changed:
            return ClosureResult(current, True, rounds)
    log.warning("Invariant closure did not converge", rounds=max_rounds, blocks=current.block_count)
    return ClosureResult(current, False, max_rounds)


def orbit_closure(
    events: Iterable[Event], generators: Sequence[Affine4], max_size: int = 10_000
) -> list[Event]:
    """Smallest superset of events closed under the (finite-order) generators."""
    seen: dict[Event, None] = {}
    frontier = []
    for e in events:
        if e not in seen:
            seen[e] = None
            frontier.append(e)
    while frontier:
        nxt = []
        for e in frontier:
            for g in generators:
                image = g.apply(e)
                if image not in seen:
                    seen[image] = None
                    nxt.append(image)
                    if len(seen) > max_size:
                        raise ClosureError(str(image), f"orbit exceeds {max_size} events at {image}")
        frontier = nxt
    return list(seen)
