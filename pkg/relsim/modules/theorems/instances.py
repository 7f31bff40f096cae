"""
Default event sets for the suite.

Closed sets are products of cube-rotation orbits of spatial seeds with a
symmetric window of integer times, so they are permuted exactly by the 24
cube rotations, by Θ and by parity. Translations and dilatations can
never permute a finite set; verifiers check them with the partial policy.
"""
import random
from typing import Iterable, Sequence

from relsim.modules.groups import Affine4, cube_rotation_matrices
from relsim.modules.groups.sampling import small_rational
from relsim.modules.lattice import EventSet
from relsim.modules.scalar import Scalar
from relsim.modules.spacetime import Event

DEFAULT_SEEDS: tuple[tuple[int, int, int], ...] = (
    (0, 0, 0),
    (1, 0, 0),
    (2, 0, 0),
    (1, 1, 0),
    (1, 2, 2),
)
DEFAULT_TIMES: tuple[int, ...] = (-2, -1, 0, 1, 2)


def spatial_orbit(seed: Sequence) -> list[tuple[Scalar, ...]]:
    vector = tuple(Scalar.coerce(x) for x in seed)
    out: dict[tuple[Scalar, ...], None] = {}
    for S in cube_rotation_matrices():
        out.setdefault(tuple(S @ vector), None)
    return list(out)


def closed_events(
    seeds: Iterable[Sequence] = DEFAULT_SEEDS,
    times: Iterable = DEFAULT_TIMES,
    name: str = "closed-orbit",
) -> EventSet:
    """Cube-rotation orbits of the seeds at each time; ids x<i>."""
    points = []
    for t in times:
        for seed in seeds:
            for r in spatial_orbit(seed):
                points.append(Event(*r, t))
    return EventSet.from_events(points, prefix="x", name=name)


def image_events(g: Affine4, X: EventSet, name: str | None = None) -> EventSet:
    """g·X with the same ids."""
    return EventSet(((i, g.apply(e)) for i, e in X), name=name or f"image-of-{X.name}")


def random_events(rng: random.Random, n: int, bound: int = 3, name: str = "random") -> EventSet:
    """n distinct events with small rational coordinates."""
    seen: dict[Event, None] = {}
    while len(seen) < n:
        seen.setdefault(Event(*(small_rational(rng, bound) for _ in range(4))), None)
    return EventSet.from_events(list(seen), prefix="r", name=name)
