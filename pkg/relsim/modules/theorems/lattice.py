"""
The induced action on E(X) is a lattice action, and invariant closures
are the least invariant coarsenings.
"""
import random
from functools import reduce

from relsim.modules.groups import cube_rotations, rotation_cayley
from relsim.modules.lattice import (
    EventSet,
    FinitePartition,
    induced,
    invariant_closure,
    is_invariant,
    join,
)
from .config import theorem_settings
from .instances import closed_events
from .report import CheckRecorder, TheoremReport

THEOREM_ID = "lattice-action"

# seeds of a smaller closed orbit so the lattice laws run on many triples
LATTICE_SEEDS = ((0, 0, 0), (1, 0, 0), (1, 1, 0))
LATTICE_TIMES = (-1, 0, 1)

LAWS = (
    "g·(R1 ∨ R2) = g·R1 ∨ g·R2",
    "g·(R1 ∧ R2) = g·R1 ∧ g·R2",
    "g⁻¹·(g·R1) = R1",
    "meet and join commute",
    "meet and join associate",
    "absorption",
    "meet ≤ both ≤ join",
)


def random_partition(rng: random.Random, X: EventSet, max_blocks: int = 6) -> FinitePartition:
    k = rng.randint(1, max_blocks)
    labels = [rng.randrange(k) for _ in range(len(X))]
    blocks: dict[int, list[int]] = {}
    for i, label in enumerate(labels):
        blocks.setdefault(label, []).append(i)
    return FinitePartition.from_blocks(X, blocks.values())


def verify_lattice_action(seed: int = 0, X: EventSet | None = None) -> TheoremReport:
    X = closed_events(LATTICE_SEEDS, LATTICE_TIMES, name="small-orbit") if X is None else X
    rng = random.Random(seed)
    rotations = cube_rotations()
    rec = CheckRecorder(THEOREM_ID, seed, scope=f"{X.name} ({len(X)} events), cube rotations")

    trials = theorem_settings.SAMPLED_PAIRS
    failures: dict[str, tuple] = {}
    for t in range(trials):
        r1, r2, r3 = (random_partition(rng, X) for _ in range(3))
        g = rng.choice(rotations)
        holds = (
            induced(g, r1 | r2) == induced(g, r1) | induced(g, r2),
            induced(g, r1 & r2) == induced(g, r1) & induced(g, r2),
            induced(g.invert(), induced(g, r1)) == r1,
            r1 & r2 == r2 & r1 and r1 | r2 == r2 | r1,
            (r1 & r2) & r3 == r1 & (r2 & r3) and (r1 | r2) | r3 == r1 | (r2 | r3),
            r1 & (r1 | r2) == r1 and r1 | (r1 & r2) == r1,
            r1 & r2 <= r1 and r1 & r2 <= r2 and r1 <= r1 | r2 and r2 <= r1 | r2,
        )
        for name, ok in zip(LAWS, holds):
            if not ok and name not in failures:
                failures[name] = (t, r1, r2, r3)
    for name in LAWS:
        bad = failures.get(name)
        rec.check(
            name,
            bad is None,
            inputs={"trials": trials},
            values={"trial": bad[0], "R1": bad[1].id_blocks(), "R2": bad[2].id_blocks()} if bad else {},
        )

    gens = [rotation_cayley(0, 0, 1), rotation_cayley(1, 0, 0)]
    for t in range(theorem_settings.SAMPLED_MEMBERS):
        i, j = rng.sample(range(len(X)), 2)
        R = FinitePartition.from_pairs(X, [(i, j)])
        closure = invariant_closure(R, gens)
        C = closure.partition
        orbit_join = reduce(join, (induced(h, R) for h in rotations))
        inputs = {"pair": (X.ids[i], X.ids[j])}
        rec.check(f"closure #{t} converges and contains R", closure.converged and R <= C, inputs=inputs)
        rec.check(f"closure #{t} is fixed by the generators", all(is_invariant(C, g) for g in gens), inputs=inputs)
        rec.check(
            f"closure #{t} is the join of the rotation images of R",
            C == orbit_join,
            inputs=inputs,
            values={"blocks": C.block_count, "orbit join blocks": orbit_join.block_count},
        )
    return rec.report()
