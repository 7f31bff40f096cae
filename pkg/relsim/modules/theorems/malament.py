"""
Simultaneity fixed by the stabilizer of an inertial worldline ℓ = o + R·e4.

Without time inversion the invariant relations whose classes meet ℓ are
the translated half-cones and standard synchrony. Adjoining Θ glues an
upper half-cone to a lower one through any common point, which collapses
the half-cone relations and leaves standard synchrony alone.
"""
import random
from fractions import Fraction
from typing import Sequence

import structlog

from relsim.core.errors import PreconditionError
from relsim.modules.groups import (
    Affine4,
    GroupTag,
    cube_rotations,
    dilatation,
    group,
    member,
    parity,
    rotation_cayley,
    time_inversion,
    translation,
)
from relsim.modules.lattice import EventSet, FinitePartition, Policy, invariant_closure, join, orbit_closure
from relsim.modules.relations import ConeSign, HalfCone, RelationSpec, StandardSim, restrict
from relsim.modules.scalar import Scalar, parse_scalar
from relsim.modules.spacetime import E4, ORIGIN, Event, Vec4
from .checks import breaks_pair, expect_broken, expect_invariant
from .config import theorem_settings
from .instances import closed_events
from .report import CheckRecorder, TheoremReport, render

log = structlog.get_logger(__name__)

MALAMENT_ID = "malament"
HOGARTH_ID = "hogarth"

TILTED = Vec4(1, 0, 0, 2)


def _partial_generators() -> dict[str, Affine4]:
    return {
        "dilatation 2": dilatation(2),
        "dilatation 1/2": dilatation(Fraction(1, 2)),
        "time translation e4": translation(E4),
    }


def _check_generators(rec: CheckRecorder, tag: GroupTag, gens: dict[str, Affine4]) -> None:
    G = group(tag)
    outside = [name for name, g in gens.items() if not member(g, G)]
    rec.check(f"generators belong to {tag.value}", not outside, values={"outside": outside} if outside else {})


def _invariance_suite(
    rec: CheckRecorder,
    specs: Sequence[RelationSpec],
    X: EventSet,
    strict: dict[str, Affine4],
    partial: dict[str, Affine4],
) -> None:
    for spec in specs:
        label = _label(spec)
        R = restrict(spec, X)
        for name, g in strict.items():
            expect_invariant(rec, label, R, g, name, Policy.STRICT)
        for name, g in partial.items():
            expect_invariant(rec, label, R, g, name, Policy.PARTIAL)


def _label(spec: RelationSpec) -> str:
    if isinstance(spec, HalfCone):
        return f"half-cone({spec.c_hat},{spec.sign.value})"
    if isinstance(spec, StandardSim):
        return f"R_{spec.u}"
    return spec.name


def cone_intersection(c_hat: Scalar, k1: Scalar, k2: Scalar) -> Event:
    """A point on the upper cone with apex (0̄,k1) and the lower cone with apex (0̄,k2)."""
    return Event(c_hat * (k2 - k1) / 2, 0, 0, (k1 + k2) / 2)


def verify_malament(
    c_hat: Scalar | None = None, X: EventSet | None = None, seed: int = 0
) -> TheoremReport:
    c_hat = parse_scalar(theorem_settings.C_HAT) if c_hat is None else Scalar.coerce(c_hat)
    X = closed_events() if X is None else X
    rng = random.Random(seed)
    rec = CheckRecorder(
        MALAMENT_ID,
        seed,
        scope="uniqueness certified against half-cones and tilted hyperplanes, not all set-theoretic relations",
    )

    rotations = {
        f"cube rotation #{i}": g
        for i, g in enumerate(rng.sample(cube_rotations(), theorem_settings.SAMPLED_MEMBERS))
    }
    partial = _partial_generators()
    _check_generators(rec, GroupTag.NEWTON_LINE_STABILIZER_CONFORMAL, {**rotations, **partial})

    upper, lower = HalfCone(c_hat, ConeSign.PLUS), HalfCone(c_hat, ConeSign.MINUS)
    standard = StandardSim(E4)
    _invariance_suite(rec, [upper, lower, standard], X, rotations, partial)

    # a hyperplane relation tilted off ℓ is not rotation invariant
    tilted = StandardSim(TILTED)
    quarter = rotation_cayley(0, 0, 1)
    p, q = ORIGIN, Event(2, 0, 0, 1)
    rec.witness(
        f"{_label(tilted)} broken by a quarter turn",
        tilted.related(p, q).value and breaks_pair(tilted, quarter, p, q),
        inputs={"p": p, "q": q},
        values={"g(q)": quarter.apply(q)},
    )
    expect_broken(rec, _label(tilted), restrict(tilted, X), quarter, "a quarter turn", Policy.STRICT)

    theta = time_inversion()
    _check_generators(rec, GroupTag.LINE_STABILIZER_CONFORMAL, {"Θ": theta})
    for cone in (upper, lower):
        expect_broken(rec, _label(cone), restrict(cone, X), theta, "Θ", Policy.STRICT)

    k1, k2 = Scalar(0), Scalar(2)
    x = cone_intersection(c_hat, k1, k2)
    a1, a2 = Event(0, 0, 0, k1), Event(0, 0, 0, k2)
    rec.check(
        "x lies on the upper cone of (0̄,k1) and on the lower cone of (0̄,k2)",
        upper.related(x, a1).value and lower.related(x, a2).value,
        inputs={"c_hat": c_hat, "k1": k1, "k2": k2},
        values={"x": x},
    )
    Z = EventSet([("a1", a1), ("a2", a2), ("x", x)], name="cone-witness")
    glued = join(restrict(upper, Z), restrict(lower, Z))
    rec.check("joining C⁺ and C⁻ relates the two apexes", glued.is_top(), values={"blocks": glued.id_blocks()})

    gens = [rotation_cayley(0, 0, 1), rotation_cayley(1, 0, 0), theta]
    W = EventSet.from_events(orbit_closure([ORIGIN, a1, a2, x], gens), prefix="w", name="Θ-closed-witness")
    closure = invariant_closure(restrict(upper, W), gens, Policy.STRICT)
    i, j = W.index_of(a1), W.index_of(a2)
    rec.check(
        "Θ-invariant closure of the half-cone relation relates (0̄,k1) and (0̄,k2)",
        closure.converged and closure.partition.related(i, j),
        values={"rounds": closure.rounds, "blocks": closure.partition.block_count},
    )

    full = {**rotations, "Θ": theta}
    _check_generators(rec, GroupTag.LINE_STABILIZER_CONFORMAL, {**full, **partial})
    _invariance_suite(rec, [standard], X, full, partial)
    log.debug("Half-cone checks done", c_hat=str(c_hat), events=len(X))
    return rec.report()


def hogarth_chain(a_bar: Sequence, s: Scalar) -> list[tuple[str, Event, Event]]:
    """
    The derived equivalences from p = (ā,s) ~ o under a time translation and Θ.

    Each step names the map producing it and the two related events.
    """
    p, o = Event(*a_bar, s), ORIGIN
    shift = translation(E4 * -s)
    theta = time_inversion()
    base = (shift.apply(p), shift.apply(o))
    flipped = (theta.apply(base[0]), theta.apply(base[1]))
    return [
        ("assumed", p, o),
        ("time translation by -s", *base),
        ("Θ", *flipped),
        ("transitivity", flipped[1], base[1]),
    ]


def verify_hogarth(
    X: EventSet | None = None,
    seed: int = 0,
    a_bar: Sequence = (1, 0, 0),
    s: Scalar | int = 1,
) -> TheoremReport:
    X = closed_events() if X is None else X
    s = Scalar.coerce(s)
    a_bar = tuple(Scalar.coerce(a) for a in a_bar)
    if not any(a_bar):
        raise PreconditionError("ā must be nonzero; (0̄,s) ~ o is already two points of ℓ")
    rng = random.Random(seed)
    rec = CheckRecorder(HOGARTH_ID, seed, scope=f"ā = {render(a_bar)}, s = {render(s)}")
    p = Event(*a_bar, s)

    if not s:
        rec.check("p and o are standard-simultaneous when s = 0", StandardSim(E4).related(p, ORIGIN).value)
    else:
        chain = hogarth_chain(a_bar, s)
        at_rest = Event(*a_bar, 0)
        minus, plus = Event(0, 0, 0, -s), Event(0, 0, 0, s)
        rec.check(
            "chain steps land on (ā,0), (0̄,-s) and (0̄,s)",
            chain[1][1:] == (at_rest, minus) and chain[2][1:] == (at_rest, plus),
            values={step: f"{a} ~ {b}" for step, a, b in chain},
        )
        W = EventSet.from_events([p, ORIGIN, at_rest, minus, plus], prefix="h", name="hogarth-chain")
        seed_relation = FinitePartition.from_pairs(W, [(0, 1)])
        closure = invariant_closure(seed_relation, [translation(E4 * -s), time_inversion()], Policy.PARTIAL)
        rec.witness(
            "two distinct points of ℓ end up related",
            closure.partition.related(W.index_of(minus), W.index_of(plus)),
            values={"blocks": closure.partition.id_blocks()},
        )
        rec.declare_witness(f"(ā,s) ~ o forces {plus} ~ {minus}")

    rotations = {
        f"cube rotation #{i}": g
        for i, g in enumerate(rng.sample(cube_rotations(), theorem_settings.SAMPLED_MEMBERS))
    }
    strict = {**rotations, "Θ": time_inversion(), "parity": parity()}
    partial = {"time translation e4": translation(E4)}
    _check_generators(rec, GroupTag.LINE_STABILIZER, {**strict, **partial})
    _invariance_suite(rec, [StandardSim(E4)], X, strict, partial)
    return rec.report()
