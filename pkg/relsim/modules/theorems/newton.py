"""
Newton and Galilei invariant relations.

Rotation-invariant subgroups of R⁴ split as {0}×H or R³×H, so the
Newton-invariant relations are the two families NewtonTypeI(H) and
NewtonTypeII(H). Galilei boosts discard the first family, and dilatations
discard every H other than the zero subgroup.
"""
import random
from fractions import Fraction
from typing import Sequence

import structlog

from relsim.core.errors import PreconditionError
from relsim.modules.groups import (
    GroupId,
    GroupTag,
    cube_rotations,
    dilatation,
    galilei_boost,
    group,
    member,
    orthogonal_part,
    sample_member,
    translation,
)
from relsim.modules.lattice import EventSet, Policy, invariance_witness
from relsim.modules.relations import (
    NewtonTypeI,
    NewtonTypeII,
    PencilTypeI,
    PencilTypeII,
    RealSubgroupSpec,
    RelationSpec,
    StandardSim,
    SubgroupClass,
    classify_subgroup,
    connected_classes,
    restrict,
)
from relsim.modules.scalar import Scalar
from relsim.modules.spacetime import E1, E4, ORIGIN, Event, Vec4
from relsim.modules.groups.sampling import random_vec4, small_rational
from .checks import breaks_pair, expect_invariant, positive_element, preserves_pairs, related_pairs_along
from .config import theorem_settings
from .instances import closed_events
from .report import CheckRecorder, TheoremReport

log = structlog.get_logger(__name__)

NEWTON_ID = "newton-family"
CONFORMAL_ID = "conformal-uniqueness"

DILATATION_CANDIDATES: tuple[Scalar, ...] = tuple(
    Scalar(Fraction(x)) for x in ("2", "3/2", "4/3", "5/4", "1/2", "1/3", "2/3")
)


def default_subgroups() -> list[RealSubgroupSpec]:
    return [
        RealSubgroupSpec.zero(),
        RealSubgroupSpec.cyclic(1),
        RealSubgroupSpec.generated([1, Scalar(0, 1)]),
    ]


def _integer_translation(rng: random.Random) -> Vec4:
    return Vec4(*(rng.randint(-2, 2) for _ in range(3)), rng.randint(-2, 2))


def verify_newton_family(
    H: RealSubgroupSpec, X: EventSet | None = None, seed: int = 0
) -> TheoremReport:
    X = closed_events() if X is None else X
    rng = random.Random(seed)
    rec = CheckRecorder(NEWTON_ID, seed, scope=f"H = {H} on {X.name} ({len(X)} events)")

    rotations = rng.sample(cube_rotations(), theorem_settings.SAMPLED_MEMBERS)
    shifts = [E4, E1, _integer_translation(rng)]
    boost = galilei_boost((1, 0, 0))
    families: Sequence[RelationSpec] = (NewtonTypeI(H), NewtonTypeII(H))

    for spec in families:
        label = f"{spec.name}({H})"
        R = restrict(spec, X)
        for i, g in enumerate(rotations):
            expect_invariant(rec, label, R, g, f"cube rotation #{i}", Policy.STRICT)
        for b in shifts:
            expect_invariant(rec, label, R, translation(b), f"translation {b}", Policy.PARTIAL)

        if isinstance(spec, NewtonTypeII) or classify_subgroup(H).kind is SubgroupClass.ZERO:
            expect_invariant(rec, label, R, boost, "Galilei boost w=(1,0,0)", Policy.PARTIAL)
            continue

        # same place, time difference h: the boost moves the later event sideways
        h = positive_element(H)
        p, q = ORIGIN, Event(0, 0, 0, h)
        rec.witness(
            f"{label} broken by Galilei boost w=(1,0,0)",
            spec.related(p, q).value and not spec.related(boost.apply(p), boost.apply(q)).value,
            inputs={"p": p, "q": q},
            values={"g(p)": boost.apply(p), "g(q)": boost.apply(q)},
        )
        finite = invariance_witness(R, boost, Policy.PARTIAL)
        if finite is None:
            rec.skip_check(f"{label} broken on {X.name}", "no related pair of the set keeps both images inside it")
        else:
            rec.witness(f"{label} broken on {X.name}", True, values={"pair": finite})

    galilei = group(GroupTag.GALILEI)
    for i in range(theorem_settings.SAMPLED_MEMBERS):
        g = sample_member(galilei, rng)
        homogeneous, shift = g.split_semidirect()
        rec.check(
            f"semidirect split of Galilei sample #{i}",
            shift.compose(homogeneous) == g
            and homogeneous.translation.is_zero()
            and member(shift, group(GroupTag.TRANSLATIONS))
            and member(homogeneous, galilei),
            values={"translation": shift.translation},
        )
    return rec.report()


def _rivals(G: GroupId, H: RealSubgroupSpec) -> tuple[list[RelationSpec], RelationSpec, Vec4]:
    """The H-families under test, the surviving relation and the class direction."""
    if G.tag in (GroupTag.CONFORMAL_NEWTON, GroupTag.CONFORMAL_GALILEI):
        rivals = [NewtonTypeII(H)]
        if G.tag is GroupTag.CONFORMAL_NEWTON:
            rivals.insert(0, NewtonTypeI(H))
        return rivals, NewtonTypeII(RealSubgroupSpec.zero()), E4
    if G.tag is GroupTag.CONFORMAL_REST_ISOTROPY:
        return [PencilTypeI(G.u, H, G.m), PencilTypeII(G.u, H, G.m)], StandardSim(G.u, G.m), G.u
    raise PreconditionError(f"conformal uniqueness is stated for CGN, CG and conformal rest isotropy, not {G}")


def verify_conformal_uniqueness(G: GroupId, H: RealSubgroupSpec, seed: int = 0) -> TheoremReport:
    kind = classify_subgroup(H).kind
    if kind is SubgroupClass.ZERO:
        raise PreconditionError("H must be nonzero; the zero subgroup is the surviving relation")
    rivals, survivor, direction = _rivals(G, H)
    rng = random.Random(seed)
    rec = CheckRecorder(
        CONFORMAL_ID,
        seed,
        scope=f"{G}: uniqueness certified against the classified families, not all set-theoretic relations",
    )
    if kind is SubgroupClass.FULL:
        rec.skip("H = R makes every family the total relation")
        return rec.report()

    h = positive_element(H)
    p = ORIGIN
    q = p + direction * h
    for spec in rivals:
        label = f"{spec.name}({H})"
        rec.check(f"{label} relates o and o + h·dir", spec.related(p, q).value, inputs={"h": h})
        tried = []
        found = None
        for lam in DILATATION_CANDIDATES:
            g = dilatation(lam)
            tried.append(lam)
            if member(g, G) and breaks_pair(spec, g, p, q):
                found = lam
                break
        rec.witness(
            f"{label} broken by a dilatation",
            found is not None,
            inputs={"p": p, "q": q},
            values={"lambda": found, "tried": tried},
        )
        rec.check(f"{label} has disconnected classes", not connected_classes(spec))

    if G.tag is GroupTag.CONFORMAL_REST_ISOTROPY:
        def along(r: random.Random) -> Vec4:
            return orthogonal_part(random_vec4(r), G.u, G.m)
    else:
        def along(r: random.Random) -> Vec4:
            return Vec4(small_rational(r), small_rational(r), small_rational(r), 0)

    pairs = related_pairs_along(rng, theorem_settings.SAMPLED_PAIRS, along)
    label = survivor.name
    for lam in DILATATION_CANDIDATES:
        bad = preserves_pairs(survivor, dilatation(lam), pairs)
        rec.check(f"{label} fixed by dilatation {lam}", bad is None, values={"pair": bad} if bad else {})
    for i in range(theorem_settings.SAMPLED_MEMBERS):
        g = sample_member(G, rng)
        bad = preserves_pairs(survivor, g, pairs)
        rec.check(f"{label} fixed by sampled member #{i}", bad is None, values={"pair": bad} if bad else {})
    rec.check(f"{label} has connected classes", connected_classes(survivor))
    log.debug("Conformal uniqueness checked", group=str(G), H=str(H), rivals=len(rivals))
    return rec.report()
