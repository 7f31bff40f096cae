"""
Poincaré no-go, the join/meet of standard synchronies, and rest pencils.
"""
import random
from fractions import Fraction
from typing import Sequence

import structlog

from relsim.core.errors import PreconditionError
from relsim.modules.groups import (
    Affine4,
    GroupTag,
    boost,
    cube_rotations,
    group,
    conjugate_isotropy_check,
    isotropy,
    member,
    orthogonal_part,
    sample_member,
    translation,
)
from relsim.modules.groups.sampling import random_rest_isotropy, random_rotation, random_vec4
from relsim.modules.lattice import EventSet, Policy, invariance_witness, join, meet
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
    sim_isotropy,
    standard_pencil,
    subgroup_contains,
)
from relsim.modules.scalar import Matrix, Scalar
from relsim.modules.spacetime import (
    BASIS,
    E1,
    E4,
    ORIGIN,
    UNIT_METRIC,
    ZERO_VEC,
    Event,
    MetricParams,
    Vec4,
    lorentz_form,
    require_future_timelike,
)
from .checks import expect_invariant, positive_element, preserves_pairs, related_pairs_along
from .config import theorem_settings
from .instances import closed_events, image_events, random_events
from .report import CheckRecorder, TheoremReport

log = structlog.get_logger(__name__)

NOGO_ID = "poincare-nogo"
JOIN_MEET_ID = "join-meet"
REST_PENCIL_ID = "rest-pencil"

SPATIAL_SCALES: tuple[Scalar, ...] = (
    Scalar(1),
    Scalar(Fraction(1, 2)),
    Scalar(Fraction(1, 3)),
    Scalar(Fraction(1, 5)),
    Scalar(Fraction(1, 7)),
    Scalar(0, 1),
)


def default_boost() -> Affine4:
    return boost(Fraction(5, 4), Fraction(3, 4))


def _require_moving_boost(g: Affine4) -> None:
    if not member(g, group(GroupTag.PROPER_ORTHOCHRONOUS_LORENTZ)):
        raise PreconditionError("boost must be a proper orthochronous Lorentz transformation")
    if g.apply_linear(E4) == E4:
        raise PreconditionError("boost must move e4; a pure rotation leaves the hyperplanes in place")


def verify_poincare_nogo(
    H: RealSubgroupSpec, boost_map: Affine4 | None = None, seed: int = 0
) -> TheoremReport:
    L = default_boost() if boost_map is None else boost_map
    _require_moving_boost(L)
    rec = CheckRecorder(NOGO_ID, seed, scope=f"H = {H}")
    kind = classify_subgroup(H).kind
    if kind is SubgroupClass.ZERO:
        rec.skip("H = 0 gives standard synchrony along e4, handled by join-meet")
        return rec.report()
    if kind is SubgroupClass.FULL:
        rec.skip("H = R gives the total relation")
        return rec.report()

    time_row = L.linear.rows[3][:3]
    rec.check("boosted hyperplanes project onto the whole time axis", any(time_row), values={"row": time_row})

    # an event of the t = 0 hyperplane whose image leaves R³×H
    spec = NewtonTypeII(H)
    witness = None
    for j in range(3):
        for s in SPATIAL_SCALES:
            x0 = ORIGIN + BASIS[j] * s
            image = L.apply(x0)
            if not subgroup_contains(H, image.time):
                witness = (x0, image)
                break
        if witness:
            break
    if witness is None:
        rec.witness("time coordinate of a boosted simultaneous event escapes H", False)
        return rec.report()

    x0, image = witness
    rec.witness(
        "time coordinate of a boosted simultaneous event escapes H",
        spec.related(ORIGIN, x0).value and not spec.related(L.apply(ORIGIN), image).value,
        inputs={"x": x0},
        values={"boost(x)": image, "time": image.time},
    )
    Y = EventSet.from_events([ORIGIN, x0, image], prefix="y", name="nogo-witness")
    pair = invariance_witness(restrict(spec, Y), L, Policy.PARTIAL)
    rec.witness(f"{spec.name}({H}) broken on the witness set", pair is not None, values={"pair": pair})

    h = positive_element(H)
    line = NewtonTypeI(H)
    q = Event(0, 0, 0, h)
    rec.witness(
        f"{line.name}({H}) broken by the boost",
        line.related(ORIGIN, q).value and not line.related(L.apply(ORIGIN), L.apply(q)).value,
        inputs={"q": q},
        values={"boost(q)": L.apply(q)},
    )
    rec.witness(
        "standard synchrony along e4 broken by the boost",
        not StandardSim(E4).related(L.apply(ORIGIN), L.apply(x0)).value,
        inputs={"x": x0},
    )
    rec.declare_witness(f"boost maps {x0} to {image}, whose time {image.time} is not in {H}")
    return rec.report()


def default_meet_vectors(m: MetricParams = UNIT_METRIC) -> list[Vec4]:
    """e4 and its images under a (5/4, 3/4) boost along each axis."""
    return [E4] + [boost(Fraction(5, 4), Fraction(3, 4), axis, m).apply_linear(E4) for axis in (1, 2, 3)]


def join_chain_point(x: Event, u1: Vec4, u2: Vec4, s: Scalar, m: MetricParams = UNIT_METRIC) -> Event:
    """
    y = x + a·u1 + b·u2 with x R_u1 y and y R_u2 (x + s·u1).

    Reverse Cauchy-Schwarz makes the 2x2 Gram system nonsingular for
    non-proportional timelike u1, u2.
    """
    g11 = lorentz_form(u1, u1, m)
    g12 = lorentz_form(u1, u2, m)
    g22 = lorentz_form(u2, u2, m)
    a, b = Matrix([[g11, g12], [g12, g22]]).solve([0, s * g12])
    return x + u1 * a + u2 * b


def verify_join_meet(
    u1: Vec4 = E4,
    u2: Vec4 | None = None,
    vs: Sequence[Vec4] | None = None,
    x: Event = ORIGIN,
    s: Scalar | int = 1,
    m: MetricParams = UNIT_METRIC,
    seed: int = 0,
) -> TheoremReport:
    u2 = default_boost().apply_linear(E4) if u2 is None else u2
    vs = default_meet_vectors(m) if vs is None else list(vs)
    s = Scalar.coerce(s)
    require_future_timelike(u1, m, "u1")
    require_future_timelike(u2, m, "u2")
    if Matrix([u1.coords, u2.coords]).rank() < 2:
        raise PreconditionError("u1 and u2 must not be proportional")
    if not s:
        raise PreconditionError("s must be nonzero")
    if len(vs) != 4 or Matrix([v.coords for v in vs]).rank() != 4:
        raise PreconditionError("vs must be four linearly independent vectors")
    for i, v in enumerate(vs):
        require_future_timelike(v, m, f"v{i + 1}")

    rec = CheckRecorder(JOIN_MEET_ID, seed)
    first, second = StandardSim(u1, m), StandardSim(u2, m)
    y = join_chain_point(x, u1, u2, s, m)
    z = x + u1 * s
    inputs = {"x": x, "s": s}
    rec.check("x ~ y under R_u1", first.related(x, y).value, inputs=inputs, values={"y": y})
    rec.check("y ~ x + s·u1 under R_u2", second.related(y, z).value, inputs=inputs, values={"y": y, "x + s·u1": z})
    rec.check("x and x + s·u1 lie in different R_u1 classes", not first.related(x, z).value, inputs=inputs)

    Z = EventSet([("x", x), ("y", y), ("z", z)], name="join-chain")
    joined = join(restrict(first, Z), restrict(second, Z))
    rec.check("R_u1 ∨ R_u2 is one block on {x, y, x + s·u1}", joined.block_count == 1, values={"blocks": joined.id_blocks()})

    normals = Matrix([m.gram() @ v.coords for v in vs])
    rec.check("orthogonal hyperplanes meet only in 0", normals.rank() == 4, values={"rank": normals.rank()})
    X = random_events(random.Random(seed), theorem_settings.MEET_EVENTS)
    partitions = [restrict(StandardSim(v, m), X) for v in vs]
    result = partitions[0]
    for R in partitions[1:]:
        result = meet(result, R)
    rec.check(
        f"meet of the four R_v is the identity on {X.name}",
        result.is_bottom(),
        values={"blocks": result.block_count},
    )
    return rec.report()


def _label(spec: RelationSpec) -> str:
    H = getattr(spec, "H", None)
    return spec.name if H is None else f"{spec.name}({H})"


def verify_rest_pencil(
    H: RealSubgroupSpec, boost_map: Affine4 | None = None, seed: int = 0
) -> TheoremReport:
    L = default_boost() if boost_map is None else boost_map
    if not member(L, group(GroupTag.PROPER_ORTHOCHRONOUS_LORENTZ)):
        raise PreconditionError("boost must be a proper orthochronous Lorentz transformation")
    u = L.apply_linear(E4)
    rng = random.Random(seed)
    rest = group(GroupTag.REST_ISOTROPY, u)
    X = image_events(L, closed_events(), name="boosted-orbit")
    rec = CheckRecorder(REST_PENCIL_ID, seed, scope=f"u = {u}, H = {H}")

    frame = L.invert()
    conjugated = [R.conjugate_by(frame) for R in rng.sample(cube_rotations(), theorem_settings.SAMPLED_MEMBERS)]
    rec.check(
        "conjugated cube rotations fix u",
        all(member(g, rest) for g in conjugated),
    )
    zero_H = classify_subgroup(H).kind is SubgroupClass.ZERO
    step = Scalar(1) if zero_H else positive_element(H)
    along_u = ZERO_VEC if zero_H else u * step
    shifts = {"u·h": u * step, "boosted e1": L.apply_linear(E1)}

    families: list[RelationSpec] = [PencilTypeI(u, H), PencilTypeII(u, H), StandardSim(u)]
    for spec in families:
        label = _label(spec)
        R = restrict(spec, X)
        for i, g in enumerate(conjugated):
            expect_invariant(rec, label, R, g, f"conjugated rotation #{i}", Policy.STRICT)
        for name, b in shifts.items():
            expect_invariant(rec, label, R, translation(b), f"translation by {name}", Policy.PARTIAL)

        pairs = related_pairs_along(rng, theorem_settings.SAMPLED_PAIRS // 2, lambda r: orthogonal_part(random_vec4(r), u))
        pairs += [(p, p + u * step) for p, _ in pairs[::2]]
        for i in range(theorem_settings.SAMPLED_MEMBERS):
            g = sample_member(rest, rng)
            bad = preserves_pairs(spec, g, pairs)
            rec.check(f"{label} fixed by rest-isotropy sample #{i}", bad is None, values={"pair": bad} if bad else {})

    standard = restrict(StandardSim(u), X)
    rec.check("R_u and the zero pencil restrict identically", standard == restrict(standard_pencil(u), X))

    for i in range(theorem_settings.SAMPLED_MEMBERS):
        inside = sample_member(group(GroupTag.REST_ISOTROPY, E4), rng)
        outside = random_rotation(rng).compose(L)
        for name, g in (("member", inside.conjugate_by(frame)), ("non-member", outside)):
            rec.check(
                f"isotropy conjugation identity, {name} #{i}",
                conjugate_isotropy_check(L, E4, g),
                values={"in H(u)": member(g, rest)},
            )
        g = sample_member(rest, rng)
        rec.check(
            f"H(2u) = H(u) on sample #{i}",
            member(g, group(GroupTag.REST_ISOTROPY, u * 2)) == member(g, rest),
        )

    p = X.events[rng.randrange(len(X))]
    to_p = translation(p.position)
    for i in range(theorem_settings.SAMPLED_MEMBERS):
        fixer = to_p.compose(random_rest_isotropy(rng, u, UNIT_METRIC)).compose(to_p.invert())
        moved = sample_member(rest, rng)
        for spec in families:
            label = _label(spec)
            rec.check(
                f"H(p) ≤ H̃(p) for {label}, sample #{i}",
                isotropy(fixer, p) and sim_isotropy(spec, fixer, p).value,
                inputs={"p": p},
            )
            inner = translation(along_u if isinstance(spec, PencilTypeI) else orthogonal_part(random_vec4(rng), u))
            conjugate = moved.compose(inner).compose(moved.invert())
            rec.check(
                f"H̃(g·p) = g H̃(p) g⁻¹ for {label}, sample #{i}",
                sim_isotropy(spec, inner, p).value and sim_isotropy(spec, conjugate, moved.apply(p)).value,
                inputs={"p": p},
            )

    standard_ok = connected_classes(StandardSim(u)) and connected_classes(standard_pencil(u))
    rec.check("standard synchrony has connected classes", standard_ok)
    if classify_subgroup(H).kind in (SubgroupClass.CYCLIC, SubgroupClass.DENSE):
        for spec in families[:2]:
            rec.check(f"{spec.name}({H}) has disconnected classes", not connected_classes(spec))
    log.debug("Rest pencil checked", u=str(u), events=len(X))
    return rec.report()
