"""
Causality under non-standard synchrony, the causality condition on
simultaneity relations, and forward preservation of the causal order.
"""
import random
from fractions import Fraction
from itertools import permutations

import structlog

from relsim.core.errors import PreconditionError
from relsim.modules.groups import Affine4, GroupTag, boost, dilatation, group, member, time_inversion, translation
from relsim.modules.lattice import EventSet
from relsim.modules.relations import (
    NewtonTypeI,
    NewtonTypeII,
    StandardSim,
    SubgroupClass,
    classify_subgroup,
    half_cone,
    satisfies_causality,
)
from relsim.modules.spacetime import (
    E4,
    UNIT_METRIC,
    Classical,
    MetricParams,
    Minkowski,
    Vec4,
    causal_order,
)
from relsim.modules.synchrony import (
    InertialCoords,
    causality_witness,
    m_connectible,
    one_way_speed,
    pythagorean_directions,
    two_way_speed,
    witness_violates,
)
from .config import theorem_settings
from .instances import closed_events, random_events
from .newton import default_subgroups
from .report import CheckRecorder, TheoremReport

log = structlog.get_logger(__name__)

CAUSALITY_ID = "causality"
ALEXANDROV_ID = "alexandrov-forward"

# directions checked for light speeds: all Pythagorean quadruples up to this d
SPEED_DIRECTIONS = 9


def default_coords() -> InertialCoords:
    return InertialCoords(k=(Fraction(1, 2), 0, 0))


def _ordered_pairs(X: EventSet):
    return permutations(X.events, 2)


def verify_causality_theorems(
    phi: InertialCoords | None = None, X: EventSet | None = None, seed: int = 0
) -> TheoremReport:
    """
    Light speeds and connectibility under φ, then the causality condition.

    The condition runs on X when one is given and on the closed integer orbit
    otherwise.
    """
    phi = default_coords() if phi is None else phi
    condition_set = closed_events() if X is None else X
    X = random_events(random.Random(seed), theorem_settings.RANDOM_EVENTS) if X is None else X
    standard = InertialCoords.identity(phi.m)
    rec = CheckRecorder(CAUSALITY_ID, seed, scope=f"k = {tuple(str(x) for x in phi.k)} on {X.name}")

    directions = pythagorean_directions(SPEED_DIRECTIONS)
    odd = [n for n in directions if two_way_speed(phi, n) != phi.c]
    rec.check(
        "two-way light speed is c in every direction",
        not odd,
        inputs={"directions": len(directions)},
        values={"direction": odd[0]} if odd else {"c": phi.c},
    )

    disagreements = [
        (p, q) for p, q in _ordered_pairs(X) if m_connectible(standard, p, q) != m_connectible(phi, p, q)
    ]
    if phi.is_standard:
        rec.check(
            "M-connectibility agrees with standard coordinates",
            not disagreements,
            inputs={"pairs": len(X) * (len(X) - 1)},
            values={"pair": disagreements[0]} if disagreements else {},
        )
        rec.check(
            "one-way light speed is c in every direction",
            all(one_way_speed(phi, n) == phi.c for n in directions),
        )
        rec.check("no causality witness exists", causality_witness(phi) is None)
    else:
        anisotropic = next((n for n in directions if one_way_speed(phi, n) != phi.c), None)
        rec.witness(
            "one-way light speed depends on direction",
            anisotropic is not None,
            values={"direction": anisotropic, "speed": one_way_speed(phi, anisotropic)} if anisotropic else {},
        )
        witness = causality_witness(phi)
        p, q = witness.pair()
        rec.witness(
            "velocity with |v| = c breaks |v| ≤ c(1 + k·Av)",
            witness_violates(phi, witness.v),
            values={"v": witness.v, "exact direction": witness.exact_direction},
        )
        rec.witness(
            "pair M-connectible in standard coordinates but not in φ′",
            m_connectible(standard, p, q) and not m_connectible(phi, p, q),
            inputs={"p": p, "q": q},
        )
        if disagreements:
            rec.witness(f"disagreeing pair on {X.name}", True, values={"pair": disagreements[0]})
        else:
            rec.skip_check(f"disagreeing pair on {X.name}", "none among these events; the constructed pair stands")
        rec.declare_witness(f"events {p} and {q} are causally connectible but not M-connectible in φ′")

    _causality_condition(rec, phi.m, condition_set, require_violations=condition_set is not X)
    log.debug("Causality theorems checked", standard=phi.is_standard, disagreements=len(disagreements))
    return rec.report()


def _causality_condition(rec: CheckRecorder, m: MetricParams, X: EventSet, require_violations: bool) -> None:
    """
    Only absolute simultaneity satisfies the causality condition classically.

    A violation needs a related pair of connectible events inside X. The
    closed integer orbit always holds one, so there a missing violation is a
    failure; on a caller's events it is only skipped.
    """
    classical = Classical()

    def expect(name: str, result, expected: bool) -> None:
        if not expected and result.ok and not require_violations:
            rec.skip_check(name, f"no related pair in {X.name} is causally connectible")
        else:
            rec.check(name, result.ok == expected, inputs={"events": X.name}, values={"result": result})

    for H in default_subgroups():
        families = [NewtonTypeII(H)]
        if classify_subgroup(H).kind is not SubgroupClass.ZERO:
            families.insert(0, NewtonTypeI(H))
        for spec in families:
            expected = isinstance(spec, NewtonTypeII) and classify_subgroup(H).kind is SubgroupClass.ZERO
            expect(
                f"{spec.name}({H}) {'satisfies' if expected else 'violates'} the causality condition",
                satisfies_causality(spec, X, classical),
                expected,
            )
    minkowski = Minkowski(m)
    expect("standard synchrony satisfies it in Minkowski spacetime", satisfies_causality(StandardSim(E4, m), X, minkowski), True)
    name = "light-cone simultaneity violates it in Minkowski spacetime"
    if m.lam != 1:
        rec.skip_check(name, "the integer orbit has no null pairs for this metric")
        return
    expect(name, satisfies_causality(half_cone(1), X, minkowski), False)


def default_conformal_map() -> Affine4:
    return translation(Vec4(1, 2, 0, 1)).compose(dilatation(2)).compose(boost(Fraction(5, 4), Fraction(3, 4)))


def verify_alexandrov_forward(
    g: Affine4 | None = None,
    X: EventSet | None = None,
    m: MetricParams = UNIT_METRIC,
    seed: int = 0,
) -> TheoremReport:
    g = default_conformal_map() if g is None else g
    if not member(g, group(GroupTag.CONFORMAL_POINCARE, m=m)):
        raise PreconditionError("g must be a conformal Poincaré transformation")
    if g.linear.rows[3][3].sign() <= 0:
        raise PreconditionError("g must preserve the time orientation")
    X = random_events(random.Random(seed), theorem_settings.RANDOM_EVENTS) if X is None else X
    rec = CheckRecorder(ALEXANDROV_ID, seed, scope="forward direction only")

    ordered = 0
    broken = None
    for p, q in _ordered_pairs(X):
        before = causal_order(p, q, m)
        ordered += before
        if before != causal_order(g.apply(p), g.apply(q), m):
            broken = (p, q)
            break
    rec.check(
        f"p ≤ q iff g·p ≤ g·q on {X.name}",
        broken is None,
        inputs={"pairs": len(X) * (len(X) - 1)},
        values={"pair": broken} if broken else {"ordered pairs": ordered},
    )

    theta = time_inversion()
    reversed_pair = next(
        ((p, q) for p, q in _ordered_pairs(X) if causal_order(p, q, m) != causal_order(theta.apply(p), theta.apply(q), m)),
        None,
    )
    if reversed_pair is None:
        rec.skip_check("time inversion reverses the order", f"no causally related pair in {X.name}")
    else:
        rec.witness("time inversion reverses the order", True, values={"pair": reversed_pair})
    return rec.report()
