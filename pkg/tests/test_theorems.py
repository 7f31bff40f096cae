from fractions import Fraction

import numpy as np
import pytest

from relsim.core.errors import PreconditionError
from relsim.modules.groups import GroupTag, cayley_matrix, group, rotation_cayley, time_inversion
from relsim.modules.lattice import EventSet
from relsim.modules.relations import RealSubgroupSpec
from relsim.modules.scalar import Matrix, Scalar
from relsim.modules.spacetime import E1, E4, ORIGIN, Event, Vec4
from relsim.modules.synchrony import InertialCoords
from relsim.modules.theorems import (
    CheckRecorder,
    TheoremReport,
    closed_events,
    combination_sweep,
    find_combination,
    join_chain_point,
    verify_alexandrov_forward,
    verify_causality_theorems,
    verify_conformal_uniqueness,
    verify_hogarth,
    verify_join_meet,
    verify_lattice_action,
    verify_malament,
    verify_newton_family,
    verify_poincare_nogo,
    verify_rest_pencil,
    verify_rotation_span,
    verify_subgroup_dichotomy,
)
from relsim.modules.theorems.malament import cone_intersection, hogarth_chain
from relsim.modules.theorems.poincare import default_boost
from relsim.modules.theorems.span import default_rotations
from relsim.modules.theorems.subgroups import sweep_bound

U = default_boost().apply_linear(E4)


def assert_ok(report: TheoremReport, status: str):
    assert report.status == status, [d for d in report.details if d.outcome == "fail"]
    assert not report.failures()


# --- recorder ---


def test_recorder_statuses():
    rec = CheckRecorder("t", 0)
    rec.check("a", True)
    assert rec.report().status == "pass"
    rec.declare_witness("found one")
    report = rec.report()
    assert report.status == "witness" and report.description == "found one"
    rec.check("b", False, values={"x": Scalar(0, 1)})
    report = rec.report()
    assert report.failed
    assert report.failures()[0].values == {"x": "0+1*r2"}


def test_recorder_skip_without_checks():
    rec = CheckRecorder("t", 3)
    rec.skip("nothing to do")
    report = rec.report()
    assert report.status == "skipped"
    assert report.description == "nothing to do"
    assert report.seed == 3


def test_absorb_prefixes_and_propagates():
    inner = CheckRecorder("inner", 0)
    inner.witness("w", True)
    inner.declare_witness("pair found")
    skipped = CheckRecorder("inner", 0)
    skipped.skip("trivial")

    outer = CheckRecorder("outer", 0)
    outer.absorb("H=Z", inner.report())
    outer.absorb("H=0", skipped.report())
    report = outer.report()
    assert report.status == "witness"
    assert report.description == "H=Z: pair found"
    assert [d.name for d in report.details] == ["H=Z: w", "H=0"]
    assert report.details[1].outcome == "skipped"


def test_missing_witness_is_a_failure():
    rec = CheckRecorder("t", 0)
    rec.witness("expected counterexample", False)
    assert rec.report().failed


# --- rotation span ---


def test_rotation_span_default():
    assert_ok(verify_rotation_span((3, 4, 0)), "pass")


def test_find_combination_axis():
    coeffs = find_combination((Scalar(1), Scalar(0), Scalar(0)), (Scalar(0), Scalar(2), Scalar(0)), default_rotations(), 2)
    assert coeffs is not None
    assert sum(abs(n) for n in coeffs) == 2


def test_rotation_span_inconclusive_is_reported():
    report = verify_rotation_span((3, 4, 0), targets=[(Fraction(1, 7), 0, 0)], depth=2)
    assert report.failed
    assert report.failures()[0].note == "inconclusive at this depth"


def test_rotation_span_rejects_zero_and_reflections():
    with pytest.raises(PreconditionError):
        verify_rotation_span((0, 0, 0))
    reflection = Matrix([[-x for x in row] for row in default_rotations()[0].rows])
    with pytest.raises(PreconditionError):
        verify_rotation_span((1, 0, 0), rotations=[reflection])


# --- Newton / Galilei ---


def test_newton_zero_subgroup_passes(small_orbit):
    assert_ok(verify_newton_family(RealSubgroupSpec.zero(), small_orbit), "pass")


def test_newton_cyclic_subgroup_breaks_type_one(small_orbit):
    report = verify_newton_family(RealSubgroupSpec.cyclic(1), small_orbit, seed=1)
    assert not report.failed
    assert any(d.outcome == "witness" and "Galilei boost" in d.name for d in report.details)


def test_conformal_uniqueness_instances():
    assert_ok(verify_conformal_uniqueness(group(GroupTag.CONFORMAL_NEWTON), RealSubgroupSpec.cyclic(1)), "pass")
    dense = RealSubgroupSpec.generated([1, Scalar(0, 1)])
    assert_ok(verify_conformal_uniqueness(group(GroupTag.CONFORMAL_GALILEI), dense), "pass")
    assert_ok(
        verify_conformal_uniqueness(group(GroupTag.CONFORMAL_REST_ISOTROPY, U), RealSubgroupSpec.cyclic(1)), "pass"
    )


def test_conformal_uniqueness_preconditions():
    with pytest.raises(PreconditionError):
        verify_conformal_uniqueness(group(GroupTag.CONFORMAL_NEWTON), RealSubgroupSpec.zero())
    with pytest.raises(PreconditionError):
        verify_conformal_uniqueness(group(GroupTag.POINCARE), RealSubgroupSpec.cyclic(1))


def test_conformal_uniqueness_full_subgroup_skips():
    report = verify_conformal_uniqueness(group(GroupTag.CONFORMAL_NEWTON), RealSubgroupSpec.full())
    assert report.status == "skipped"


# --- Poincaré, join/meet, rest pencils ---


def test_nogo_witness_for_integers():
    report = verify_poincare_nogo(RealSubgroupSpec.cyclic(1))
    assert_ok(report, "witness")
    escape = next(d for d in report.details if d.name.startswith("time coordinate"))
    assert escape.inputs["x"] == str(ORIGIN + E1)
    assert escape.values["time"] == "3/4"


def test_nogo_zero_subgroup_skips():
    assert verify_poincare_nogo(RealSubgroupSpec.zero()).status == "skipped"


def test_nogo_rejects_rotation_only():
    with pytest.raises(PreconditionError):
        verify_poincare_nogo(RealSubgroupSpec.cyclic(1), boost_map=rotation_cayley(0, 0, 1))


def test_join_chain_point():
    y = join_chain_point(ORIGIN, E4, U, Scalar(1))
    assert y == Event(Fraction(-5, 3), 0, 0, 0)


def test_join_meet_default():
    assert_ok(verify_join_meet(), "pass")


def test_join_meet_preconditions():
    with pytest.raises(PreconditionError):
        verify_join_meet(u2=E4)
    with pytest.raises(PreconditionError):
        verify_join_meet(u2=E4 * 2)
    with pytest.raises(PreconditionError):
        verify_join_meet(s=0)
    with pytest.raises(PreconditionError):
        verify_join_meet(u2=Vec4(1, 0, 0, 0))
    with pytest.raises(PreconditionError):
        verify_join_meet(vs=[E4, E4 * 2, U, U * 3])


@pytest.mark.parametrize("H", [RealSubgroupSpec.cyclic(1), RealSubgroupSpec.zero()], ids=str)
def test_rest_pencil(H):
    assert_ok(verify_rest_pencil(H, seed=2), "pass")


# --- causality ---


def test_causality_nonstandard_synchrony():
    report = verify_causality_theorems(seed=0)
    assert_ok(report, "witness")
    assert "M-connectible" in report.description


def test_causality_standard_coordinates():
    phi = InertialCoords(lam=Scalar(2), A=cayley_matrix(1, 2, 3))
    assert_ok(verify_causality_theorems(phi), "pass")


def _condition_checks(report: TheoremReport):
    return [d for d in report.details if "causality condition" in d.name or "Minkowski spacetime" in d.name]


def test_causality_condition_runs_on_given_events(small_orbit):
    report = verify_causality_theorems(X=small_orbit)
    assert_ok(report, "witness")
    checks = _condition_checks(report)
    assert len(checks) == 7
    assert all(d.outcome == "pass" and d.inputs["events"] == "small-orbit" for d in checks)


def test_causality_condition_skips_missing_violations():
    X = EventSet.from_events([ORIGIN, Event(1, 0, 0, 0), Event(0, 1, 0, 0)], name="one-instant")
    report = verify_causality_theorems(X=X)
    assert not report.failed
    skipped = [d for d in _condition_checks(report) if d.outcome == "skipped"]
    assert [d.name.split(" ")[0] for d in skipped] == ["newton1", "newton2", "newton1", "newton2", "light-cone"]
    assert all("one-instant" in d.note for d in skipped)


def test_alexandrov_forward():
    report = verify_alexandrov_forward(seed=4)
    assert_ok(report, "pass")
    assert any(d.outcome == "witness" for d in report.details)


def test_alexandrov_rejects_time_inversion():
    with pytest.raises(PreconditionError):
        verify_alexandrov_forward(time_inversion())


# --- worldline stabilizers ---


def test_cone_intersection_is_on_both_cones():
    x = cone_intersection(Scalar(1), Scalar(0), Scalar(2))
    assert x == Event(1, 0, 0, 1)


def test_malament(small_orbit):
    assert_ok(verify_malament(X=small_orbit), "pass")


def test_hogarth_chain_steps():
    chain = hogarth_chain((1, 0, 0), Scalar(1))
    assert [step for step, _, _ in chain] == ["assumed", "time translation by -s", "Θ", "transitivity"]
    assert chain[-1][1:] == (Event(0, 0, 0, 1), Event(0, 0, 0, -1))


def test_hogarth_witness_and_degenerate_case(small_orbit):
    assert_ok(verify_hogarth(small_orbit, s=1), "witness")
    assert_ok(verify_hogarth(small_orbit, s=0), "pass")


def test_hogarth_rejects_point_on_the_line(small_orbit):
    with pytest.raises(PreconditionError):
        verify_hogarth(small_orbit, a_bar=(0, 0, 0))


# --- subgroups and lattice action ---


@pytest.mark.parametrize(
    "gens",
    [
        [Scalar(1) / 2, Scalar(1) / 3],
        [Scalar(1), Scalar(0, 1)],
        [Scalar(2), Scalar(4)],
        [Scalar(0)],
    ],
    ids=["rational", "dense", "cyclic-2", "zero"],
)
def test_subgroup_dichotomy(gens):
    assert_ok(verify_subgroup_dichotomy(gens, intervals=20, bound=200), "pass")


def test_combination_sweep_values():
    values = combination_sweep([Scalar(1) / 2, Scalar(1) / 3], 2)
    assert values.size == 25
    assert np.isclose(values[values > 1e-12].min(), 1 / 6)


def test_sweep_bound_shrinks_for_many_generators():
    assert sweep_bound(2, 1000, 4_004_001) == 1000
    b = sweep_bound(3, 1000, 4_004_001)
    assert (2 * b + 1) ** 3 <= 4_004_001


def test_lattice_action():
    assert_ok(verify_lattice_action(seed=5), "pass")


def test_closed_events_default_size():
    assert len(closed_events()) == 245


def _oracle_lists() -> list[list[Scalar]]:
    rationals = [Scalar(Fraction(x)) for x in ("1/2", "1/3", "2/3", "1", "3/2")]
    r2 = Scalar(0, 1)
    lists = [[a] for a in rationals]
    lists += [[a, b] for i, a in enumerate(rationals) for b in rationals[i + 1:]]
    lists += [[a, b * r2] for a in rationals for b in rationals]
    lists += [[Scalar(0)], [Scalar(0), Scalar(0)], [r2, 3 * r2], [1 + r2, 2 + 2 * r2]]
    return lists


@pytest.mark.slow
def test_subgroup_oracle_agrees_on_many_lists():
    lists = _oracle_lists()
    assert len(lists) >= 40
    for gens in lists:
        report = verify_subgroup_dichotomy(gens)
        assert not report.failed, (gens, report.failures())


@pytest.mark.slow
def test_malament_on_default_orbit():
    assert_ok(verify_malament(), "pass")
