import random
from fractions import Fraction

import pytest

from relsim.core.errors import ParseError, PreconditionError
from relsim.modules.groups import (
    Affine4,
    GroupTag,
    boost,
    boost_parameters,
    boost_x,
    cayley_matrix,
    conjugate_isotropy_check,
    cube_rotations,
    dilatation,
    format_group_element,
    galilei_boost,
    group,
    isotropy,
    lorentz_reflection,
    member,
    parity,
    parse_group_element,
    rest_isotropy_element,
    rotation_cayley,
    sample_member,
    time_inversion,
    translation,
)
from relsim.modules.scalar import Matrix, Scalar
from relsim.modules.spacetime import E1, E2, E4, ORIGIN, Event, Vec4, metric

U = Vec4(Fraction(3, 4), 0, 0, Fraction(5, 4))

ALL_GROUPS = [group(tag) for tag in GroupTag if tag not in (GroupTag.REST_ISOTROPY, GroupTag.CONFORMAL_REST_ISOTROPY)] + [
    group(GroupTag.REST_ISOTROPY, U),
    group(GroupTag.CONFORMAL_REST_ISOTROPY, U),
    group(GroupTag.POINCARE, m=metric(2)),
]


@pytest.mark.parametrize("G", ALL_GROUPS, ids=str)
def test_samples_are_members(G):
    rng = random.Random(1)
    for _ in range(10):
        assert member(sample_member(G, rng), G)


@pytest.mark.parametrize("G", ALL_GROUPS, ids=str)
def test_closed_under_products_and_inverses(G):
    rng = random.Random(2)
    for _ in range(5):
        g, h = sample_member(G, rng), sample_member(G, rng)
        assert member(g.compose(h), G)
        assert member(g.invert(), G)


@pytest.mark.slow
@pytest.mark.parametrize("G", ALL_GROUPS, ids=str)
def test_closed_under_many_products(G):
    rng = random.Random(3)
    for _ in range(1000):
        assert member(sample_member(G, rng).compose(sample_member(G, rng)), G)


def test_time_inversion_is_lorentz_but_not_orthochronous():
    theta = time_inversion()
    assert member(theta, group(GroupTag.LORENTZ))
    assert not member(theta, group(GroupTag.ORTHOCHRONOUS_LORENTZ))
    assert member(theta, group(GroupTag.TIME_INVERSION_PAIR))


def test_galilei_boost_is_not_newton():
    g = galilei_boost((1, 0, 0))
    assert member(g, group(GroupTag.GALILEI))
    assert not member(g, group(GroupTag.NEWTON))
    assert g.apply(Event(0, 0, 0, 1)) == Event(1, 0, 0, 1)


def test_dilatation_membership():
    d = dilatation(2)
    assert member(d, group(GroupTag.CONFORMAL_NEWTON))
    assert member(d, group(GroupTag.CONFORMAL_POINCARE))
    assert not member(d, group(GroupTag.POINCARE))
    with pytest.raises(PreconditionError):
        dilatation(-1)


def test_boost_from_parameters():
    gamma, beta_gamma = boost_parameters(2, 1)
    assert (gamma, beta_gamma) == (Scalar(Fraction(5, 4)), Scalar(Fraction(3, 4)))
    L = boost(gamma, beta_gamma)
    assert L.apply_linear(E4) == U
    assert L.apply_linear(E1) == Vec4(Fraction(5, 4), 0, 0, Fraction(3, 4))
    assert member(L, group(GroupTag.PROPER_ORTHOCHRONOUS_LORENTZ))
    assert not member(L, group(GroupTag.GALILEI))


def test_boost_rejects_off_hyperbola():
    with pytest.raises(PreconditionError):
        boost(1, 1)
    with pytest.raises(PreconditionError):
        boost(Fraction(5, 4), Fraction(3, 4), axis=4)


def test_boost_respects_metric():
    m = metric(2)
    L = boost(Fraction(5, 4), Fraction(3, 4), 2, m)
    assert member(L, group(GroupTag.LORENTZ, m=m))
    assert not member(L, group(GroupTag.LORENTZ))


def test_cube_rotations():
    rotations = cube_rotations()
    assert len(set(rotations)) == 24
    assert all(member(g, group(GroupTag.SPATIAL_ROTATIONS)) for g in rotations)


def test_cayley_matrix_is_rational_rotation():
    S = cayley_matrix(1, 2, 3)
    assert S.T @ S == Matrix.identity(3)
    assert S.det() == 1


def test_split_semidirect_recomposes():
    g = translation(Vec4(1, 2, 3, 4)).compose(boost(Fraction(5, 4), Fraction(3, 4))).compose(rotation_cayley(0, 1, 0))
    homogeneous, shift = g.split_semidirect()
    assert shift.compose(homogeneous) == g
    assert homogeneous.translation.is_zero()
    assert shift.linear == Matrix.identity(4)


def test_compose_is_function_composition():
    g, h = translation(E1), dilatation(2)
    p = Event(1, 1, 1, 1)
    assert g.compose(h).apply(p) == g.apply(h.apply(p))
    assert g.compose(g.invert()).is_identity()


def test_lorentz_reflections():
    spatial = lorentz_reflection(E1)
    temporal = lorentz_reflection(E4)
    assert member(spatial, group(GroupTag.ORTHOCHRONOUS_LORENTZ))
    assert member(temporal, group(GroupTag.LORENTZ))
    assert not member(temporal, group(GroupTag.ORTHOCHRONOUS_LORENTZ))
    with pytest.raises(PreconditionError):
        lorentz_reflection(Vec4(1, 0, 0, 1))


def test_rest_isotropy_element_fixes_u():
    g = rest_isotropy_element(E1, E2, U)
    assert g.apply_linear(U) == U
    assert member(g, group(GroupTag.REST_ISOTROPY, U))
    assert rest_isotropy_element(U, E2, U).is_identity()


def test_rest_isotropy_needs_u():
    with pytest.raises(PreconditionError):
        group(GroupTag.REST_ISOTROPY)
    with pytest.raises(PreconditionError):
        group(GroupTag.REST_ISOTROPY, E1)


def test_isotropy_and_conjugation():
    L = boost(Fraction(5, 4), Fraction(3, 4))
    assert isotropy(rotation_cayley(0, 0, 1), Event(0, 0, 0, 7))
    assert not isotropy(translation(E1), ORIGIN)
    rng = random.Random(4)
    for _ in range(5):
        g = sample_member(group(GroupTag.REST_ISOTROPY, U), rng)
        assert conjugate_isotropy_check(L, E4, g)
        assert conjugate_isotropy_check(L, E4, sample_member(group(GroupTag.LORENTZ), rng))


def test_line_stabilizer_frame():
    frame = translation(E1)
    G = group(GroupTag.LINE_STABILIZER, frame=frame)
    assert member(translation(E4), G)
    assert member(parity().conjugate_by(frame.invert()), G)
    assert not member(parity(), G)
    with pytest.raises(PreconditionError):
        group(GroupTag.NEWTON, frame=frame)


def test_group_element_text_form():
    g = translation(Vec4(1, 0, 0, Fraction(1, 2))).compose(boost(Fraction(5, 4), Fraction(3, 4)))
    assert parse_group_element(format_group_element(g)) == g


def test_group_element_parse_errors():
    with pytest.raises(ParseError):
        parse_group_element("1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n")
    with pytest.raises(ParseError) as exc:
        parse_group_element("1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0\n0 0 0 0\n", source="g.txt")
    assert exc.value.line == 4
    singular = "1 0 0 0\n1 0 0 0\n0 0 1 0\n0 0 0 1\n0 0 0 0\n"
    with pytest.raises(ParseError):
        parse_group_element(singular)
    assert parse_group_element("# identity\n" + "\n".join(["1 0 0 0", "0 1 0 0", "0 0 1 0", "0 0 0 1", "0 0 0 0"])) == Affine4.identity()


def test_boost_x_is_the_axis_one_boost():
    assert boost_x(Fraction(5, 4), Fraction(3, 4)) == boost(Fraction(5, 4), Fraction(3, 4), 1)
    assert member(boost_x(Fraction(5, 4), Fraction(3, 4)), group(GroupTag.PROPER_ORTHOCHRONOUS_LORENTZ))
