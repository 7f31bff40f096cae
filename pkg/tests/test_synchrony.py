from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from relsim.core.errors import ParseError, PreconditionError
from relsim.modules.groups import cayley_matrix
from relsim.modules.scalar import Matrix, Scalar
from relsim.modules.spacetime import ORIGIN, Event, metric, norm3_sq
from relsim.modules.synchrony import (
    InertialCoords,
    causality_witness,
    from_prime,
    lightcone_image,
    m_connectible,
    negate,
    null_vector,
    one_way_speed,
    parse_coords,
    pythagorean_directions,
    quadratic_value,
    to_prime,
    two_way_speed,
    witness_violates,
)

from .conftest import events

HALF_X = InertialCoords(k=(Fraction(1, 2), 0, 0))
X_AXIS = (Scalar(1), Scalar(0), Scalar(0))
DIRECTIONS = pythagorean_directions(9)

small = st.fractions(min_value=-1, max_value=1, max_denominator=5)


@st.composite
def coords(draw):
    c = draw(st.sampled_from([1, 2, Fraction(1, 2)]))
    k = (draw(small), draw(small), draw(small))
    assume(c * c * sum(x * x for x in k) < 1)
    A = cayley_matrix(*(draw(small) for _ in range(3)))
    lam = draw(st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=4))
    return InertialCoords(lam, k, A, metric(c))


def test_directions_are_exact_units():
    assert all(norm3_sq(n) == 1 for n in DIRECTIONS)
    assert X_AXIS in DIRECTIONS
    assert (Scalar(Fraction(1, 3)), Scalar(Fraction(2, 3)), Scalar(Fraction(2, 3))) in DIRECTIONS


def test_one_way_speeds_along_x():
    assert one_way_speed(HALF_X, X_AXIS) == Fraction(2, 3)
    assert one_way_speed(HALF_X, negate(X_AXIS)) == 2
    assert two_way_speed(HALF_X, X_AXIS) == 1


@given(coords(), st.sampled_from(DIRECTIONS))
def test_two_way_speed_is_isotropic(phi, n):
    assert two_way_speed(phi, n) == phi.c


@pytest.mark.slow
def test_two_way_speed_on_many_coords():
    import random

    rng = random.Random(0)
    done = 0
    while done < 100:
        k = tuple(Fraction(rng.randint(-3, 3), rng.randint(2, 6)) for _ in range(3))
        if sum(x * x for x in k) >= 1:
            continue
        A = cayley_matrix(*(Fraction(rng.randint(-2, 2), rng.randint(1, 3)) for _ in range(3)))
        phi = InertialCoords(Fraction(rng.randint(1, 4), rng.randint(1, 4)), k, A)
        assert all(two_way_speed(phi, n) == 1 for n in DIRECTIONS)
        done += 1


def test_one_way_speed_needs_unit_direction():
    with pytest.raises(PreconditionError):
        one_way_speed(HALF_X, (Scalar(1), Scalar(1), Scalar(0)))


@given(coords(), events())
def test_prime_round_trip(phi, p):
    assert from_prime(phi, to_prime(phi, p)) == p


@given(coords(), st.sampled_from(DIRECTIONS))
def test_lightcone_image_vanishes_on_light(phi, n):
    light = ORIGIN + null_vector(n, phi.c, 2)
    assert quadratic_value(lightcone_image(phi), to_prime(phi, light)) == 0


def test_causality_witness_for_half_x():
    witness = causality_witness(HALF_X)
    assert witness.v == (Scalar(-1), Scalar(0), Scalar(0))
    assert witness.exact_direction
    assert witness_violates(HALF_X, witness.v)
    p, q = witness.pair()
    assert (p, q) == (ORIGIN, Event(-1, 0, 0, 1))
    assert m_connectible(InertialCoords.identity(), p, q)
    assert not m_connectible(HALF_X, p, q)


def test_no_witness_for_standard_coords():
    phi = InertialCoords(2, A=cayley_matrix(1, 2, 3))
    assert causality_witness(phi) is None
    assert not witness_violates(phi, X_AXIS)


@pytest.mark.parametrize(
    "k",
    [(Fraction(1, 3), Fraction(1, 3), 0), (Fraction(1, 2), Fraction(1, 4), 0)],
)
def test_witness_off_axis(k):
    phi = InertialCoords(k=k, A=cayley_matrix(0, 1, 0))
    witness = causality_witness(phi)
    assert witness_violates(phi, witness.v)
    p, q = witness.pair()
    assert m_connectible(InertialCoords.identity(), p, q)
    assert not m_connectible(phi, p, q)


@given(coords(), events(), events())
def test_standard_coords_agree_with_minkowski(phi, p, q):
    standard = InertialCoords(phi.lam, A=phi.A, m=phi.m)
    assert m_connectible(standard, p, q) == m_connectible(InertialCoords.identity(phi.m), p, q)


def test_coords_validation():
    with pytest.raises(PreconditionError):
        InertialCoords(0)
    with pytest.raises(PreconditionError):
        InertialCoords(k=(1, 0, 0))
    with pytest.raises(PreconditionError):
        InertialCoords(A=Matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]]))
    with pytest.raises(PreconditionError):
        InertialCoords(k=(Fraction(1, 2), 0, 0), m=metric(2))


def test_parse_coords():
    phi = parse_coords("coords lambda=2 k=(1/2,0,0) A=cayley(0,0,1) c=1")
    assert phi.lam == 2 and phi.k == (Scalar(Fraction(1, 2)), Scalar(0), Scalar(0))
    assert phi.A == cayley_matrix(0, 0, 1)
    assert parse_coords("coords") == InertialCoords()


@pytest.mark.parametrize(
    "text",
    ["lambda=1", "coords speed=1", "coords A=rot(1,0,0)", "coords k=(1,0,0)", "coords lambda=0", "coords k=(1,0)"],
)
def test_parse_coords_errors(text):
    with pytest.raises(ParseError):
        parse_coords(text)
