from fractions import Fraction

import pytest
from hypothesis import given

from relsim.core.errors import ParseError, PreconditionError
from relsim.modules.scalar import SQRT2
from relsim.modules.spacetime import (
    E1,
    E4,
    ORIGIN,
    CausalClass,
    Classical,
    Event,
    Minkowski,
    Vec4,
    causal_class,
    causal_order,
    causally_connectible,
    lorentz_form,
    metric,
    parse_event,
    parse_vec4,
    require_future_timelike,
    standard_sim,
)

from .conftest import events


def test_affine_typing():
    p, q = Event(1, 2, 3, 4), Event(0, 0, 0, 1)
    assert isinstance(p - q, Vec4)
    assert q + (p - q) == p
    with pytest.raises(TypeError):
        p + q


def test_lorentz_form_with_scale():
    m = metric(2)
    assert lorentz_form(E4, E4, m) == -4
    assert lorentz_form(Vec4(1, 0, 0, 1), Vec4(1, 0, 0, 1)) == 0


@pytest.mark.parametrize(
    "v, expected",
    [
        (Vec4(0, 0, 0, 0), CausalClass.ZERO),
        (Vec4(1, 0, 0, 0), CausalClass.SPACELIKE),
        (Vec4(1, 0, 0, 1), CausalClass.NULL_FUTURE),
        (Vec4(0, 1, 0, -1), CausalClass.NULL_PAST),
        (Vec4(0, 0, 0, 1), CausalClass.TIMELIKE_FUTURE),
        (Vec4(1, 0, 0, -2), CausalClass.TIMELIKE_PAST),
        (Vec4(1, 1, 0, SQRT2), CausalClass.NULL_FUTURE),
    ],
)
def test_causal_class(v, expected):
    assert causal_class(v) is expected


def test_causal_class_depends_on_metric():
    v = Vec4(1, 0, 0, 1)
    assert causal_class(v, metric(2)) is CausalClass.TIMELIKE_FUTURE
    assert causal_class(v, metric(1)) is CausalClass.NULL_FUTURE


@given(events(), events())
def test_causal_order_antisymmetric(p, q):
    if causal_order(p, q) and causal_order(q, p):
        assert p == q


@given(events(), events(), events())
def test_causal_order_transitive(p, q, r):
    if causal_order(p, q) and causal_order(q, r):
        assert causal_order(p, r)


def test_connectibility_kinds():
    p = Event(1, 0, 0, 1)
    assert causally_connectible(ORIGIN, p, Minkowski())
    assert not causally_connectible(ORIGIN, Event(2, 0, 0, 1), Minkowski())
    assert causally_connectible(ORIGIN, Event(100, 0, 0, 1), Classical())
    assert not causally_connectible(ORIGIN, Event(1, 0, 0, 0), Classical())
    assert not causally_connectible(p, p, Minkowski())


def test_standard_sim():
    assert standard_sim(E4, ORIGIN, Event(5, 3, 1, 0))
    assert not standard_sim(E4, ORIGIN, Event(0, 0, 0, 1))
    with pytest.raises(PreconditionError):
        standard_sim(E1, ORIGIN, ORIGIN)


def test_require_future_timelike():
    require_future_timelike(Vec4(3, 0, 0, 5))
    with pytest.raises(PreconditionError):
        require_future_timelike(-E4)
    with pytest.raises(PreconditionError):
        metric(0)


def test_parse_tuples():
    assert parse_vec4("(3/4,0,0,5/4)") == Vec4(3, 0, 0, 5) * Fraction(1, 4)
    assert parse_event("( 1 , 0 + 1*r2 , 0 , 0 )") == Event(1, SQRT2, 0, 0)
    with pytest.raises(ParseError):
        parse_vec4("(1,2,3)")
