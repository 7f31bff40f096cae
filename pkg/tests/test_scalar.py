from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from relsim.core.errors import ParseError, PreconditionError, ScalarDivisionError
from relsim.modules.scalar import (
    ONE,
    SQRT2,
    ZERO,
    Matrix,
    Scalar,
    as_scalar,
    format_scalar,
    parse_scalar,
    parse_scalar_list,
    scalar_arith,
    scalar_is_rational,
    scalar_sign,
)

from .conftest import nonzero_scalars, scalars

mpmath.mp.dps = 50


def test_sqrt2_squares_to_two():
    assert SQRT2 * SQRT2 == 2
    assert (1 + SQRT2) * (SQRT2 - 1) == ONE


def test_inverse_of_unit():
    assert (1 + SQRT2).inverse() == Scalar(-1, 1)


def test_division_by_zero_raises():
    with pytest.raises(ScalarDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        SQRT2 / Scalar(0, 0)
    with pytest.raises(ScalarDivisionError):
        scalar_arith(ONE, ZERO, "div")


def test_sign_of_near_cancellation():
    # 99/70 approximates sqrt(2) from above
    assert (Scalar(Fraction(99, 70)) - SQRT2).sign() == 1
    assert (Scalar(Fraction(140, 99)) - SQRT2).sign() == -1
    assert Scalar(3, -2).sign() == 1  # 3 - 2.828...


@given(scalars())
def test_sign_matches_high_precision(x):
    value = mpmath.mpf(x.a.numerator) / x.a.denominator + mpmath.mpf(x.b.numerator) / x.b.denominator * mpmath.sqrt(2)
    expected = 0 if value == 0 else (1 if value > 0 else -1)
    assert x.sign() == expected


@given(scalars(), scalars(), scalars())
def test_field_laws(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(scalars(), nonzero_scalars())
def test_division_inverts_multiplication(x, y):
    assert (x / y) * y == x
    assert y * y.inverse() == ONE


@given(scalars(), scalars())
def test_order_is_total_and_compatible(x, y):
    assert (x < y) + (x == y) + (x > y) == 1
    assert (x < y) == (x + 1 < y + 1)


@given(scalars())
def test_norm_is_multiplicative_with_conjugate(x):
    assert x * x.conjugate() == Scalar(x.norm())


@given(scalars())
def test_sqrt_exact_of_squares(x):
    assert (x * x).sqrt_exact() == abs(x)


def test_sqrt_exact_leaves_field():
    assert Scalar(3).sqrt_exact() is None
    assert Scalar(2).sqrt_exact() == SQRT2
    assert Scalar(3, 2).sqrt_exact() == 1 + SQRT2
    assert Scalar(-1).sqrt_exact() is None


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3/4 - 1/2*r2", Scalar(Fraction(3, 4), Fraction(-1, 2))),
        ("3/4-1/2*r2", Scalar(Fraction(3, 4), Fraction(-1, 2))),
        ("-2", Scalar(-2)),
        ("0 + 1*r2", SQRT2),
        ("r2", SQRT2),
        ("-r2", -SQRT2),
        ("5/3", Scalar(Fraction(5, 3))),
    ],
)
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected
    assert as_scalar(text) == expected


@given(scalars())
def test_format_parses_back(x):
    assert parse_scalar(format_scalar(x)) == x


@pytest.mark.parametrize("text", ["", "1/0", "sqrt2", "1 + r2", "1/2/3", "abc"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ParseError):
        parse_scalar(text, source="arg")


def test_parse_error_carries_location():
    with pytest.raises(ParseError) as exc:
        parse_scalar("x", source="events.txt", line=7)
    assert exc.value.line == 7
    assert "events.txt:7" in str(exc.value)


def test_parse_scalar_list():
    assert parse_scalar_list("1/2; 1/3; 0 + 1*r2") == [Scalar(Fraction(1, 2)), Scalar(Fraction(1, 3)), SQRT2]


def test_matrix_inverse_and_det():
    M = Matrix([[2, 1], [1, SQRT2]])
    assert M @ M.inverse() == Matrix.identity(2)
    assert M.det() == 2 * SQRT2 - 1
    assert Matrix([[1, 2], [2, 4]]).rank() == 1
    assert Matrix([[1, 2], [2, 4]]).det() == ZERO


def test_matrix_solve():
    M = Matrix([[1, 1], [1, -1]])
    assert M.solve([3, 1]) == (Scalar(2), Scalar(1))
    with pytest.raises(ScalarDivisionError):
        Matrix([[1, 1], [1, 1]]).solve([1, 2])


def test_matrix_shape_mismatch():
    with pytest.raises(PreconditionError):
        Matrix([[1, 2]]) @ Matrix([[1, 2]])
    with pytest.raises(PreconditionError):
        Matrix([[1, 2], [3]])


@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_det_is_multiplicative(entries):
    A = Matrix([entries[0:3], entries[3:6], entries[6:9]])
    B = Matrix([[1, SQRT2, 0], [0, 1, 1], [1, 0, 2]])
    assert (A @ B).det() == A.det() * B.det()


def test_functional_sign_and_rationality():
    assert scalar_sign(Scalar(Fraction(-3, 2), 1)) == -1
    assert scalar_sign(ZERO) == 0
    assert scalar_is_rational(Scalar(Fraction(7, 3)))
    assert not scalar_is_rational(SQRT2)
