# relsim/modules/scalar/__init__.py
"""Exact arithmetic over Q(sqrt 2) and small exact matrices."""
from .field import (
    ONE,
    SQRT2,
    ZERO,
    Rational,
    Scalar,
    rational_sqrt,
    scalar_arith,
    scalar_is_rational,
    scalar_sign,
)
from .literals import as_scalar, format_scalar, parse_scalar, parse_scalar_list
from .matrix import Matrix

__all__ = [
    "ONE",
    "SQRT2",
    "ZERO",
    "Matrix",
    "Rational",
    "Scalar",
    "as_scalar",
    "format_scalar",
    "parse_scalar",
    "parse_scalar_list",
    "rational_sqrt",
    "scalar_arith",
    "scalar_is_rational",
    "scalar_sign",
]
