# relsim/core/__init__.py
"""Core functionality and utilities."""
from .errors import (
    BaseMismatchError,
    BoundExhaustedError,
    ClosureError,
    InvariantViolation,
    ParseError,
    PreconditionError,
    RelsimError,
    ScalarDivisionError,
)

__all__ = [
    "BaseMismatchError",
    "BoundExhaustedError",
    "ClosureError",
    "InvariantViolation",
    "ParseError",
    "PreconditionError",
    "RelsimError",
    "ScalarDivisionError",
]
