# relsim/core/errors.py
"""Exception hierarchy shared by every relsim module."""


class RelsimError(Exception):
    """Base class for all errors raised by relsim."""


class ScalarDivisionError(RelsimError, ZeroDivisionError):
    """Division of a Scalar by zero."""


class PreconditionError(RelsimError, ValueError):
    """An operation was called with arguments outside its domain."""


class ParseError(RelsimError, ValueError):
    """Malformed text input (literal, event file, spec line)."""

    def __init__(self, message: str, source: str = "<string>", line: int | None = None):
        self.source = source
        self.line = line
        location = source if line is None else f"{source}:{line}"
        super().__init__(f"{location}: {message}")


class BaseMismatchError(RelsimError, ValueError):
    """Two partitions over different event sets were combined."""


class ClosureError(RelsimError):
    """An event set is not closed under a transformation (strict policy)."""

    def __init__(self, event_id: str, message: str | None = None):
        self.event_id = event_id
        super().__init__(message or f"event {event_id!r} leaves the event set")


class BoundExhaustedError(RelsimError):
    """A bounded search could not decide whether two events are related."""

    def __init__(self, first: str, second: str):
        self.pair = (first, second)
        super().__init__(f"undecided pair ({first}, {second}): search bound exhausted")


class InvariantViolation(RelsimError, AssertionError):
    """An internal invariant failed; signals a bug, not bad input."""
