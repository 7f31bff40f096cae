"""
Text grammar for Scalar literals.

    R | R + R*r2 | R - R*r2      where R is [-]digits[/digits]

Whitespace is insignificant everywhere, so "3/4 - 1/2*r2" and
"3/4-1/2*r2" are the same literal. A bare "r2" or "-r2" is accepted as
shorthand for "0 + 1*r2" / "0 - 1*r2".
"""
import re
from fractions import Fraction

from relsim.core.errors import ParseError
from .field import Scalar, ScalarLike

_RATIONAL = r"-?\d+(?:/\d+)?"
_LITERAL = re.compile(rf"^({_RATIONAL})(?:([+-])({_RATIONAL})\*r2)?$")
_BARE_ROOT = re.compile(rf"^(-?)(?:({_RATIONAL})\*)?r2$")


def _rational(token: str, source: str, line: int | None) -> Fraction:
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {token!r}", source, line)
    return Fraction(int(num), int(den) if den else 1)


def parse_scalar(text: str, source: str = "<string>", line: int | None = None) -> Scalar:
    """Parse one Scalar literal; raises ParseError with the given location."""
    compact = "".join(text.split())
    match = _LITERAL.match(compact)
    if match:
        a = _rational(match.group(1), source, line)
        if match.group(2) is None:
            return Scalar(a)
        b = _rational(match.group(3), source, line)
        return Scalar(a, -b if match.group(2) == "-" else b)
    match = _BARE_ROOT.match(compact)
    if match:
        b = _rational(match.group(2), source, line) if match.group(2) else Fraction(1)
        return Scalar(0, -b if match.group(1) else b)
    raise ParseError(f"not a Scalar literal: {text!r}", source, line)


def parse_scalar_list(text: str, sep: str = ";", source: str = "<string>") -> list[Scalar]:
    """Parse a separator-delimited list such as "1/2; 1/3; 0 + 1*r2"."""
    parts = [p for p in text.split(sep) if p.strip()]
    return [parse_scalar(p, source) for p in parts]


def format_scalar(x: Scalar) -> str:
    return str(x)


def as_scalar(value: "ScalarLike | str") -> Scalar:
    """Coerce ints, Fractions, literals and Scalars to a Scalar."""
    if isinstance(value, str):
        return parse_scalar(value)
    return Scalar.coerce(value)
