"""Parsing helpers for parenthesised Scalar tuples such as "(3/4,0,0,5/4)"."""
from relsim.core.errors import ParseError
from relsim.modules.scalar import Scalar, parse_scalar
from .vectors import Event, Vec4


def parse_tuple(text: str, size: int, source: str = "<string>", line: int | None = None) -> tuple[Scalar, ...]:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ParseError(f"expected a parenthesised tuple, got {text!r}", source, line)
    parts = body[1:-1].split(",")
    if len(parts) != size:
        raise ParseError(f"expected {size} components, got {len(parts)} in {text!r}", source, line)
    return tuple(parse_scalar(p, source, line) for p in parts)


def parse_vec4(text: str, source: str = "<string>", line: int | None = None) -> Vec4:
    return Vec4(*parse_tuple(text, 4, source, line))


def parse_event(text: str, source: str = "<string>", line: int | None = None) -> Event:
    return Event(*parse_tuple(text, 4, source, line))


def parse_vec3(text: str, source: str = "<string>", line: int | None = None) -> tuple[Scalar, Scalar, Scalar]:
    return parse_tuple(text, 3, source, line)


def format_tuple(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"
