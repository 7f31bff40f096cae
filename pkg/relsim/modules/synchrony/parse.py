"""
Coordinate-system text form::

    coords lambda=<S> k=(<S>,<S>,<S>) A=cayley(<S>,<S>,<S>) c=<S>

``A=I`` is accepted for the identity rotation; omitted keys default to
lambda=1, k=(0,0,0), A=I, c=1.
"""
import re

from relsim.core.errors import ParseError, PreconditionError
from relsim.modules.groups import cayley_matrix
from relsim.modules.scalar import Matrix, parse_scalar
from relsim.modules.spacetime import MetricParams, parse_tuple, parse_vec3
from .coords import InertialCoords

_CAYLEY = re.compile(r"^cayley(\(.*\))$")


def parse_coords(text: str, source: str = "<string>") -> InertialCoords:
    tokens = text.split()
    if not tokens or tokens[0] != "coords":
        raise ParseError(f"coordinate spec must start with 'coords', got {text!r}", source)
    params: dict[str, str] = {}
    for token in tokens[1:]:
        key, eq, value = token.partition("=")
        if not eq or key not in ("lambda", "k", "A", "c"):
            raise ParseError(f"unexpected parameter {token!r}", source)
        params[key] = value
    lam = parse_scalar(params.get("lambda", "1"), source)
    k = parse_vec3(params.get("k", "(0,0,0)"), source)
    a_text = params.get("A", "I")
    if a_text == "I":
        A = Matrix.identity(3)
    else:
        match = _CAYLEY.match(a_text)
        if not match:
            raise ParseError(f"A must be I or cayley(p1,p2,p3), got {a_text!r}", source)
        A = cayley_matrix(*parse_tuple(match.group(1), 3, source))
    try:
        return InertialCoords(lam, k, A, MetricParams(parse_scalar(params.get("c", "1"), source)))
    except PreconditionError as exc:
        raise ParseError(str(exc), source) from None


def parse_direction(text: str, source: str = "<string>"):
    return parse_vec3(text, source)
