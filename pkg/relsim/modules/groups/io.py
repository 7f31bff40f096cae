"""
Group-element files: 4 rows of the linear part, then the translation row,
each a line of 4 Scalar literals. ``#`` starts a comment.
"""
import re
from pathlib import Path

from relsim.core.errors import ParseError
from relsim.modules.scalar import Matrix, parse_scalar
from relsim.modules.spacetime import Vec4
from .affine import Affine4

# a literal is one token unless written with spaces around its +/- sign
_TOKEN = re.compile(r"-?\d+(?:/\d+)?(?:\s*[+-]\s*-?\d+(?:/\d+)?\s*\*\s*r2)?|-?(?:\d+(?:/\d+)?\s*\*\s*)?r2")


def scalar_tokens(text: str, source: str, line: int):
    """Split a whitespace-separated row of Scalar literals."""
    tokens = [m.group(0) for m in _TOKEN.finditer(text)]
    if "".join(tokens).replace(" ", "") != "".join(text.split()):
        raise ParseError(f"unreadable row {text.strip()!r}", source, line)
    return [parse_scalar(t, source, line) for t in tokens]


def content_lines(text: str):
    """(line number, stripped content) for non-blank, non-comment lines."""
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield number, body


def parse_group_element(text: str, source: str = "<string>") -> Affine4:
    rows = []
    for number, body in content_lines(text):
        values = scalar_tokens(body, source, number)
        if len(values) != 4:
            raise ParseError(f"expected 4 Scalars per row, got {len(values)}", source, number)
        rows.append(values)
        if len(rows) > 5:
            raise ParseError("more than 5 rows in group element", source, number)
    if len(rows) != 5:
        raise ParseError(f"group element needs 5 rows, got {len(rows)}", source)
    linear = Matrix(rows[:4])
    if not linear.det():
        raise ParseError("linear part is singular", source)
    return Affine4(linear, Vec4(*rows[4]), check=False)


def read_group_element(path: str | Path) -> Affine4:
    path = Path(path)
    return parse_group_element(path.read_text(encoding="utf-8"), str(path))


def format_group_element(g: Affine4) -> str:
    lines = [" ".join(str(x).replace(" ", "") for x in row) for row in g.linear.rows]
    lines.append(" ".join(str(x).replace(" ", "") for x in g.translation))
    return "\n".join(lines) + "\n"
