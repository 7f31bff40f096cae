"""
Event files and relation files.

Event file: one event per line, ``id x1 x2 x3 x4`` with Scalar literals.
Relation file: lines ``id1 id2`` declaring related pairs over an event
file; the reflexive, symmetric and transitive closure is implied.
``#`` starts a comment in both.
"""
from pathlib import Path

from relsim.core.errors import ParseError, PreconditionError
from relsim.modules.groups.io import content_lines, scalar_tokens
from relsim.modules.spacetime import Event
from .events import EventSet
from .partition import FinitePartition


def parse_events(text: str, source: str = "<string>") -> EventSet:
    items = []
    seen_ids: dict[str, int] = {}
    seen_events: dict[Event, str] = {}
    for number, body in content_lines(text):
        ident, *rest = body.split(None, 1)
        rest = rest[0] if rest else ""
        values = scalar_tokens(rest, source, number)
        if len(values) != 4:
            raise ParseError(f"event {ident!r} needs 4 coordinates, got {len(values)}", source, number)
        if ident in seen_ids:
            raise ParseError(f"duplicate event id {ident!r} (first on line {seen_ids[ident]})", source, number)
        event = Event(*values)
        if event in seen_events:
            raise ParseError(f"event {ident!r} repeats the point of {seen_events[event]!r}", source, number)
        seen_ids[ident] = number
        seen_events[event] = ident
        items.append((ident, event))
    return EventSet(items, name=source)


def read_events(path: str | Path) -> EventSet:
    path = Path(path)
    return parse_events(path.read_text(encoding="utf-8"), str(path))


def format_events(X: EventSet) -> str:
    return "".join(
        f"{ident} " + " ".join(str(x).replace(" ", "") for x in event) + "\n"
        for ident, event in X
    )


def parse_relation(text: str, X: EventSet, source: str = "<string>") -> FinitePartition:
    pairs = []
    for number, body in content_lines(text):
        parts = body.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'id1 id2', got {body!r}", source, number)
        try:
            pairs.append((X.index_of_id(parts[0]), X.index_of_id(parts[1])))
        except PreconditionError as exc:
            raise ParseError(str(exc), source, number) from None
    return FinitePartition.from_pairs(X, pairs)


def read_relation(path: str | Path, X: EventSet) -> FinitePartition:
    path = Path(path)
    return parse_relation(path.read_text(encoding="utf-8"), X, str(path))


def format_blocks(R: FinitePartition) -> str:
    return "".join(" ".join(block) + "\n" for block in R.id_blocks())
