"""Finite, indexed sets of distinct events."""
from typing import Iterable, Iterator, Sequence

from relsim.core.errors import PreconditionError
from relsim.modules.spacetime import Event


class EventSet:
    """
    Ordered list of (id, event) pairs.

    Ids are unique tokens and the events are pairwise distinct points, so an
    event can be looked up by position as well as by id.
    """

    __slots__ = ("ids", "events", "_by_id", "_by_event", "name")

    def __init__(self, items: Iterable[tuple[str, Event]], name: str = "events"):
        ids, events = [], []
        by_id: dict[str, int] = {}
        by_event: dict[Event, int] = {}
        for ident, event in items:
            if not ident or any(c.isspace() for c in ident):
                raise PreconditionError(f"event id {ident!r} must be a non-empty token")
            if ident in by_id:
                raise PreconditionError(f"duplicate event id {ident!r}")
            if event in by_event:
                raise PreconditionError(
                    f"events {ids[by_event[event]]!r} and {ident!r} are the same point {event}"
                )
            by_id[ident] = len(ids)
            by_event[event] = len(ids)
            ids.append(ident)
            events.append(event)
        self.ids: tuple[str, ...] = tuple(ids)
        self.events: tuple[Event, ...] = tuple(events)
        self._by_id = by_id
        self._by_event = by_event
        self.name = name

    @classmethod
    def from_events(cls, events: Sequence[Event], prefix: str = "e", name: str = "events") -> "EventSet":
        """Number the events e0, e1, ... in the given order."""
        return cls(((f"{prefix}{i}", e) for i, e in enumerate(events)), name=name)

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self) -> Iterator[tuple[str, Event]]:
        return iter(zip(self.ids, self.events))

    def __contains__(self, event: Event) -> bool:
        return event in self._by_event

    def __eq__(self, other) -> bool:
        if not isinstance(other, EventSet):
            return NotImplemented
        return self.ids == other.ids and self.events == other.events

    def __hash__(self) -> int:
        return hash((self.ids, self.events))

    def index_of(self, event: Event) -> int | None:
        return self._by_event.get(event)

    def index_of_id(self, ident: str) -> int:
        try:
            return self._by_id[ident]
        except KeyError:
            raise PreconditionError(f"unknown event id {ident!r} in {self.name}") from None

    def event(self, ident: str) -> Event:
        return self.events[self.index_of_id(ident)]
