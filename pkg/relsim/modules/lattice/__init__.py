# relsim/modules/lattice/__init__.py
"""The lattice E(X) of equivalence relations on finite event sets."""
from .action import (
    ClosureResult,
    Policy,
    image_map,
    induced,
    invariance_witness,
    invariant_closure,
    is_invariant,
    orbit_closure,
)
from .events import EventSet
from .io import format_blocks, format_events, parse_events, parse_relation, read_events, read_relation
from .partition import FinitePartition, bottom, finer_than, join, meet, top
from .union_find import UnionFind

__all__ = [
    "ClosureResult",
    "EventSet",
    "FinitePartition",
    "Policy",
    "UnionFind",
    "bottom",
    "finer_than",
    "format_blocks",
    "format_events",
    "image_map",
    "induced",
    "invariance_witness",
    "invariant_closure",
    "is_invariant",
    "join",
    "meet",
    "orbit_closure",
    "parse_events",
    "parse_relation",
    "read_events",
    "read_relation",
    "top",
]
