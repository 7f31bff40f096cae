import random

import pytest
from hypothesis import given, strategies as st

from relsim.core.errors import BaseMismatchError, ClosureError, ParseError, PreconditionError
from relsim.modules.groups import cube_rotations, rotation_cayley, time_inversion, translation
from relsim.modules.lattice import (
    EventSet,
    FinitePartition,
    Policy,
    UnionFind,
    bottom,
    finer_than,
    format_blocks,
    format_events,
    induced,
    invariance_witness,
    invariant_closure,
    is_invariant,
    join,
    meet,
    orbit_closure,
    parse_events,
    parse_relation,
    top,
)
from relsim.modules.spacetime import E1, E4, ORIGIN, Event
from relsim.modules.theorems.lattice import random_partition

SIZE = 12
X = EventSet.from_events([Event(i, 0, 0, 0) for i in range(SIZE)])


@st.composite
def partitions(draw):
    labels = draw(st.lists(st.integers(0, 4), min_size=SIZE, max_size=SIZE))
    blocks: dict[int, list[int]] = {}
    for i, label in enumerate(labels):
        blocks.setdefault(label, []).append(i)
    return FinitePartition.from_blocks(X, blocks.values())


def test_union_find_labels_are_canonical():
    a, b = UnionFind(5), UnionFind(5)
    a.union(4, 3)
    a.union(3, 1)
    b.union(1, 3)
    b.union(1, 4)
    assert a.canonical_labels() == b.canonical_labels() == [0, 1, 2, 1, 1]
    assert not a.union(1, 4)


@given(partitions(), partitions())
def test_meet_and_join_commute(r1, r2):
    assert meet(r1, r2) == meet(r2, r1)
    assert join(r1, r2) == join(r2, r1)


@given(partitions(), partitions(), partitions())
def test_meet_and_join_associate(r1, r2, r3):
    assert (r1 & r2) & r3 == r1 & (r2 & r3)
    assert (r1 | r2) | r3 == r1 | (r2 | r3)


@given(partitions(), partitions())
def test_absorption(r1, r2):
    assert r1 & (r1 | r2) == r1
    assert r1 | (r1 & r2) == r1


@given(partitions(), partitions(), partitions())
def test_bounds_characterize_meet_and_join(r1, r2, r3):
    m, j = meet(r1, r2), join(r1, r2)
    assert m <= r1 and m <= r2 and r1 <= j and r2 <= j
    if r3 <= r1 and r3 <= r2:
        assert r3 <= m
    if r1 <= r3 and r2 <= r3:
        assert j <= r3


@given(partitions())
def test_bottom_and_top(r):
    assert bottom(X) <= r <= top(X)
    assert r & top(X) == r
    assert r | bottom(X) == r


def test_join_is_transitive_closure():
    r1 = FinitePartition.from_pairs(X, [(0, 1)])
    r2 = FinitePartition.from_pairs(X, [(1, 2)])
    assert join(r1, r2).related(0, 2)
    assert not (r1 | r2).related(0, 3)
    assert meet(r1, r2).is_bottom()
    assert finer_than(r1, r1 | r2)
    assert not finer_than(r1 | r2, r1)


def test_base_mismatch():
    Y = EventSet.from_events([Event(0, 0, 0, 1)], name="other")
    with pytest.raises(BaseMismatchError):
        meet(bottom(X), bottom(Y))


def test_event_set_rejects_duplicates():
    with pytest.raises(PreconditionError):
        EventSet([("a", ORIGIN), ("a", Event(1, 0, 0, 0))])
    with pytest.raises(PreconditionError):
        EventSet([("a", ORIGIN), ("b", ORIGIN)])
    with pytest.raises(PreconditionError):
        X.index_of_id("nope")


def test_induced_action_under_rotation(small_orbit):
    quarter = rotation_cayley(0, 0, 1)
    R = FinitePartition.from_pairs(small_orbit, [(0, 1)])
    image = induced(quarter, R)
    a, b = (small_orbit.index_of(quarter.apply(small_orbit.events[i])) for i in (0, 1))
    assert image.related(a, b)
    assert induced(quarter.invert(), image) == R


@pytest.mark.slow
def test_lattice_laws_on_orbit(small_orbit):
    rng = random.Random(0)
    rotations = cube_rotations()
    for _ in range(1000):
        r1, r2, r3 = (random_partition(rng, small_orbit) for _ in range(3))
        g = rng.choice(rotations)
        assert induced(g, r1 | r2) == induced(g, r1) | induced(g, r2)
        assert induced(g, r1 & r2) == induced(g, r1) & induced(g, r2)
        assert (r1 & r2) & r3 == r1 & (r2 & r3)
        assert r1 & (r1 | r2) == r1


def test_strict_policy_raises_on_escape():
    R = bottom(X)
    with pytest.raises(ClosureError) as exc:
        induced(translation(E1), R)
    assert exc.value.event_id == X.ids[-1]


def test_partial_policy_drops_escaping_events():
    R = FinitePartition.from_pairs(X, [(0, 1)])
    image = induced(translation(E1), R, Policy.PARTIAL)
    assert image.related(1, 2)
    assert not image.related(0, 1)


def test_invariance_witness():
    R = FinitePartition.from_pairs(X, [(0, 1)])
    assert invariance_witness(R, translation(E1), Policy.PARTIAL) is not None
    even = FinitePartition.from_blocks(X, [range(0, SIZE, 2), range(1, SIZE, 2)])
    assert invariance_witness(even, translation(E1 * 2), Policy.PARTIAL) is None
    assert is_invariant(top(X), translation(E1), Policy.PARTIAL)


def test_invariant_closure_is_least(small_orbit):
    gens = [rotation_cayley(0, 0, 1), rotation_cayley(1, 0, 0)]
    R = FinitePartition.from_pairs(small_orbit, [(0, 5)])
    result = invariant_closure(R, gens)
    assert result.converged
    assert R <= result.partition
    assert all(is_invariant(result.partition, g) for g in gens)
    # any invariant coarsening of R contains the closure
    coarser = invariant_closure(FinitePartition.from_pairs(small_orbit, [(0, 5), (1, 2)]), gens).partition
    assert result.partition <= coarser


def test_invariant_closure_reports_non_convergence(small_orbit):
    gens = [rotation_cayley(0, 0, 1)]
    R = FinitePartition.from_pairs(small_orbit, [(1, 2)])
    result = invariant_closure(R, gens, max_rounds=1)
    assert result.rounds == 1


def test_orbit_closure():
    events = orbit_closure([Event(1, 0, 0, 1)], [rotation_cayley(0, 0, 1), time_inversion()])
    assert len(events) == 8
    with pytest.raises(ClosureError):
        orbit_closure([ORIGIN], [translation(E4)], max_size=10)


def test_event_and_relation_files():
    text = "# comment\na 0 0 0 0\nb 1 0 0 0  # trailing\nc 0 0 0 1/2\nd 1-1*r2 0 0 0\n"
    Y = parse_events(text, "ev.txt")
    assert Y.ids == ("a", "b", "c", "d")
    assert parse_events(format_events(Y)) == Y
    R = parse_relation("a b\nb c\n", Y)
    assert format_blocks(R) == "a b c\nd\n"


@pytest.mark.parametrize(
    "text, line",
    [
        ("a 0 0 0\n", 1),
        ("a 0 0 0 0\na 1 0 0 0\n", 2),
        ("a 0 0 0 0\nb 0 0 0 0\n", 2),
        ("a 0 0 0 0\n\nb 0 0 x 0\n", 3),
    ],
)
def test_event_file_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_events(text, "ev.txt")
    assert exc.value.line == line


def test_relation_file_errors():
    Y = parse_events("a 0 0 0 0\nb 1 0 0 0\n")
    with pytest.raises(ParseError):
        parse_relation("a z\n", Y)
    with pytest.raises(ParseError):
        parse_relation("a b c\n", Y)
