import os
from fractions import Fraction

import hypothesis
import numpy as np
import pytest
import structlog
from hypothesis import strategies as st

from relsim.modules.lattice import EventSet
from relsim.modules.scalar import Scalar
from relsim.modules.spacetime import Event
from relsim.modules.theorems import closed_events

np.seterr(all="warn")

hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "fast"))


@pytest.fixture(autouse=True)
def _reset_structlog():
    """cli.main binds structlog to the current (possibly capsys) stderr; undo it per test."""
    yield
    structlog.reset_defaults()

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero_fractions = small_fractions.filter(bool)


@st.composite
def scalars(draw, irrational: bool = True):
    b = draw(small_fractions) if irrational else Fraction(0)
    return Scalar(draw(small_fractions), b)


@st.composite
def nonzero_scalars(draw):
    return draw(scalars().filter(bool))


@st.composite
def events(draw):
    return Event(*(draw(small_fractions) for _ in range(4)))


@pytest.fixture(scope="session")
def small_orbit() -> EventSet:
    """Cube-rotation orbit of three seeds at times -1, 0, 1."""
    return closed_events(((0, 0, 0), (1, 0, 0), (1, 1, 0)), (-1, 0, 1), name="small-orbit")


@pytest.fixture
def line_events() -> EventSet:
    return EventSet(
        [
            ("a", Event(0, 0, 0, 0)),
            ("b", Event(1, 0, 0, 0)),
            ("c", Event(0, 0, 0, 1)),
            ("d", Event(1, 0, 0, 1)),
        ],
        name="line",
    )
