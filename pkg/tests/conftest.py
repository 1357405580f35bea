from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from tourpaths.core import Tournament

GOLDEN = Path(__file__).parent / "golden"

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def tournaments(draw, min_order=2, max_order=9):
    p = draw(st.integers(min_order, max_order))
    rows = [0] * p
    for i in range(p):
        for j in range(i + 1, p):
            if draw(st.booleans()):
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
    return Tournament(p, tuple(rows))


def all_tournaments(p):
    pairs = [(i, j) for i in range(p) for j in range(i + 1, p)]
    for code in range(1 << len(pairs)):
        rows = [0] * p
        for b, (i, j) in enumerate(pairs):
            if code >> b & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
        yield Tournament(p, tuple(rows))


@pytest.fixture
def golden():
    return GOLDEN


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
