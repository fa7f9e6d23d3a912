from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from signedclust.core import build_graph

settings.register_profile(
    "default",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

K4_EDGES = [(0, 1, "-"), (0, 2, "+"), (0, 3, "+"), (1, 2, "+"), (1, 3, "+"), (2, 3, "-")]


@pytest.fixture
def k4():
    return build_graph(4, K4_EDGES)


@st.composite
def signed_graphs(draw, max_n=6, max_m=9):
    n = draw(st.integers(1, max_n))
    if n < 2:
        return build_graph(n, [])
    edge = st.tuples(
        st.integers(0, n - 1), st.integers(0, n - 1), st.sampled_from("+-")
    ).filter(lambda e: e[0] != e[1])
    return build_graph(n, draw(st.lists(edge, max_size=max_m)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
