import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from facering import corpus  # noqa: E402
from facering.complex import from_facets  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@st.composite
def complexes(draw, max_n=6, max_facet=4, max_facets=5, nonvoid=True):
    n = draw(st.integers(1, max_n))
    facet = st.lists(st.integers(1, n), min_size=1, max_size=min(max_facet, n), unique=True)
    facets = draw(st.lists(facet, min_size=1 if nonvoid else 0, max_size=max_facets))
    return from_facets(n, facets)


@st.composite
def pure_complexes(draw, max_n=6, max_dim=2, max_facets=5):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, min(max_dim + 1, n)))
    facet = st.lists(st.integers(1, n), min_size=k, max_size=k, unique=True)
    return from_facets(n, draw(st.lists(facet, min_size=1, max_size=max_facets)))


@pytest.fixture
def triangle():
    return from_facets(3, [[1, 2], [2, 3], [1, 3]])


@pytest.fixture
def bowtie():
    return from_facets(5, [[1, 2, 3], [1, 4, 5]])


@pytest.fixture
def two_triangles():
    return from_facets(6, [[1, 2, 3], [4, 5, 6]])


@pytest.fixture
def point():
    return from_facets(1, [[1]])


CORPUS = {e.name: e for e in corpus.entries()}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
