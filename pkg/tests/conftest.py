"""Test configuration and fixtures."""

from typing import List

import pytest
from hypothesis import strategies as st

from hyperdepth.core.config import HyperdepthConfig
from hyperdepth.core.hypergraph import Hypergraph, make_hypergraph, minimalize, Vertex
from hyperdepth.fixtures import load_fixture


def path_graph(k: int) -> Hypergraph:
    names = [chr(ord("a") + i) for i in range(k)]
    return make_hypergraph(names, [[names[i], names[i + 1]] for i in range(k - 1)])


@pytest.fixture
def tree12_deep() -> Hypergraph:
    return load_fixture("tree12_deep")


@pytest.fixture
def tree12_flat() -> Hypergraph:
    return load_fixture("tree12_flat")


@pytest.fixture
def no_leaf_triangles() -> Hypergraph:
    return load_fixture("no_leaf_triangles")


@pytest.fixture
def small_hypertree() -> Hypergraph:
    return load_fixture("small_hypertree")


@pytest.fixture
def p4() -> Hypergraph:
    """Path a-b-c-d."""
    return path_graph(4)


@pytest.fixture
def test_config() -> HyperdepthConfig:
    """Create a test configuration."""
    return HyperdepthConfig(field="q", jobs=1, max_power=2)


@st.composite
def hypergraphs(draw, max_vertices: int = 6, max_edges: int = 5, max_edge_size: int = 3):
    """Random simple hypergraphs on x1..xn (non-minimal edges are dropped)."""
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    edge = st.frozensets(
        st.integers(min_value=0, max_value=n - 1), min_size=1, max_size=min(max_edge_size, n)
    )
    raw: List[frozenset] = draw(st.lists(edge, min_size=1, max_size=max_edges))
    vertices = [Vertex(i, f"x{i + 1}") for i in range(n)]
    return Hypergraph(tuple(vertices), minimalize(raw))
