"""Tests for hypergraph construction and the combinatorial colon."""

import pytest

from hyperdepth.core.errors import (
    DuplicateEdge,
    DuplicateVertex,
    EdgeContainment,
    EmptyEdge,
    UnknownEdge,
    UnknownVertex,
)
from hyperdepth.core.hypergraph import (
    colon_hypergraph,
    connected_components,
    make_hypergraph,
    minimalize,
    neighborhood,
    subcollection,
)


def test_make_hypergraph_orders_edges():
    """Test edges are stored smallest first, then lexicographically."""
    G = make_hypergraph(["a", "b", "c", "d"], [["b", "c", "d"], ["b", "a"]])

    assert G.edge_names() == [["a", "b"], ["b", "c", "d"]]
    assert G.n == 4
    assert not G.is_graph


def test_validation_errors():
    """Test each kind of malformed input is rejected."""
    with pytest.raises(DuplicateVertex):
        make_hypergraph(["a", "a"], [])
    with pytest.raises(EmptyEdge):
        make_hypergraph(["a"], [[]])
    with pytest.raises(UnknownVertex):
        make_hypergraph(["a"], [["a", "z"]])
    with pytest.raises(DuplicateEdge):
        make_hypergraph(["a", "b"], [["a", "b"], ["b", "a"]])
    with pytest.raises(EdgeContainment, match="is contained in"):
        make_hypergraph(["x", "y"], [["x", "y"], ["x"]])


def test_edge_containment_carries_pair():
    """Test the containment error names both edges."""
    with pytest.raises(EdgeContainment) as info:
        make_hypergraph(["a", "b", "c"], [["a", "b", "c"], ["b", "c"]])

    assert info.value.smaller == ("b", "c")
    assert info.value.larger == ("a", "b", "c")


def test_active_and_isolated(p4):
    """Test declared vertices outside every edge are isolated."""
    G = make_hypergraph(["a", "b", "w"], [["a", "b"]])

    assert G.active_support() == frozenset({0, 1})
    assert G.isolated_vertices() == frozenset({2})
    assert p4.isolated_vertices() == frozenset()


def test_neighborhood(p4):
    """Test open and closed neighborhoods."""
    assert neighborhood(p4, "b") == frozenset({0, 2})
    assert neighborhood(p4, "a", closed=True) == frozenset({0, 1})


def test_require_edge(p4):
    """Test unknown edges are reported."""
    assert p4.require_edge(["c", "b"]) == frozenset({1, 2})
    with pytest.raises(UnknownEdge):
        p4.require_edge(["a", "c"])


def test_subcollection_keeps_vertices(p4):
    """Test subcollections keep the ambient vertex list."""
    sub = subcollection(p4, [["a", "b"]])

    assert sub.n == 4
    assert sub.edge_names() == [["a", "b"]]


def test_connected_components(small_hypertree):
    """Test component splitting ignores isolated vertices."""
    G = make_hypergraph(["a", "b", "c", "d", "e"], [["a", "b"], ["c", "d"]])

    assert [c.edge_names() for c in connected_components(G)] == [[["a", "b"]], [["c", "d"]]]
    assert len(connected_components(small_hypertree)) == 1


def test_minimalize():
    """Test duplicates and supersets are dropped."""
    edges = minimalize([{1, 2}, {2, 1}, {1, 2, 3}, {4}])

    assert edges == (frozenset({4}), frozenset({1, 2}))


def test_colon_hypergraph_singleton_difference():
    """Test {ab, bz} : ab kills z and leaves no edges."""
    G = make_hypergraph(["a", "b", "z"], [["a", "b"], ["b", "z"]])
    Hprime, Z = colon_hypergraph(G, ["a", "b"])

    assert Z == frozenset({2})
    assert Hprime.edges == ()


def test_colon_hypergraph_drops_edges_meeting_z():
    """Test differences meeting Z are dropped and the rest minimalized."""
    G = make_hypergraph(
        ["a", "b", "c", "d", "e", "f"],
        [["a", "b"], ["b", "c"], ["a", "c", "d"], ["a", "e", "f"]],
    )
    Hprime, Z = colon_hypergraph(G, ["a", "b"])

    assert Z == frozenset({2})
    assert Hprime.edge_names() == [["e", "f"]]
