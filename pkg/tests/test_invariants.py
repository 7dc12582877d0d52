"""Tests for edgewise domination and star packing."""

from itertools import combinations

import pytest
from hypothesis import given, settings

from hyperdepth.core.errors import UnknownEdge
from hyperdepth.core.hypergraph import Hypergraph, Vertex, make_hypergraph
from hyperdepth.core.invariants import (
    Star,
    StarPacking,
    alpha2,
    epsilon,
    find_stars,
    is_edgewise_dominant,
    max_two_packing,
    minimal_transversals,
)
from hyperdepth.utils.generators import GenConfig, random_forest

from tests.conftest import hypergraphs


def brute_epsilon(G: Hypergraph) -> int:
    for k in range(len(G.edges) + 1):
        for F in combinations(G.edges, k):
            if is_edgewise_dominant(G, F):
                return k
    raise AssertionError("E_G itself should dominate")


def brute_alpha2(G: Hypergraph) -> int:
    stars = [
        (b0, s) for b0 in sorted(G.active_support()) for s in find_stars(G, b0)
    ]
    best = 0

    def grow(i, used, count):
        nonlocal best
        best = max(best, count)
        for j in range(i, len(stars)):
            b0, s = stars[j]
            if not s & used:
                grow(j + 1, used | s, count + 1)

    grow(0, frozenset(), 0)
    return best


def test_twelve_vertex_tree_values(tree12_deep, tree12_flat):
    """Test epsilon and alpha2 on the two 12-vertex trees."""
    assert epsilon(tree12_deep)[0] == 2
    assert epsilon(tree12_flat)[0] == 3
    assert alpha2(tree12_flat)[0] == 3

    value, packing = alpha2(tree12_deep)
    assert value == 4
    assert packing.is_valid()


def test_deep_tree_star_centers(tree12_deep):
    """Test the centers x1, x5, x7, x9 give a packing."""
    stars = tuple(
        Star(tree12_deep.index_of(c), frozenset(find_stars(tree12_deep, c)[0]))
        for c in ["x1", "x5", "x7", "x9"]
    )
    assert StarPacking(tree12_deep, stars).is_valid()


def test_path_values(p4):
    """Test the path a-b-c-d."""
    assert is_edgewise_dominant(p4, [["b", "c"]])
    assert not is_edgewise_dominant(p4, [["a", "b"]])
    assert epsilon(p4)[0] == 1

    value, packing = alpha2(p4)
    assert value == 2
    assert packing.center_names() == ["a", "d"]


def test_dominance_requires_edges(p4):
    """Test edges outside G are rejected."""
    with pytest.raises(UnknownEdge):
        is_edgewise_dominant(p4, [["a", "c"]])


def test_find_stars_hypergraph():
    """Test minimal star supports are transversals of the edges through the center."""
    G = make_hypergraph(["a", "b", "c", "d", "e"], [["a", "b", "c"], ["a", "d", "e"]])
    supports = find_stars(G, "a")

    expected = [{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4}]
    assert sorted(sorted(s) for s in supports) == sorted(sorted(s) for s in expected)


def test_find_stars_graph_is_closed_neighborhood(tree12_deep):
    """Test for graphs the only star is N[b0]."""
    assert find_stars(tree12_deep, "x1") == [frozenset({0, 1})]
    assert find_stars(tree12_deep, "x3") == [frozenset({1, 2, 3, 4, 5})]


def test_find_stars_degenerate():
    """Test isolated and singleton-edge centers."""
    G = make_hypergraph(["a", "b", "w"], [["a"], ["b"]])

    assert find_stars(G, "w") == [frozenset({2})]
    assert find_stars(G, "a") == []


def test_minimal_transversals():
    """Test Berge's method on a small family."""
    family = [frozenset({1, 2}), frozenset({2, 3})]

    assert minimal_transversals(family) == [frozenset({1, 3}), frozenset({2})]


def test_singleton_edges_need_no_domination():
    """Test vertices forming singleton edges are covered for free."""
    G = make_hypergraph(["a", "b"], [["a"], ["b"]])

    assert epsilon(G)[0] == 0


def test_disjoint_edge_adds_one():
    """Test adding a disjoint edge raises both invariants by one."""
    for seed in range(10):
        G = random_forest(GenConfig(n=7, edges=5, seed=seed, connected=True))
        vertices = G.vertices + (Vertex(G.n, "u"), Vertex(G.n + 1, "v"))
        H = Hypergraph.from_indices(vertices, list(G.edges) + [{G.n, G.n + 1}])

        assert epsilon(H)[0] == epsilon(G)[0] + 1
        assert alpha2(H)[0] == alpha2(G)[0] + 1


@settings(max_examples=80, deadline=None)
@given(hypergraphs(max_vertices=8, max_edges=6, max_edge_size=3))
def test_search_matches_brute_force(G):
    """Test branch and bound against exhaustive enumeration, with sound witnesses."""
    value, witness = epsilon(G)
    assert value == brute_epsilon(G)
    assert is_edgewise_dominant(G, witness.edges)

    value, packing = alpha2(G)
    assert value == brute_alpha2(G)
    assert packing.is_valid()


@pytest.mark.parametrize("seed", range(15))
def test_alpha2_is_two_packing_on_graphs(seed):
    """Test alpha2 equals the largest center set at pairwise distance >= 3."""
    G = random_forest(GenConfig(n=9, edges=7, seed=seed))

    assert alpha2(G)[0] == max_two_packing(G)
