"""Tests for the seeded random generators."""

import pytest

from hyperdepth.core.errors import InvalidConfig
from hyperdepth.core.forest import brute_force_is_forest, is_hyperforest
from hyperdepth.core.hypergraph import connected_components
from hyperdepth.utils.generators import (
    GenConfig,
    random_forest,
    random_hyperforest,
    random_hypertree,
)
from hyperdepth.verify.bounds import is_forest_graph


def test_config_defaults():
    """Test default generator parameters."""
    config = GenConfig()

    assert config.n == 10
    assert config.edges == 5
    assert config.max_edge_size == 3
    assert config.connected is False


def test_config_validation():
    """Test invalid parameters become InvalidConfig."""
    with pytest.raises(InvalidConfig):
        GenConfig.of(n=1)
    with pytest.raises(InvalidConfig):
        GenConfig.of(edges=0)
    with pytest.raises(InvalidConfig):
        GenConfig.of(max_edge_size=1)
    with pytest.raises(InvalidConfig):
        GenConfig.of(seed=-1)
    assert GenConfig.of(n=4, edges=2).edges == 2


@pytest.mark.parametrize("generator", [random_forest, random_hyperforest, random_hypertree])
def test_same_seed_same_output(generator):
    """Test generation is deterministic in the seed."""
    config = GenConfig(n=24, edges=6, seed=42)

    assert generator(config) == generator(config)


def test_different_seeds_differ():
    """Test a handful of seeds do not all give the same forest."""
    outputs = {random_forest(GenConfig(n=12, edges=8, seed=s)).edges for s in range(5)}

    assert len(outputs) > 1


@pytest.mark.parametrize("seed", range(10))
def test_random_forest(seed):
    """Test forests have the requested size and are forest graphs."""
    G = random_forest(GenConfig(n=10, edges=6, seed=seed))

    assert G.n == 10
    assert len(G.edges) == 6
    assert is_forest_graph(G)


@pytest.mark.parametrize("seed", range(10))
def test_random_tree(seed):
    """Test connected forests declare only the tree vertices."""
    G = random_forest(GenConfig(n=20, edges=7, seed=seed, connected=True))

    assert G.n == 8
    assert len(connected_components(G)) == 1
    assert is_forest_graph(G)


def test_forest_edge_limit():
    """Test asking for too many edges fails."""
    with pytest.raises(InvalidConfig):
        random_forest(GenConfig(n=4, edges=4))


@pytest.mark.parametrize("seed", range(30))
def test_random_hyperforest_is_recognised(seed):
    """Test generated hyperforests pass recognition and the exhaustive oracle."""
    G = random_hyperforest(GenConfig(n=30, edges=6, max_edge_size=4, seed=seed))

    assert len(G.edges) == 6
    assert all(2 <= len(e) <= 4 for e in G.edges)
    assert is_hyperforest(G)
    assert brute_force_is_forest(G)


@pytest.mark.parametrize("seed", range(10))
def test_random_hypertree_is_connected(seed):
    """Test hypertrees have a single component."""
    G = random_hypertree(GenConfig(n=15, edges=5, seed=seed))

    assert len(connected_components(G)) == 1
    assert is_hyperforest(G)


def test_hyperforest_budget_exhausted():
    """Test a vertex budget too small for the edges fails."""
    with pytest.raises(InvalidConfig):
        random_hyperforest(GenConfig(n=3, edges=5))
