"""Seeded random forests and hyperforests."""

import logging
from random import Random
from typing import List, Set

from pydantic import BaseModel, Field, ValidationError, field_validator

from ..core.errors import InvalidConfig
from ..core.forest import is_chain
from ..core.hypergraph import Edge, Hypergraph, Vertex

logger = logging.getLogger(__name__)


class GenConfig(BaseModel):
    """Parameters for the random generators."""

    n: int = Field(default=10, description="Vertex budget")
    edges: int = Field(default=5, description="Number of edges to generate")
    max_edge_size: int = Field(default=3, description="Largest edge size (hyperforests)")
    seed: int = Field(default=0, description="RNG seed")
    connected: bool = Field(default=False, description="Grow a single tree")

    @field_validator("n")
    @classmethod
    def validate_n(cls, v):
        if v < 2:
            raise ValueError("vertex budget must be at least 2")
        return v

    @field_validator("edges")
    @classmethod
    def validate_edges(cls, v):
        if v < 1:
            raise ValueError("edge count must be at least 1")
        return v

    @field_validator("max_edge_size")
    @classmethod
    def validate_max_edge_size(cls, v):
        if v < 2:
            raise ValueError("max edge size must be at least 2")
        return v

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, v):
        if not 0 <= v < 2**64:
            raise ValueError("seed must fit in 64 bits")
        return v

    @classmethod
    def of(cls, **kwargs) -> "GenConfig":
        """Construct, turning pydantic validation failures into InvalidConfig."""
        try:
            return cls(**kwargs)
        except ValidationError as e:
            raise InvalidConfig(str(e)) from e


def _vertices(k: int) -> List[Vertex]:
    return [Vertex(i, f"x{i + 1}") for i in range(k)]


def random_forest(config: GenConfig) -> Hypergraph:
    """Random forest graph with ``config.edges`` edges.

    Vertices are attached one at a time to a random earlier vertex. When
    connected, only the ``edges + 1`` tree vertices are declared;
    otherwise all ``n`` are, and a random spanning tree is thinned to the
    requested edge count.
    """
    if config.edges > config.n - 1:
        raise InvalidConfig(f"A forest on {config.n} vertices has at most {config.n - 1} edges")
    rng = Random(config.seed)
    k = config.edges + 1 if config.connected else config.n
    order = list(range(k))
    rng.shuffle(order)
    tree = [frozenset((order[i], order[rng.randrange(i)])) for i in range(1, k)]
    edges = tree if config.connected else rng.sample(tree, config.edges)
    return Hypergraph.from_indices(_vertices(k), edges)


def _attachment(rng: Random, host: Edge, edges: List[Edge], limit: int) -> Edge:
    """Part of ``host`` to share with a new edge so that it is a good leaf."""
    members = sorted(host)
    size = rng.randint(1, min(len(members) - 1, limit))
    candidate = frozenset(rng.sample(members, size))
    if is_chain([candidate & h for h in edges]):
        return candidate
    return frozenset([rng.choice(members)])


def random_hyperforest(config: GenConfig) -> Hypergraph:
    """Grow a hyperforest by adding good leaves.

    Each new edge either starts a new component (only when not
    ``connected``) or meets the current hypergraph inside a proper part
    of one existing edge, chosen so that its intersections with all edges
    form a chain. The new edge is then a good leaf, so the result is a
    hyperforest. Only vertices that were used are declared.
    """
    rng = Random(config.seed)
    edges: List[Edge] = []
    used = 0

    def fresh(count: int) -> Set[int]:
        nonlocal used
        out = set(range(used, used + count))
        used += count
        return out

    for _ in range(config.edges):
        budget = config.n - used
        attach = bool(edges) and (config.connected or rng.random() < 0.7)
        if budget < 1 or (not attach and budget < 2):
            raise InvalidConfig(
                f"Vertex budget {config.n} too small for {config.edges} edges"
            )
        if attach:
            size = rng.randint(2, config.max_edge_size)
            host = rng.choice(edges)
            shared = _attachment(rng, host, edges, size - 1)
            new_vertices = min(size - len(shared), budget)
            edge = frozenset(shared) | fresh(new_vertices)
        else:
            size = rng.randint(2, min(config.max_edge_size, budget))
            edge = frozenset(fresh(size))
        edges.append(edge)

    logger.debug("grew %d edges on %d vertices (seed %d)", len(edges), used, config.seed)
    return Hypergraph.from_indices(_vertices(used), edges)


def random_hypertree(config: GenConfig) -> Hypergraph:
    return random_hyperforest(config.model_copy(update={"connected": True}))
