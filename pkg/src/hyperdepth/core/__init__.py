"""Hypergraphs, forest recognition and combinatorial invariants."""

from .config import FieldSpec, HyperdepthConfig
from .errors import HyperdepthError
from .forest import GoodLeafOrder, NotAForest, good_leaf_order, is_hyperforest, is_hypertree
from .hypergraph import Hypergraph, Vertex, make_hypergraph
from .invariants import alpha2, epsilon

__all__ = [
    "FieldSpec",
    "HyperdepthConfig",
    "HyperdepthError",
    "GoodLeafOrder",
    "NotAForest",
    "good_leaf_order",
    "is_hyperforest",
    "is_hypertree",
    "Hypergraph",
    "Vertex",
    "make_hypergraph",
    "alpha2",
    "epsilon",
]
