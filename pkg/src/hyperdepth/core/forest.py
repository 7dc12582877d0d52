"""Leaves, good leaves and simplicial forest recognition."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple, Union

from .errors import CapExceeded
from .hypergraph import Edge, EdgeLike, Hypergraph, connected_components, lex_key

logger = logging.getLogger(__name__)

DEFAULT_BRUTE_FORCE_CAP = 12


def _is_leaf(edges: Tuple[Edge, ...], e: Edge) -> bool:
    others = [h for h in edges if h != e]
    if not others:
        return True
    cuts = [e & h for h in others]
    return any(all(c <= e & g for c in cuts) for g in others)


def is_chain(sets: List[Edge]) -> bool:
    ordered = sorted(set(sets), key=len)
    return all(a <= b for a, b in zip(ordered, ordered[1:]))


def _is_good_leaf(edges: Tuple[Edge, ...], e: Edge) -> bool:
    return is_chain([e & h for h in edges])


def is_leaf(G: Hypergraph, e: EdgeLike) -> bool:
    """True iff e is the only edge or some joint edge g absorbs every e & h."""
    return _is_leaf(G.edges, G.require_edge(e))


def is_good_leaf(G: Hypergraph, e: EdgeLike) -> bool:
    """True iff the intersections of e with all edges form a chain."""
    return _is_good_leaf(G.edges, G.require_edge(e))


def good_leaves(G: Hypergraph) -> List[Edge]:
    """All good leaves of G in lexicographic order."""
    return sorted((e for e in G.edges if _is_good_leaf(G.edges, e)), key=lex_key)


@dataclass(frozen=True)
class GoodLeafOrder:
    """Edges e_1..e_m with e_i a good leaf of {e_i, ..., e_m}."""

    graph: Hypergraph
    order: Tuple[Edge, ...]

    def is_valid(self) -> bool:
        """Replay the elimination against the residual subcollections."""
        residual = tuple(self.order)
        if set(residual) != set(self.graph.edges) or len(residual) != len(self.graph.edges):
            return False
        for i, e in enumerate(self.order):
            if not _is_good_leaf(residual[i:], e):
                return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": "forest",
            "order": [[self.graph.vertices[i].name for i in sorted(e)] for e in self.order],
        }


@dataclass(frozen=True)
class NotAForest:
    """Greedy elimination got stuck; ``stuck`` has no good leaf."""

    graph: Hypergraph
    stuck: Hypergraph
    removed: Tuple[Edge, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": "not_forest",
            "eliminated": [[self.graph.vertices[i].name for i in sorted(e)] for e in self.removed],
            "stuck": self.stuck.edge_names(),
        }


def good_leaf_order(G: Hypergraph) -> Union[GoodLeafOrder, NotAForest]:
    """Greedily strip lexicographically least good leaves.

    Good leaves stay good in every subcollection containing them, so the
    choice among available good leaves never matters for the verdict.
    """
    remaining = list(G.edges)
    order: List[Edge] = []
    while remaining:
        current = tuple(remaining)
        leaf = min(
            (e for e in current if _is_good_leaf(current, e)), key=lex_key, default=None
        )
        if leaf is None:
            logger.debug("no good leaf among %d remaining edges", len(current))
            return NotAForest(G, G.with_edges(current), tuple(order))
        order.append(leaf)
        remaining.remove(leaf)
    return GoodLeafOrder(G, tuple(order))


def is_hyperforest(G: Hypergraph) -> bool:
    return isinstance(good_leaf_order(G), GoodLeafOrder)


def is_hypertree(G: Hypergraph) -> bool:
    return is_hyperforest(G) and len(connected_components(G)) == 1


def brute_force_is_forest(G: Hypergraph, cap: Optional[int] = None) -> bool:
    """Literal definition: every nonempty subcollection has a leaf."""
    cap = DEFAULT_BRUTE_FORCE_CAP if cap is None else cap
    if len(G.edges) > cap:
        raise CapExceeded(f"{len(G.edges)} edges exceed the brute-force cap of {cap}")
    for size in range(1, len(G.edges) + 1):
        for sub in combinations(G.edges, size):
            if not any(_is_leaf(sub, e) for e in sub):
                return False
    return True
