"""Edgewise domination number and star packing number, with witnesses.

Both searches are exact branch-and-bound over vertex bitmasks. Vertices
declared but lying in no edge are ignored: they never need dominating and
never center a star (they are regular elements on R/I(G) instead).
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .hypergraph import (
    Edge,
    EdgeLike,
    Hypergraph,
    VertexLike,
    incidence_graph,
    lex_key,
    neighborhood,
)

logger = logging.getLogger(__name__)


def _mask(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def _bits(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class DominatingEdgeSet:
    graph: Hypergraph
    edges: Tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def names(self) -> List[List[str]]:
        return [[self.graph.vertices[i].name for i in sorted(e)] for e in self.edges]


@dataclass(frozen=True)
class Star:
    """Center plus neighbors meeting every edge through the center."""

    center: int
    support: FrozenSet[int]

    def is_valid(self, G: Hypergraph) -> bool:
        if self.center not in self.support:
            return False
        if not (self.support - {self.center}) <= neighborhood(G, self.center):
            return False
        rest = self.support - {self.center}
        return all(rest & (e - {self.center}) for e in G.edges if self.center in e)


@dataclass(frozen=True)
class StarPacking:
    graph: Hypergraph
    stars: Tuple[Star, ...]

    def __len__(self) -> int:
        return len(self.stars)

    @property
    def centers(self) -> List[int]:
        return [s.center for s in self.stars]

    def center_names(self) -> List[str]:
        return [self.graph.vertices[c].name for c in self.centers]

    def is_valid(self) -> bool:
        used = 0
        for star in self.stars:
            m = _mask(star.support)
            if used & m or not star.is_valid(self.graph):
                return False
            used |= m
        return True

    def to_dict(self) -> Dict[str, Any]:
        names = self.graph.vertices
        return {
            "centers": self.center_names(),
            "supports": [[names[i].name for i in sorted(s.support)] for s in self.stars],
        }


def _cover_masks(G: Hypergraph) -> Tuple[int, List[int]]:
    """Universe of vertices needing domination and what each edge covers."""
    singletons = {next(iter(e)) for e in G.edges if len(e) == 1}
    universe = _mask(v for v in G.active_support() if v not in singletons)
    nbr = {v: _mask(neighborhood(G, v)) for v in G.active_support()}
    covers = []
    for f in G.edges:
        fm = _mask(f)
        covers.append(_mask(v for v in _bits(universe) if nbr[v] & fm))
    return universe, covers


def is_edgewise_dominant(G: Hypergraph, F: Iterable[EdgeLike]) -> bool:
    """Every active vertex is a singleton edge or has a neighbor in some edge of F."""
    chosen = {G.require_edge(f) for f in F}
    universe, covers = _cover_masks(G)
    covered = 0
    for f, c in zip(G.edges, covers):
        if f in chosen:
            covered |= c
    return universe & ~covered == 0


def epsilon(G: Hypergraph) -> Tuple[int, DominatingEdgeSet]:
    """Exact edgewise domination number via set-cover branch and bound."""
    universe, covers = _cover_masks(G)
    if universe == 0:
        return 0, DominatingEdgeSet(G, ())

    order = sorted(
        range(len(covers)), key=lambda i: (-_popcount(covers[i]), lex_key(G.edges[i]))
    )
    best: List[int] = list(order)
    visited = 0

    def dfs(covered: int, chosen: List[int]) -> None:
        nonlocal best, visited
        visited += 1
        remaining = universe & ~covered
        if not remaining:
            if len(chosen) < len(best):
                best = chosen.copy()
            return
        maxcov = max(_popcount(covers[i] & remaining) for i in order)
        if len(chosen) + math.ceil(_popcount(remaining) / maxcov) >= len(best):
            return
        # branch on the uncovered vertex with the fewest covering edges
        elem = min(
            _bits(remaining),
            key=lambda v: (sum(1 for i in order if covers[i] >> v & 1), v),
        )
        candidates = [i for i in order if covers[i] >> elem & 1]
        candidates.sort(key=lambda i: -_popcount(covers[i] & remaining))
        for i in candidates:
            if len(chosen) + 1 >= len(best):
                break
            chosen.append(i)
            dfs(covered | covers[i], chosen)
            chosen.pop()

    dfs(0, [])
    logger.debug("epsilon search visited %d nodes", visited)
    witness = tuple(sorted((G.edges[i] for i in best), key=lex_key))
    return len(witness), DominatingEdgeSet(G, witness)


def minimal_transversals(family: Sequence[FrozenSet[int]]) -> List[FrozenSet[int]]:
    """Inclusion-minimal hitting sets of a set family (Berge's method)."""
    transversals: List[FrozenSet[int]] = [frozenset()]
    for block in family:
        grown = set()
        for t in transversals:
            if t & block:
                grown.add(t)
            else:
                grown.update(t | {x} for x in block)
        ordered = sorted(grown, key=lambda s: (len(s), sorted(s)))
        transversals = []
        for t in ordered:
            if not any(k <= t for k in transversals):
                transversals.append(t)
    return sorted(transversals, key=lambda s: sorted(s))


def find_stars(G: Hypergraph, b0: VertexLike) -> List[FrozenSet[int]]:
    """All inclusion-minimal star supports centered at b0."""
    center = G.resolve_vertex(b0)
    family = [e - {center} for e in G.edges if center in e]
    if any(not block for block in family):
        return []  # {b0} is itself an edge; nothing can hit it
    return [t | {center} for t in minimal_transversals(family)]


def alpha2(G: Hypergraph) -> Tuple[int, StarPacking]:
    """Exact star packing number: most vertex-disjoint stars.

    Maximality of the packing is not imposed; any disjoint family extends
    to a maximal one, so the optimum is the same.
    """
    active = sorted(G.active_support())
    candidates: Dict[int, List[Tuple[int, int]]] = {v: [] for v in active}
    min_size = None
    for b0 in active:
        for support in find_stars(G, b0):
            m = _mask(support)
            min_size = len(support) if min_size is None else min(min_size, len(support))
            for v in support:
                candidates[v].append((b0, m))
    if min_size is None:
        return 0, StarPacking(G, ())

    best: List[Tuple[int, int]] = []
    visited = 0

    def search(pos: int, blocked: int, chosen: List[Tuple[int, int]]) -> None:
        nonlocal best, visited
        visited += 1
        while pos < len(active) and blocked >> active[pos] & 1:
            pos += 1
        if pos == len(active):
            if len(chosen) > len(best):
                best = chosen.copy()
            return
        free = sum(1 for v in active[pos:] if not blocked >> v & 1)
        if len(chosen) + free // min_size <= len(best):
            return
        u = active[pos]
        for center, m in candidates[u]:
            if not m & blocked:
                chosen.append((center, m))
                search(pos + 1, blocked | m, chosen)
                chosen.pop()
        # u stays uncovered
        search(pos + 1, blocked | 1 << u, chosen)

    search(0, 0, [])
    logger.debug("alpha2 search visited %d nodes", visited)
    stars = tuple(
        Star(center, frozenset(_bits(m))) for center, m in sorted(best)
    )
    return len(stars), StarPacking(G, stars)


def max_two_packing(G: Hypergraph) -> Optional[int]:
    """Graph-only reference: largest center set at pairwise distance >= 3."""
    if not G.is_graph:
        return None
    graph = incidence_graph(G)
    dist = dict(nx.all_pairs_shortest_path_length(graph, cutoff=2))
    nodes = sorted(graph.nodes)
    best = 0

    def grow(i: int, chosen: List[int]) -> None:
        nonlocal best
        best = max(best, len(chosen))
        if len(chosen) + len(nodes) - i <= best:
            return
        for j in range(i, len(nodes)):
            v = nodes[j]
            if all(v not in dist[c] for c in chosen):
                chosen.append(v)
                grow(j + 1, chosen)
                chosen.pop()

    grow(0, [])
    return best
