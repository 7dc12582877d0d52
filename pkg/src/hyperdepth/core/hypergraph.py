"""Simple hypergraphs over a fixed ambient vertex list."""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Sequence, Set, Tuple, Union

import networkx as nx

from .errors import (
    DuplicateEdge,
    DuplicateVertex,
    EdgeContainment,
    EmptyEdge,
    UnknownEdge,
    UnknownVertex,
)

logger = logging.getLogger(__name__)

Edge = FrozenSet[int]
EdgeLike = Union[Iterable[int], Iterable[str]]
VertexLike = Union["Vertex", str, int]


@dataclass(frozen=True, order=True)
class Vertex:
    """A named vertex; ``index`` is its position in the ambient list."""

    index: int
    name: str = field(compare=False)

    def __str__(self) -> str:
        return self.name


def edge_key(edge: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:
    """Canonical sort key: size first, then the sorted index sequence."""
    items = tuple(sorted(edge))
    return len(items), items


def lex_key(edge: Iterable[int]) -> Tuple[int, ...]:
    return tuple(sorted(edge))


def minimalize(edges: Iterable[Iterable[int]]) -> Tuple[Edge, ...]:
    """Drop duplicate and non-minimal edges; returns canonical order.

    Internal helper for colon results; user input goes through
    :func:`make_hypergraph`, which rejects non-simple edge sets instead.
    """
    unique = sorted({frozenset(e) for e in edges}, key=edge_key)
    kept: List[Edge] = []
    for e in unique:
        if not any(k <= e for k in kept):
            kept.append(e)
    return tuple(kept)


@dataclass(frozen=True)
class Hypergraph:
    """Immutable simple hypergraph.

    Vertices form a fixed ambient list shared with the polynomial ring;
    removing edges never renumbers vertices, so hypergraph and ideal
    indices always agree.
    """

    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]

    @classmethod
    def from_indices(
        cls, vertices: Sequence[Vertex], edges: Iterable[Iterable[int]]
    ) -> "Hypergraph":
        """Build from index sets, minimalizing silently (internal use)."""
        return cls(tuple(vertices), minimalize(edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(v.name for v in self.vertices)

    @property
    def is_graph(self) -> bool:
        return all(len(e) <= 2 for e in self.edges)

    def index_of(self, name: str) -> int:
        for v in self.vertices:
            if v.name == name:
                return v.index
        raise UnknownVertex(f"Unknown vertex {name!r}")

    def resolve_vertex(self, v: VertexLike) -> int:
        if isinstance(v, Vertex):
            idx = v.index
        elif isinstance(v, str):
            return self.index_of(v)
        else:
            idx = int(v)
        if not 0 <= idx < self.n:
            raise UnknownVertex(f"Vertex index {idx} out of range")
        return idx

    def resolve_edge(self, e: EdgeLike) -> Edge:
        """Turn names or indices into an index set (not necessarily an edge)."""
        return frozenset(self.resolve_vertex(v) for v in e)

    def require_edge(self, e: EdgeLike) -> Edge:
        edge = self.resolve_edge(e)
        if edge not in self.edges:
            raise UnknownEdge(f"{self.format_edge(edge)} is not an edge")
        return edge

    def format_edge(self, e: Iterable[int]) -> str:
        return "{" + ",".join(self.vertices[i].name for i in sorted(e)) + "}"

    def edge_names(self) -> List[List[str]]:
        return [[self.vertices[i].name for i in sorted(e)] for e in self.edges]

    def active_support(self) -> FrozenSet[int]:
        """Vertices lying in at least one edge."""
        return frozenset().union(*self.edges) if self.edges else frozenset()

    def isolated_vertices(self) -> FrozenSet[int]:
        """Declared vertices in no edge; they are regular on R/I(G)."""
        return frozenset(range(self.n)) - self.active_support()

    def with_edges(self, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return Hypergraph.from_indices(self.vertices, edges)

    def __len__(self) -> int:
        return len(self.edges)


def make_hypergraph(
    vertex_names: Sequence[str], edges: Iterable[Iterable[str]]
) -> Hypergraph:
    """Validate and build a simple hypergraph from vertex and edge names."""
    names = list(vertex_names)
    seen: Set[str] = set()
    for name in names:
        if name in seen:
            raise DuplicateVertex(f"Vertex {name!r} declared twice")
        seen.add(name)
    vertices = tuple(Vertex(i, name) for i, name in enumerate(names))
    lookup = {name: i for i, name in enumerate(names)}

    resolved: List[Edge] = []
    for raw in edges:
        members = list(raw)
        if not members:
            raise EmptyEdge("Edges must be nonempty")
        for name in members:
            if name not in lookup:
                raise UnknownVertex(f"Edge mentions unknown vertex {name!r}")
        edge = frozenset(lookup[name] for name in members)
        if edge in resolved:
            raise DuplicateEdge(f"Edge {{{', '.join(sorted(members))}}} listed twice")
        resolved.append(edge)

    ordered = sorted(resolved, key=edge_key)
    for i, small in enumerate(ordered):
        for large in ordered[i + 1:]:
            if small < large:
                raise EdgeContainment(
                    [names[k] for k in sorted(small)], [names[k] for k in sorted(large)]
                )

    return Hypergraph(vertices, tuple(ordered))


def neighborhood(G: Hypergraph, v: VertexLike, closed: bool = False) -> FrozenSet[int]:
    """N_G(v): vertices other than v sharing an edge with v."""
    x = G.resolve_vertex(v)
    nbrs: Set[int] = set()
    for e in G.edges:
        if x in e:
            nbrs.update(e)
    nbrs.discard(x)
    if closed:
        nbrs.add(x)
    return frozenset(nbrs)


def incidence_graph(G: Hypergraph) -> nx.Graph:
    """Primal graph on the active support (clique per edge)."""
    graph = nx.Graph()
    graph.add_nodes_from(sorted(G.active_support()))
    for e in G.edges:
        members = sorted(e)
        graph.add_edges_from(zip(members, members[1:]))
    return graph


def connected_components(G: Hypergraph) -> List[Hypergraph]:
    """Edge-connected components, ordered by their least vertex.

    Isolated vertices belong to no component; see
    :meth:`Hypergraph.isolated_vertices`.
    """
    components = sorted(
        (frozenset(c) for c in nx.connected_components(incidence_graph(G))), key=min
    )
    return [
        Hypergraph(G.vertices, tuple(e for e in G.edges if e <= comp))
        for comp in components
    ]


def subcollection(G: Hypergraph, edge_subset: Iterable[EdgeLike]) -> Hypergraph:
    """Same ambient vertices, only the selected edges."""
    chosen = {G.require_edge(e) for e in edge_subset}
    return Hypergraph(G.vertices, tuple(e for e in G.edges if e in chosen))


def colon_hypergraph(H: Hypergraph, e: EdgeLike) -> Tuple[Hypergraph, FrozenSet[int]]:
    """Combinatorial side of I(H) : x^e = I(H') + (z | z in Z).

    Z collects the vertices z with h \\ e = {z} for some edge h. The
    remaining differences h \\ e are minimalized and those meeting Z are
    dropped. Edges contained in e leave nothing behind; when such an edge
    exists the monomial colon is the unit ideal.
    """
    target = H.resolve_edge(e)
    differences = [h - target for h in H.edges]
    Z = frozenset(next(iter(d)) for d in differences if len(d) == 1)
    remaining = [d for d in differences if len(d) >= 2 and not (d & Z)]
    Hprime = H.with_edges(remaining)
    logger.debug(
        "colon by %s: |Z|=%d, %d edges remain", H.format_edge(target), len(Z), len(Hprime)
    )
    return Hprime, Z
