"""Depth lower bounds from edgewise domination and star packing.

For a hyperforest G with an edge of size at least two,
depth R/I(G)^s >= max(epsilon(G) - s + 1, 1); for a forest graph the same
holds with the star packing number. The mixed form
depth R/(I(H) + I(T)^s) >= max(inv(G) - s + 1, 0) is what the inductive
certificates in :mod:`hyperdepth.verify.certificate` decompose.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

import networkx as nx

from ..algebra.betti import depth_function, depth_or_dimension
from ..algebra.monomial import MonomialIdeal, edge_ideal, ideal_sum, power, variable_ideal
from ..core.config import FieldSpec
from ..core.errors import (
    ConnectivityViolated,
    InvalidPartition,
    NoBigEdge,
    NotAForestGraph,
    NotAHyperforest,
)
from ..core.forest import is_hyperforest
from ..core.hypergraph import (
    Edge,
    EdgeLike,
    Hypergraph,
    connected_components,
    edge_key,
    incidence_graph,
)
from ..core.invariants import alpha2, epsilon

logger = logging.getLogger(__name__)

Invariant = Callable[[Hypergraph], int]
InvariantKind = Union[str, Invariant]

INVARIANTS: Dict[str, Invariant] = {
    "epsilon": lambda G: epsilon(G)[0],
    "alpha2": lambda G: alpha2(G)[0],
}


def resolve_invariant(kind: InvariantKind) -> Tuple[str, Invariant]:
    """Name and callable for ``epsilon``, ``alpha2`` or a custom callable."""
    if callable(kind):
        return getattr(kind, "__name__", "custom"), kind
    if kind not in INVARIANTS:
        raise ValueError(f"Unknown invariant {kind!r} (use 'epsilon' or 'alpha2')")
    return kind, INVARIANTS[kind]


def _ordered(edges: Iterable[Edge]) -> Tuple[Edge, ...]:
    return tuple(sorted(edges, key=edge_key))


@dataclass(frozen=True)
class MixedIdealInstance:
    """The ideal I(H) + I(T)^s + (x_k | k in killed) for a split G = H + T.

    ``killed`` collects variables set to zero by earlier colon steps; they
    lie outside every edge of G.
    """

    graph: Hypergraph
    H: Tuple[Edge, ...]
    T: Tuple[Edge, ...]
    s: int
    killed: FrozenSet[int] = frozenset()

    @classmethod
    def build(
        cls,
        graph: Hypergraph,
        H: Iterable[EdgeLike],
        T: Iterable[EdgeLike],
        s: int,
        killed: Iterable[int] = (),
    ) -> "MixedIdealInstance":
        h_edges = [graph.resolve_edge(e) for e in H]
        t_edges = [graph.resolve_edge(e) for e in T]
        instance = cls(graph, _ordered(h_edges), _ordered(t_edges), s, frozenset(killed))
        instance.validate()
        return instance

    @classmethod
    def from_split(
        cls, graph: Hypergraph, H: Iterable[EdgeLike] = (), s: int = 1
    ) -> "MixedIdealInstance":
        """T is every edge of G not listed in H."""
        h_edges = {graph.require_edge(e) for e in H}
        return cls.build(graph, h_edges, [e for e in graph.edges if e not in h_edges], s)

    def validate(self) -> None:
        if self.s < 1:
            raise InvalidPartition(f"Power must be positive, got {self.s}")
        h, t = set(self.H), set(self.T)
        if len(h) != len(self.H) or len(t) != len(self.T):
            raise InvalidPartition("H and T must not repeat edges")
        if h & t:
            raise InvalidPartition("H and T share an edge")
        if h | t != set(self.graph.edges):
            raise InvalidPartition("H and T must together give exactly the edges of G")
        if self.killed & self.graph.active_support():
            raise InvalidPartition("Killed variables must lie outside every edge")

    @property
    def h_graph(self) -> Hypergraph:
        return Hypergraph(self.graph.vertices, self.H)

    @property
    def t_graph(self) -> Hypergraph:
        return Hypergraph(self.graph.vertices, self.T)

    def free_vertices(self) -> FrozenSet[int]:
        """Variables in no edge and not killed; each is regular on the quotient."""
        return self.graph.isolated_vertices() - self.killed

    def ideal(self) -> MonomialIdeal:
        J = edge_ideal(self.h_graph)
        if self.T:
            J = ideal_sum(J, power(edge_ideal(self.t_graph), self.s))
        if self.killed:
            J = ideal_sum(J, variable_ideal(self.graph.names, self.killed))
        return J

    def bound(self, value: int) -> int:
        return max(value - self.s + 1, 0) + len(self.free_vertices())

    def key(self) -> Tuple[Any, ...]:
        return self.H, self.T, self.s, self.killed

    def to_dict(self) -> Dict[str, Any]:
        names = self.graph.vertices
        return {
            "H_edges": [[names[i].name for i in sorted(e)] for e in self.H],
            "T_edges": [[names[i].name for i in sorted(e)] for e in self.T],
            "s": self.s,
            "killed": [names[i].name for i in sorted(self.killed)],
        }


@dataclass
class BoundRow:
    s: int
    depth: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.depth >= self.bound

    def to_dict(self) -> Dict[str, Any]:
        return {"s": self.s, "depth": self.depth, "bound": self.bound, "holds": self.holds}


@dataclass
class BoundReport:
    """Per-power comparison of depth R/I^s with max(value - s + 1, floor)."""

    invariant: str
    value: int
    floor: int
    field: FieldSpec
    rows: List[BoundRow] = field(default_factory=list)
    probe_violations: Optional[List[str]] = None

    @property
    def all_hold(self) -> bool:
        return all(row.holds for row in self.rows)

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "invariant": self.invariant,
            "value": self.value,
            "floor": self.floor,
            "field": str(self.field),
            "rows": [row.to_dict() for row in self.rows],
            "all_hold": self.all_hold,
        }
        if self.probe_violations is not None:
            data["probe_violations"] = self.probe_violations
        return data


@dataclass
class MixedReport:
    instance: MixedIdealInstance
    invariant: str
    value: int
    depth: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.depth >= self.bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            **self.instance.to_dict(),
            "invariant": self.invariant,
            "value": self.value,
            "depth": self.depth,
            "bound": self.bound,
            "holds": self.holds,
        }


def is_forest_graph(G: Hypergraph) -> bool:
    return G.is_graph and nx.is_forest(incidence_graph(G))


def _bound_report(
    G: Hypergraph, name: str, value: int, floor: int, s_max: int, field: FieldSpec, jobs: int
) -> BoundReport:
    depths = depth_function(edge_ideal(G), s_max, field, jobs)
    rows = [BoundRow(s, d, max(value - s + 1, floor)) for s, d in depths.rows()]
    report = BoundReport(name, value, floor, field, rows)
    for row in rows:
        if not row.holds:
            logger.warning("%s bound fails at s=%d: depth %d < %d", name, row.s, row.depth, row.bound)
    return report


def verify_epsilon_bound(
    G: Hypergraph, s_max: int, field: Optional[FieldSpec] = None, jobs: int = 1
) -> BoundReport:
    """depth R/I(G)^s >= max(epsilon(G) - s + 1, 1) for s = 1..s_max."""
    if not is_hyperforest(G):
        raise NotAHyperforest("The epsilon bound needs a hyperforest")
    if not any(len(e) >= 2 for e in G.edges):
        raise NoBigEdge("The epsilon bound needs an edge with at least two vertices")
    value, _ = epsilon(G)
    return _bound_report(G, "epsilon", value, 1, s_max, field or FieldSpec.rationals(), jobs)


def verify_alpha2_bound(
    G: Hypergraph, s_max: int, field: Optional[FieldSpec] = None, jobs: int = 1
) -> BoundReport:
    """depth R/I(G)^s >= max(alpha2(G) - s + 1, 1) for a forest graph."""
    if not is_forest_graph(G) or not any(len(e) == 2 for e in G.edges):
        raise NotAForestGraph("The star packing bound needs a forest with at least one edge")
    value, _ = alpha2(G)
    return _bound_report(G, "alpha2", value, 1, s_max, field or FieldSpec.rationals(), jobs)


def check_alpha2_hypotheses(instance: MixedIdealInstance) -> None:
    """Forest graph, and T restricted to each component of G is connected."""
    G = instance.graph
    if not is_forest_graph(G):
        raise NotAForestGraph("Star packing mode needs a forest graph")
    t_set = set(instance.T)
    for component in connected_components(G):
        inside = [e for e in component.edges if e in t_set]
        if inside and len(connected_components(G.with_edges(inside))) != 1:
            raise ConnectivityViolated(
                f"T is disconnected inside the component containing {G.format_edge(component.active_support())}"
            )


def verify_mixed(
    instance: MixedIdealInstance,
    kind: InvariantKind = "epsilon",
    field: Optional[FieldSpec] = None,
    jobs: int = 1,
) -> MixedReport:
    """depth R/(I(H) + I(T)^s) against max(inv(G) - s + 1, 0)."""
    instance.validate()
    name, invariant = resolve_invariant(kind)
    if name == "alpha2":
        check_alpha2_hypotheses(instance)
    value = invariant(instance.graph)
    depth = depth_or_dimension(instance.ideal(), field, jobs)
    report = MixedReport(instance, name, value, depth, instance.bound(value))
    logger.info("mixed instance s=%d: depth %d, bound %d", instance.s, depth, report.bound)
    return report


def verify_generic_invariant(
    G: Hypergraph,
    invariant: Invariant,
    s_max: int,
    field: Optional[FieldSpec] = None,
    jobs: int = 1,
) -> BoundReport:
    """depth R/I^s >= max(inv(G) - s + 1, 0), plus a probe of the inductive hypothesis.

    The probe builds a certificate for H = {}, T = G at s_max and lists
    the nodes where inv(G') + 1 + |W| >= inv(G) fails; such failures void
    the conclusion for this invariant rather than indicate a bug. It is
    skipped (``None``) when G is not a hyperforest.
    """
    from .certificate import build_certificate

    field = field or FieldSpec.rationals()
    name, fn = resolve_invariant(invariant)
    if G.edges:
        report = _bound_report(G, name, fn(G), 0, s_max, field, jobs)
    else:
        report = BoundReport(name, fn(G), 0, field)
    if G.edges and is_hyperforest(G):
        certificate = build_certificate(
            MixedIdealInstance.from_split(G, (), s_max), fn, field, jobs=jobs
        )
        report.probe_violations = [
            path for path, node in certificate.walk() if node.inequality_ok is False
        ]
    return report
