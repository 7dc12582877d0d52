"""Machine-checkable certificates for the inductive depth bound.

A node holds a mixed instance (H, T, s). Unless it is a base case
(T has no edges, or s = 1) a good leaf e of T splits it along

    0 -> R/(J : x^e)(-deg e) -> R/J -> R/(J + (x^e)) -> 0

into a colon child (H', T', s - 1) with the variables Z killed, and a sum
child (H + e, T - e, s). The node records inv(G'), |W| and whether
inv(G') + 1 + |W| >= inv(G); base cases record a depth computed by the
engine together with the bound it must meet.
"""

import json
import logging
from dataclasses import dataclass, field
from random import Random
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Tuple

from ..algebra.betti import depth_or_dimension
from ..algebra.monomial import MonomialIdeal, colon, ideal_sum, mono
from ..core.config import FieldSpec
from ..core.errors import CertificateRejected, GoodLeafMissing
from ..core.forest import good_leaves, is_good_leaf
from ..core.hypergraph import Edge, Hypergraph, colon_hypergraph, edge_key
from .bounds import (
    Invariant,
    InvariantKind,
    MixedIdealInstance,
    check_alpha2_hypotheses,
    resolve_invariant,
)

logger = logging.getLogger(__name__)


@dataclass
class CertificateNode:
    instance: MixedIdealInstance
    inv_G: int
    bound: int
    leaf: Optional[Edge] = None
    Z: FrozenSet[int] = frozenset()
    W_size: int = 0
    inv_Gprime: Optional[int] = None
    inequality_ok: Optional[bool] = None
    depth: Optional[int] = None
    children: List["CertificateNode"] = field(default_factory=list)

    @property
    def is_base(self) -> bool:
        return not self.children

    @property
    def bound_ok(self) -> Optional[bool]:
        return None if self.depth is None else self.depth >= self.bound

    def to_dict(self) -> Dict[str, Any]:
        names = self.instance.graph.vertices
        data = self.instance.to_dict()
        data.update(
            {
                "leaf": None if self.leaf is None else [names[i].name for i in sorted(self.leaf)],
                "Z": [names[i].name for i in sorted(self.Z)],
                "W_size": self.W_size,
                "inv_G": self.inv_G,
                "inv_Gprime": self.inv_Gprime,
                "inequality_ok": self.inequality_ok,
                "bound": self.bound,
                "children": [child.to_dict() for child in self.children],
            }
        )
        if self.is_base:
            data["depth"] = self.depth
            data["bound_ok"] = self.bound_ok
        return data

    @classmethod
    def from_dict(cls, graph: Hypergraph, data: Dict[str, Any]) -> "CertificateNode":
        """Rebuild a node; ``graph`` supplies the ambient vertex list."""
        h_edges = [graph.resolve_edge(e) for e in data["H_edges"]]
        t_edges = [graph.resolve_edge(e) for e in data["T_edges"]]
        node_graph = Hypergraph(graph.vertices, tuple(sorted(set(h_edges + t_edges), key=edge_key)))
        instance = MixedIdealInstance.build(
            node_graph,
            h_edges,
            t_edges,
            data["s"],
            (graph.index_of(v) for v in data.get("killed", [])),
        )
        leaf = data.get("leaf")
        return cls(
            instance=instance,
            inv_G=data["inv_G"],
            bound=data["bound"],
            leaf=None if leaf is None else graph.resolve_edge(leaf),
            Z=frozenset(graph.index_of(v) for v in data.get("Z", [])),
            W_size=data.get("W_size", 0),
            inv_Gprime=data.get("inv_Gprime"),
            inequality_ok=data.get("inequality_ok"),
            depth=data.get("depth"),
            children=[cls.from_dict(graph, c) for c in data.get("children", [])],
        )


@dataclass
class Certificate:
    root: CertificateNode
    invariant: str
    field: FieldSpec

    def walk(self) -> Iterator[Tuple[str, CertificateNode]]:
        """Depth-first (path, node) pairs; paths look like ``root/colon/sum``."""
        stack = [("root", self.root)]
        while stack:
            path, node = stack.pop()
            yield path, node
            for label, child in reversed(list(zip(("colon", "sum"), node.children))):
                stack.append((f"{path}/{label}", child))

    def __len__(self) -> int:
        return sum(1 for _ in self.walk())

    @property
    def all_hold(self) -> bool:
        return all(
            node.inequality_ok is not False and node.bound_ok is not False
            for _, node in self.walk()
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "invariant": self.invariant,
            "field": str(self.field),
            "vertices": list(self.root.instance.graph.names),
            "nodes": len(self),
            "all_hold": self.all_hold,
            "root": self.root.to_dict(),
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, graph: Hypergraph, data: Dict[str, Any]) -> "Certificate":
        return cls(
            root=CertificateNode.from_dict(graph, data["root"]),
            invariant=data["invariant"],
            field=FieldSpec.parse(data.get("field", "q")),
        )


def colon_step(
    instance: MixedIdealInstance, e: Edge
) -> Tuple[MixedIdealInstance, FrozenSet[int], FrozenSet[int]]:
    """Colon child of ``instance`` by the good leaf e, with Z and W.

    T' keeps the edges of T that avoid Z and contain no edge of H'; the
    dropped ones only contribute generators already in I(H') + (Z).
    """
    Hprime, Z = colon_hypergraph(instance.h_graph, e)
    t_prime = [
        t for t in instance.T if not t & Z and not any(h <= t for h in Hprime.edges)
    ]
    G = instance.graph
    Gprime = G.with_edges(list(Hprime.edges) + t_prime)
    child = MixedIdealInstance.build(
        Gprime, Hprime.edges, t_prime, instance.s - 1, instance.killed | Z
    )
    W = G.active_support() - Gprime.active_support() - Z
    return child, Z, W


def sum_step(instance: MixedIdealInstance, e: Edge) -> MixedIdealInstance:
    return MixedIdealInstance.build(
        instance.graph,
        instance.H + (e,),
        [t for t in instance.T if t != e],
        instance.s,
        instance.killed,
    )


def _check_decomposition(
    instance: MixedIdealInstance,
    e: Edge,
    colon_child: MixedIdealInstance,
    sum_child: MixedIdealInstance,
    path: str,
) -> None:
    J = instance.ideal()
    m = mono(instance.graph, e)
    if colon(J, m).generators != colon_child.ideal().generators:
        raise CertificateRejected("colon child ideal differs from J : x^e", path)
    principal = MonomialIdeal.from_generators(J.variables, [m])
    if ideal_sum(J, principal).generators != sum_child.ideal().generators:
        raise CertificateRejected("sum child ideal differs from J + (x^e)", path)


class _Builder:
    def __init__(
        self,
        invariant: Invariant,
        field: FieldSpec,
        rng: Optional[Random],
        jobs: int,
        check_ideals: bool,
    ):
        self.invariant = invariant
        self.field = field
        self.rng = rng
        self.jobs = jobs
        self.check_ideals = check_ideals
        self._cache: Dict[Tuple[Edge, ...], int] = {}
        self.nodes = 0

    def value(self, G: Hypergraph) -> int:
        if G.edges not in self._cache:
            self._cache[G.edges] = self.invariant(G)
        return self._cache[G.edges]

    def choose_leaf(self, instance: MixedIdealInstance, path: str) -> Edge:
        leaves = good_leaves(instance.t_graph)
        if not leaves:
            raise GoodLeafMissing(f"T has no good leaf at node {path}; T is not a hyperforest")
        return self.rng.choice(leaves) if self.rng is not None else leaves[0]

    def build(self, instance: MixedIdealInstance, path: str) -> CertificateNode:
        self.nodes += 1
        inv_G = self.value(instance.graph)
        node = CertificateNode(instance, inv_G, instance.bound(inv_G))
        if not instance.T or instance.s == 1:
            node.depth = depth_or_dimension(instance.ideal(), self.field, self.jobs)
            if not node.bound_ok:
                logger.warning("base case %s: depth %d < bound %d", path, node.depth, node.bound)
            return node

        e = self.choose_leaf(instance, path)
        colon_child, Z, W = colon_step(instance, e)
        sum_child = sum_step(instance, e)
        if self.check_ideals:
            _check_decomposition(instance, e, colon_child, sum_child, path)

        node.leaf, node.Z, node.W_size = e, Z, len(W)
        node.inv_Gprime = self.value(colon_child.graph)
        node.inequality_ok = node.inv_Gprime + 1 + node.W_size >= inv_G
        if not node.inequality_ok:
            logger.warning("inequality fails at %s: %d + 1 + %d < %d", path, node.inv_Gprime, node.W_size, inv_G)
        node.children = [
            self.build(colon_child, f"{path}/colon"),
            self.build(sum_child, f"{path}/sum"),
        ]
        return node


def build_certificate(
    instance: MixedIdealInstance,
    kind: InvariantKind = "epsilon",
    field: Optional[FieldSpec] = None,
    rng: Optional[Random] = None,
    jobs: int = 1,
    check_ideals: bool = True,
) -> Certificate:
    """Unfold the induction on (s, |T|) for ``instance``.

    The good leaf is the lexicographically least one unless ``rng`` is
    given, in which case it is drawn at random at every node.
    """
    instance.validate()
    name, invariant = resolve_invariant(kind)
    if name == "alpha2":
        check_alpha2_hypotheses(instance)
    field = field or FieldSpec.rationals()
    builder = _Builder(invariant, field, rng, jobs, check_ideals)
    root = builder.build(instance, "root")
    logger.info("certificate with %d nodes for s=%d", builder.nodes, instance.s)
    return Certificate(root, name, field)


def replay_certificate(
    certificate: Certificate,
    field: Optional[FieldSpec] = None,
    invariant: Optional[Invariant] = None,
    jobs: int = 1,
) -> None:
    """Re-derive every child and recheck every recorded number.

    Raises CertificateRejected naming the first node that does not check out.
    """
    field = field or certificate.field
    _, fn = resolve_invariant(invariant if invariant is not None else certificate.invariant)
    if certificate.invariant == "alpha2":
        check_alpha2_hypotheses(certificate.root.instance)

    for path, node in certificate.walk():
        instance = node.instance
        try:
            instance.validate()
        except ValueError as exc:
            raise CertificateRejected(str(exc), path)
        inv_G = fn(instance.graph)
        if inv_G != node.inv_G:
            raise CertificateRejected(f"inv(G) is {inv_G}, recorded {node.inv_G}", path)
        if node.bound != instance.bound(inv_G):
            raise CertificateRejected(f"bound should be {instance.bound(inv_G)}", path)

        if not node.children:
            if instance.T and instance.s > 1:
                raise CertificateRejected("base case with edges in T and s > 1", path)
            depth = depth_or_dimension(instance.ideal(), field, jobs)
            if depth != node.depth:
                raise CertificateRejected(f"depth is {depth}, recorded {node.depth}", path)
            if depth < node.bound:
                raise CertificateRejected(f"depth {depth} below bound {node.bound}", path)
            continue

        if len(node.children) != 2 or node.leaf is None:
            raise CertificateRejected("inner node needs a leaf and two children", path)
        if node.leaf not in instance.T or not is_good_leaf(instance.t_graph, node.leaf):
            raise CertificateRejected("recorded leaf is not a good leaf of T", path)
        colon_child, Z, W = colon_step(instance, node.leaf)
        sum_child = sum_step(instance, node.leaf)
        if Z != node.Z:
            raise CertificateRejected("Z does not match the colon", path)
        if len(W) != node.W_size:
            raise CertificateRejected(f"|W| is {len(W)}, recorded {node.W_size}", path)
        if colon_child.key() != node.children[0].instance.key():
            raise CertificateRejected("colon child does not match", path)
        if sum_child.key() != node.children[1].instance.key():
            raise CertificateRejected("sum child does not match", path)
        inv_Gprime = fn(colon_child.graph)
        if inv_Gprime != node.inv_Gprime:
            raise CertificateRejected(f"inv(G') is {inv_Gprime}, recorded {node.inv_Gprime}", path)
        if inv_Gprime + 1 + len(W) < inv_G or not node.inequality_ok:
            raise CertificateRejected("inv(G') + 1 + |W| >= inv(G) fails", path)
    logger.info("certificate replayed: %d nodes", len(certificate))
