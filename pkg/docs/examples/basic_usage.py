"""Basic usage examples for hyperdepth."""

from random import Random

from hyperdepth import (
    FieldSpec,
    GenConfig,
    MixedIdealInstance,
    alpha2,
    build_certificate,
    depth_function,
    edge_ideal,
    epsilon,
    good_leaf_order,
    make_hypergraph,
    random_hypertree,
    replay_certificate,
    verify_epsilon_bound,
)
from hyperdepth.algebra.betti import betti
from hyperdepth.fixtures import load_fixture


def basic_example():
    """Invariants and depth of a small hypertree."""
    print("=== Basic hyperdepth Usage ===")

    G = make_hypergraph(["x", "y", "z", "u", "v"], [["x", "y", "z"], ["y", "z", "u"], ["u", "v"]])
    print(f"Good leaf order: {good_leaf_order(G).to_dict()}")

    eps, dominating = epsilon(G)
    print(f"epsilon = {eps}, witness {dominating.names()}")

    f = depth_function(edge_ideal(G), 3)
    print(f"depth R/I^s for s = 1..3: {list(f.values)}")


def betti_example():
    """Betti table of the edge ideal of a path, over Q and GF(2)."""
    print("\n=== Betti Numbers ===")

    P = make_hypergraph(["a", "b", "c", "d"], [["a", "b"], ["b", "c"], ["c", "d"]])
    for field in (FieldSpec.rationals(), FieldSpec(characteristic=2)):
        table = betti(edge_ideal(P), field)
        print(f"{field}: totals {table.totals()}, pd {table.pd}")


def bound_example():
    """The epsilon bound on a bundled tree."""
    print("\n=== Depth Bounds ===")

    G = load_fixture("tree12_flat")
    report = verify_epsilon_bound(G, 2)
    for row in report.rows:
        print(f"s={row.s}: depth {row.depth} >= {row.bound}: {row.holds}")


def certificate_example():
    """Build, export and replay a certificate with random good leaves."""
    print("\n=== Certificates ===")

    G = random_hypertree(GenConfig(n=14, edges=5, seed=3))
    print(f"Random hypertree {G.edge_names()}, epsilon = {epsilon(G)[0]}")
    cert = build_certificate(MixedIdealInstance.from_split(G, (), 2), "epsilon", rng=Random(1))
    print(f"{len(cert)} nodes, all checks hold: {cert.all_hold}")
    replay_certificate(cert)
    print("replayed")

    T = load_fixture("tree12_deep")
    print(f"tree12_deep: alpha2 = {alpha2(T)[0]}")


if __name__ == "__main__":
    basic_example()
    betti_example()
    bound_example()
    certificate_example()
