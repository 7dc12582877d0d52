"""hyperdepth - depth of powers of edge ideals of hyperforests."""

__version__ = "0.1.0"

# Flat API
from .core.forest import brute_force_is_forest, good_leaf_order, is_hyperforest, is_hypertree
from .core.hypergraph import Hypergraph, colon_hypergraph, make_hypergraph
from .core.invariants import alpha2, epsilon, is_edgewise_dominant
from .algebra.betti import betti, depth_function, depth_quotient, pd
from .algebra.monomial import colon, edge_ideal, ideal_sum, power
from .verify.bounds import (
    MixedIdealInstance,
    verify_alpha2_bound,
    verify_epsilon_bound,
    verify_generic_invariant,
    verify_mixed,
)
from .verify.certificate import build_certificate, replay_certificate
from .verify.experiment import random_tree_experiment
from .utils.formats import parse_input
from .utils.generators import GenConfig, random_forest, random_hyperforest, random_hypertree

# Configuration and errors
from .core.config import FieldSpec, HyperdepthConfig
from .core.errors import HyperdepthError

__all__ = [
    "brute_force_is_forest",
    "good_leaf_order",
    "is_hyperforest",
    "is_hypertree",
    "Hypergraph",
    "colon_hypergraph",
    "make_hypergraph",
    "alpha2",
    "epsilon",
    "is_edgewise_dominant",
    "betti",
    "depth_function",
    "depth_quotient",
    "pd",
    "colon",
    "edge_ideal",
    "ideal_sum",
    "power",
    "MixedIdealInstance",
    "verify_alpha2_bound",
    "verify_epsilon_bound",
    "verify_generic_invariant",
    "verify_mixed",
    "build_certificate",
    "replay_certificate",
    "random_tree_experiment",
    "parse_input",
    "GenConfig",
    "random_forest",
    "random_hyperforest",
    "random_hypertree",
    "FieldSpec",
    "HyperdepthConfig",
    "HyperdepthError",
]
