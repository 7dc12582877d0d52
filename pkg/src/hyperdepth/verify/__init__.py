"""Bound verification and certificates."""

from .bounds import (
    BoundReport,
    MixedIdealInstance,
    verify_alpha2_bound,
    verify_epsilon_bound,
    verify_generic_invariant,
    verify_mixed,
)
from .certificate import Certificate, build_certificate, replay_certificate
from .experiment import ExperimentReport, TreeRun, random_tree_experiment

__all__ = [
    "BoundReport",
    "MixedIdealInstance",
    "verify_alpha2_bound",
    "verify_epsilon_bound",
    "verify_generic_invariant",
    "verify_mixed",
    "Certificate",
    "build_certificate",
    "replay_certificate",
    "ExperimentReport",
    "TreeRun",
    "random_tree_experiment",
]
