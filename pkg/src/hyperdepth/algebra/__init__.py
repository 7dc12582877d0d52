"""Monomial ideals and the depth engine."""

from .betti import BettiTable, DepthFunction, betti, depth_function, depth_quotient, pd
from .monomial import Monomial, MonomialIdeal, edge_ideal, power

__all__ = [
    "BettiTable",
    "DepthFunction",
    "betti",
    "depth_function",
    "depth_quotient",
    "pd",
    "Monomial",
    "MonomialIdeal",
    "edge_ideal",
    "power",
]
