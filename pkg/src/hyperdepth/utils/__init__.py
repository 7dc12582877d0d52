"""Generators and file formats."""

from .formats import canonical_digest, parse_input, parse_string, to_json, to_text
from .generators import GenConfig, random_forest, random_hyperforest, random_hypertree

__all__ = [
    "canonical_digest",
    "parse_input",
    "parse_string",
    "to_json",
    "to_text",
    "GenConfig",
    "random_forest",
    "random_hyperforest",
    "random_hypertree",
]
