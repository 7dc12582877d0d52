"""Depth functions of seeded random hypertrees against the epsilon bound."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from ..algebra.betti import depth_function
from ..algebra.monomial import edge_ideal
from ..core.config import FieldSpec
from ..core.errors import InvalidConfig
from ..core.hypergraph import Hypergraph
from ..core.invariants import epsilon
from ..utils.generators import GenConfig, random_hypertree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeRun:
    """One generated hypertree with its depth sequence and epsilon."""

    seed: int
    graph: Hypergraph
    epsilon: int
    depths: Tuple[int, ...]

    @property
    def drops(self) -> Tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.depths, self.depths[1:]))

    @property
    def unit_steps(self) -> bool:
        """No power lowers the depth by more than one."""
        return all(d <= 1 for d in self.drops)

    @property
    def stable_from(self) -> int:
        """Least s with depth constant from s up to the last computed power."""
        s = len(self.depths)
        while s > 1 and self.depths[s - 2] == self.depths[-1]:
            s -= 1
        return s

    @property
    def bounds(self) -> Tuple[int, ...]:
        return tuple(max(self.epsilon - s + 1, 1) for s in range(1, len(self.depths) + 1))

    @property
    def bound_holds(self) -> bool:
        return all(d >= b for d, b in zip(self.depths, self.bounds))

    @property
    def tight_at_first_power(self) -> bool:
        return self.depths[0] == self.epsilon

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "edges": self.graph.edge_names(),
            "epsilon": self.epsilon,
            "depths": list(self.depths),
            "bounds": list(self.bounds),
            "unit_steps": self.unit_steps,
            "stable_from": self.stable_from,
            "bound_holds": self.bound_holds,
        }


@dataclass
class ExperimentReport:
    config: GenConfig
    s_max: int
    field: FieldSpec
    runs: List[TreeRun]

    @property
    def all_hold(self) -> bool:
        return all(run.bound_holds for run in self.runs)

    def summary(self) -> Dict[str, int]:
        tight = [run for run in self.runs if run.tight_at_first_power]
        return {
            "trees": len(self.runs),
            "unit_steps": sum(run.unit_steps for run in self.runs),
            "tight_at_first_power": len(tight),
            "tight_and_unit_steps": sum(run.unit_steps for run in tight),
            "bound_violations": sum(not run.bound_holds for run in self.runs),
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            "generator": self.config.model_dump(),
            "max_power": self.s_max,
            "field": str(self.field),
            "summary": self.summary(),
            "all_hold": self.all_hold,
            "runs": [run.to_dict() for run in self.runs],
        }


def random_tree_run(
    config: GenConfig, s_max: int, field: Optional[FieldSpec] = None, jobs: int = 1
) -> TreeRun:
    G = random_hypertree(config)
    values = depth_function(edge_ideal(G), s_max, field, jobs).values
    return TreeRun(config.seed, G, epsilon(G)[0], values)


def random_tree_experiment(
    trees: int,
    config: GenConfig,
    s_max: int,
    field: Optional[FieldSpec] = None,
    jobs: int = 1,
) -> ExperimentReport:
    """Depth functions of ``trees`` hypertrees seeded config.seed, config.seed + 1, ..."""
    if trees < 1:
        raise InvalidConfig("trees must be at least 1")
    field = field or FieldSpec.rationals()
    runs = []
    for i in range(trees):
        run = random_tree_run(config.model_copy(update={"seed": config.seed + i}), s_max, field, jobs)
        logger.info("tree %d: epsilon %d, depths %s", run.seed, run.epsilon, list(run.depths))
        runs.append(run)
    return ExperimentReport(config, s_max, field, runs)
