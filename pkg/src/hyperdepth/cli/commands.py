"""Pipelines behind the hyperdepth subcommands."""

import logging
import sys
import time
from pathlib import Path
from random import Random
from typing import Any, Dict, List, Optional, Sequence, Tuple

from rich.console import Console
from rich.logging import RichHandler

from .. import __version__
from ..algebra.betti import betti, depth_function, pd
from ..algebra.monomial import edge_ideal, power
from ..core.config import HyperdepthConfig
from ..core.errors import InvalidConfig, ParseError
from ..core.forest import GoodLeafOrder, brute_force_is_forest, good_leaf_order, is_hypertree
from ..core.hypergraph import Hypergraph
from ..core.invariants import alpha2, epsilon
from ..fixtures import load_fixture, resolve_fixture
from ..utils.formats import canonical_digest, parse_input, to_text
from ..utils.generators import GenConfig, random_forest, random_hyperforest, random_hypertree
from ..verify.bounds import MixedIdealInstance, verify_alpha2_bound, verify_epsilon_bound
from ..verify.certificate import Certificate, build_certificate
from ..verify.experiment import random_tree_experiment

logger = logging.getLogger(__name__)

GENERATORS = {
    "forest": random_forest,
    "hyperforest": random_hyperforest,
    "hypertree": random_hypertree,
}


class HyperdepthCLI:
    """Command-line pipelines; payloads go to stdout, everything else to stderr."""

    def __init__(self, config: HyperdepthConfig, console: Optional[Console] = None):
        self.config = config
        self.console = console or Console(stderr=True)

    @classmethod
    def from_options(
        cls,
        config_path: Optional[Path] = None,
        console: Optional[Console] = None,
        **overrides: Any,
    ) -> "HyperdepthCLI":
        """Config file, then environment, then command-line flags."""
        try:
            config = HyperdepthConfig.get_effective_config(config_path).update(**overrides)
        except ValueError as e:
            raise InvalidConfig(f"Configuration error: {e}") from e
        return cls(config, console)

    def with_overrides(self, **overrides: Any) -> "HyperdepthCLI":
        """A copy whose config takes subcommand-level flags over the group ones."""
        if all(v is None for v in overrides.values()):
            return self
        try:
            config = self.config.update(**overrides)
        except ValueError as e:
            raise InvalidConfig(f"Configuration error: {e}") from e
        return HyperdepthCLI(config, self.console)

    def setup_logging(self) -> None:
        level = logging.DEBUG if self.config.verbose else logging.WARNING
        handler = RichHandler(console=self.console, show_path=False, show_time=self.config.verbose)
        logging.basicConfig(level=level, format="%(message)s", handlers=[handler], force=True)

    @property
    def cross_check_prime(self) -> Optional[int]:
        return self.config.prime_check if self.config.cross_check else None

    # Input and reports

    def load_graph(self, source: str) -> Hypergraph:
        """A file path, ``-`` for stdin, or the name of a bundled fixture."""
        if source == "-":
            return parse_input(sys.stdin)
        path = Path(source)
        if path.exists():
            return parse_input(path)
        name = resolve_fixture(source)
        if name is not None:
            logger.debug("using bundled fixture %s", name)
            return load_fixture(name)
        raise ParseError(f"No such file or fixture: {source}")

    def report(
        self,
        command: str,
        G: Optional[Hypergraph],
        payload: Dict[str, Any],
        started: float,
        arguments: Optional[Dict[str, Any]] = None,
    ) -> Dict[str, Any]:
        return {
            "command": command,
            "arguments": arguments or {},
            "input_digest": canonical_digest(G) if G is not None else None,
            "field": self.config.field,
            "jobs": self.config.jobs,
            "version": __version__,
            "elapsed_seconds": round(time.perf_counter() - started, 3),
            "result": payload,
        }

    # Pipelines

    def forest_check(self, G: Hypergraph) -> Dict[str, Any]:
        result = good_leaf_order(G)
        payload = result.to_dict()
        payload["tree"] = isinstance(result, GoodLeafOrder) and is_hypertree(G)
        cap = self.config.brute_force_cap
        # exhaustive confirmation only while the subcollections stay enumerable
        payload["oracle"] = brute_force_is_forest(G, cap) if len(G.edges) <= cap else None
        return payload

    def invariants(self, G: Hypergraph) -> Dict[str, Any]:
        eps, dominating = epsilon(G)
        a2, packing = alpha2(G)
        return {
            "epsilon": eps,
            "epsilon_witness": dominating.names(),
            "alpha2": a2,
            "alpha2_witness_centers": packing.center_names(),
            "alpha2_witness": packing.to_dict()["supports"],
        }

    def depth(self, G: Hypergraph, s: int, show_betti: bool = False) -> Dict[str, Any]:
        field = self.config.field_spec
        J = power(edge_ideal(G), s)
        if show_betti:
            table = betti(J, field, self.config.jobs, self.cross_check_prime)
            self.console.print(table.to_rich_table())
            value = table.pd
        else:
            value = pd(J, field, self.config.jobs, self.cross_check_prime)
        payload = {"n": G.n, "power": s, "pd": value, "depth": G.n - value}
        if show_betti:
            payload["betti"] = table.to_dict()["betti"]
        return payload

    def depth_function(self, G: Hypergraph, s_max: int) -> Dict[str, Any]:
        values = depth_function(
            edge_ideal(G), s_max, self.config.field_spec, self.config.jobs, self.cross_check_prime
        )
        return values.to_dict()

    def verify_bound(self, G: Hypergraph, invariant: str, s_max: int) -> Tuple[Dict[str, Any], bool]:
        verify = verify_epsilon_bound if invariant == "epsilon" else verify_alpha2_bound
        report = verify(G, s_max, self.config.field_spec, self.config.jobs)
        return report.to_dict(), report.all_hold

    def certificate(
        self,
        G: Hypergraph,
        s: int,
        invariant: str,
        held_out: Sequence[Sequence[str]] = (),
        seed: Optional[int] = None,
    ) -> Certificate:
        instance = MixedIdealInstance.from_split(G, held_out, s)
        rng = Random(seed) if seed is not None else None
        return build_certificate(instance, invariant, self.config.field_spec, rng, self.config.jobs)

    def experiment(self, trees: int, s_max: int, **options: Any) -> Tuple[Dict[str, Any], bool]:
        config = GenConfig.of(**{k: v for k, v in options.items() if v is not None})
        report = random_tree_experiment(
            trees, config, s_max, self.config.field_spec, self.config.jobs
        )
        return report.to_dict(), report.all_hold

    def generate(self, kind: str, **options: Any) -> str:
        config = GenConfig.of(**{k: v for k, v in options.items() if v is not None})
        return to_text(GENERATORS[kind](config))

    def selftest(self, full: bool = False) -> Tuple[Dict[str, Any], bool]:
        """Reproduce the bundled examples."""
        s_max = 4 if full else 2
        checks: List[Dict[str, Any]] = []

        def check(name: str, expected: Any, compute) -> None:
            try:
                actual = compute()
            except Exception as e:
                actual = f"error: {e}"
            checks.append({"name": name, "expected": expected, "actual": actual, "passed": actual == expected})
            logger.info("%s: %s", name, "ok" if actual == expected else f"got {actual}")

        left, right = load_fixture("no_leaf_triangles"), load_fixture("small_hypertree")
        tree12_deep, tree12_flat = load_fixture("tree12_deep"), load_fixture("tree12_flat")
        check("no_leaf_triangles is a hyperforest", False, lambda: isinstance(good_leaf_order(left), GoodLeafOrder))
        check("no_leaf_triangles brute force", False, lambda: brute_force_is_forest(left))
        check("small_hypertree is a hypertree", True, lambda: is_hypertree(right))
        check("small_hypertree brute force", True, lambda: brute_force_is_forest(right))
        check("tree12_deep epsilon", 2, lambda: epsilon(tree12_deep)[0])
        check("tree12_deep alpha2", 4, lambda: alpha2(tree12_deep)[0])
        check("tree12_flat epsilon", 3, lambda: epsilon(tree12_flat)[0])
        check("tree12_flat alpha2", 3, lambda: alpha2(tree12_flat)[0])
        field, jobs = self.config.field_spec, self.config.jobs
        check(
            f"tree12_deep depth function s<={s_max}",
            [4, 3, 2, 1][:s_max],
            lambda: list(depth_function(edge_ideal(tree12_deep), s_max, field, jobs).values),
        )
        check(
            f"tree12_flat depth function s<={s_max}",
            [3, 3, 3, 1][:s_max],
            lambda: list(depth_function(edge_ideal(tree12_flat), s_max, field, jobs).values),
        )
        passed = all(c["passed"] for c in checks)
        return {"checks": checks, "passed": passed}, passed
