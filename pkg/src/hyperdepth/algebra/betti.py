"""Multigraded Betti numbers, projective dimension and depth of R/J.

Betti numbers are read off the upper Koszul simplicial complexes
K^a(J) = {squarefree s <= a : x^(a-s) in J} at the degrees a of the lcm
lattice: beta_{i,a}(R/J) = dim H~_{i-2}(K^a(J)) for i >= 1.

Internally monomials dividing a fixed ideal are packed as "thermometer"
bitmasks (exponent e of a variable becomes e consecutive set bits in that
variable's field), so lcm is bitwise OR and divisibility is a mask test.
"""

import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from rich.table import Table

from ..core.config import FieldSpec
from ..core.errors import CharacteristicMismatch, UnitIdeal, ZeroIdeal
from .homology import SimplicialComplex
from .monomial import Monomial, MonomialIdeal, power

logger = logging.getLogger(__name__)

Multidegree = Tuple[int, ...]
HomologyTask = Tuple[Tuple[int, ...], int, Optional[Tuple[int, ...]]]


class _Codec:
    """Thermometer packing of exponent vectors bounded by ``caps``."""

    def __init__(self, caps: Sequence[int]):
        self.caps = tuple(caps)
        self.offsets: List[int] = []
        offset = 0
        for c in self.caps:
            self.offsets.append(offset)
            offset += c

    def encode(self, exps: Sequence[int]) -> int:
        mask = 0
        for a, off in zip(exps, self.offsets):
            if a:
                mask |= ((1 << a) - 1) << off
        return mask

    def decode(self, mask: int) -> Multidegree:
        return tuple(
            bin((mask >> off) & ((1 << c) - 1)).count("1") if c else 0
            for off, c in zip(self.offsets, self.caps)
        )

    def top_bits(self, exps: Sequence[int]) -> List[Tuple[int, int]]:
        """(variable, bit of its highest unit) for each variable in the support."""
        return [(j, 1 << (off + a - 1)) for j, (a, off) in enumerate(zip(exps, self.offsets)) if a]


def _require_nonzero(J: MonomialIdeal) -> None:
    if J.is_zero():
        raise ZeroIdeal("The zero ideal has no lcm lattice or Betti table here")


def _require_proper(J: MonomialIdeal) -> None:
    _require_nonzero(J)
    if J.is_unit():
        raise UnitIdeal("R/J is zero for the unit ideal")


def _lattice_masks(codec: _Codec, gens: Sequence[int]) -> List[int]:
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                if g & ~a:
                    j = a | g
                    if j not in seen:
                        seen.add(j)
                        fresh.append(j)
        frontier = fresh
    return sorted(seen)


def lcm_lattice(J: MonomialIdeal) -> List[Multidegree]:
    """All joins of nonempty sets of minimal generators, by join-closure BFS."""
    _require_nonzero(J)
    codec = _Codec(J.max_exponents())
    gens = [codec.encode(g.exponents) for g in J.generators]
    lattice = [codec.decode(m) for m in _lattice_masks(codec, gens)]
    logger.debug("lcm lattice of %d generators has %d elements", len(gens), len(lattice))
    return sorted(lattice, key=lambda a: (sum(a), a))


def _koszul_facets(codec: _Codec, gens: Sequence[int], alpha: Multidegree) -> List[int]:
    amask = codec.encode(alpha)
    tops = codec.top_bits(alpha)
    facets = []
    for g in gens:
        if g & ~amask:
            continue
        # x^(a - s) in (g) iff g_j < a_j for every j in s
        f = 0
        for j, bit in tops:
            if not g & bit:
                f |= 1 << j
        facets.append(f)
    return facets


def upper_koszul_complex(J: MonomialIdeal, alpha: Sequence[int]) -> SimplicialComplex:
    """K^alpha(J) on supp(alpha); void when x^alpha is not in J."""
    alpha = tuple(alpha)
    caps = [max(a, c) for a, c in zip(alpha, J.max_exponents())]
    codec = _Codec(caps)
    gens = [codec.encode(g.exponents) for g in J.generators]
    support = [j for j, a in enumerate(alpha) if a]
    return SimplicialComplex(_koszul_facets(codec, gens, alpha), vertices=support)


def _homology_task(task: HomologyTask) -> Dict[int, int]:
    facets, characteristic, dims = task
    return SimplicialComplex(facets).reduced_homology(FieldSpec(characteristic=characteristic), dims)


def _run_tasks(tasks: List[HomologyTask], jobs: int) -> List[Dict[int, int]]:
    if jobs <= 1 or len(tasks) < 2 * jobs:
        return [_homology_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_homology_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))


@dataclass
class BettiTable:
    """Multigraded Betti numbers of R/J; absent entries are zero."""

    variables: Tuple[str, ...]
    field: FieldSpec
    entries: Dict[Tuple[int, Multidegree], int] = field(default_factory=dict)

    @property
    def pd(self) -> int:
        return max((i for (i, _), r in self.entries.items() if r), default=0)

    def get(self, i: int, alpha: Sequence[int]) -> int:
        return self.entries.get((i, tuple(alpha)), 0)

    def totals(self) -> Dict[int, int]:
        out: Dict[int, int] = defaultdict(int)
        for (i, _), r in self.entries.items():
            out[i] += r
        return dict(sorted(out.items()))

    def graded(self) -> Dict[Tuple[int, int], int]:
        """Coarse table keyed by (i, total degree)."""
        out: Dict[Tuple[int, int], int] = defaultdict(int)
        for (i, alpha), r in self.entries.items():
            out[(i, sum(alpha))] += r
        return dict(out)

    def degree_label(self, alpha: Sequence[int]) -> str:
        return Monomial(tuple(alpha)).format(self.variables)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "field": str(self.field),
            "pd": self.pd,
            "betti": {
                f"{i}:{self.degree_label(alpha)}": r
                for (i, alpha), r in sorted(self.entries.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1]))
                if r
            },
        }

    def to_rich_table(self) -> Table:
        """Macaulay2-style layout: column i, row j = degree - i."""
        graded = self.graded()
        columns = sorted({i for i, _ in graded})
        rows = sorted({d - i for i, d in graded})
        table = Table(title=f"Betti table over {self.field}", show_header=True)
        table.add_column("", style="cyan", justify="right")
        for i in columns:
            table.add_column(str(i), justify="right")
        totals = self.totals()
        table.add_row("total:", *[str(totals.get(i, 0)) for i in columns])
        for j in rows:
            cells = [str(graded.get((i, i + j), 0) or ".") for i in columns]
            table.add_row(f"{j}:", *cells)
        return table


def _compute_betti(J: MonomialIdeal, field: FieldSpec, jobs: int) -> BettiTable:
    codec = _Codec(J.max_exponents())
    gens = [codec.encode(g.exponents) for g in J.generators]
    degrees = [codec.decode(m) for m in _lattice_masks(codec, gens)]
    tasks = [(tuple(_koszul_facets(codec, gens, a)), field.characteristic, None) for a in degrees]
    table = BettiTable(J.variables, field, {(0, (0,) * J.n): 1})
    for alpha, ranks in zip(degrees, _run_tasks(tasks, jobs)):
        for d, r in ranks.items():
            if r:
                table.entries[(d + 2, alpha)] = r
    return table


def betti(
    J: MonomialIdeal,
    field: Optional[FieldSpec] = None,
    jobs: int = 1,
    cross_check_prime: Optional[int] = None,
) -> BettiTable:
    """Full multigraded Betti table of R/J over the field (default: rationals).

    With ``cross_check_prime`` the table is also computed modulo that prime
    and then over the rationals; the rational table is returned when they
    agree, otherwise CharacteristicMismatch is raised.
    """
    _require_proper(J)
    field = field or FieldSpec.rationals()
    if cross_check_prime is None:
        return _compute_betti(J, field, jobs)
    modular = _compute_betti(J, FieldSpec(characteristic=cross_check_prime), jobs)
    rational = _compute_betti(J, FieldSpec.rationals(), jobs)
    if modular.entries != rational.entries:
        keys = modular.entries.keys() | rational.entries.keys()
        differing = sorted(k for k in keys if modular.entries.get(k) != rational.entries.get(k))
        logger.warning("Betti numbers of %s differ mod %d at %s", J, cross_check_prime, differing)
        raise CharacteristicMismatch(
            f"Betti numbers differ mod {cross_check_prime} at {len(differing)} entries",
            cross_check_prime, modular, rational,
        )
    return rational


def _compute_pd(J: MonomialIdeal, field: FieldSpec, jobs: int) -> int:
    codec = _Codec(J.max_exponents())
    gens = [codec.encode(g.exponents) for g in J.generators]
    by_support: Dict[int, List[int]] = defaultdict(list)
    for m in _lattice_masks(codec, gens):
        alpha = codec.decode(m)
        by_support[sum(1 for a in alpha if a)].append(m)

    best = 1  # beta_1 is never zero for a proper nonzero ideal
    examined = skipped = 0
    for k in sorted(by_support, reverse=True):
        # a complex on k vertices has reduced homology only below dim k-1,
        # so these degrees contribute at most index k
        if k <= best or best == J.n:
            skipped += sum(len(v) for size, v in by_support.items() if size <= k)
            break
        tasks = []
        for m in by_support[k]:
            alpha = codec.decode(m)
            facets = _koszul_facets(codec, gens, alpha)
            top = max(bin(f).count("1") for f in facets) - 1
            lowest = max(best - 1, -1)
            if top < lowest:
                skipped += 1
                continue
            tasks.append((tuple(facets), field.characteristic, tuple(range(lowest, top + 1))))
        examined += len(tasks)
        if jobs > 1:
            results = _run_tasks(tasks, jobs)
        else:
            results = []
            for facets, char, dims in tasks:
                # raise the floor as we go; later degrees need fewer dimensions
                dims = tuple(d for d in dims if d >= best - 1)
                results.append(_homology_task((facets, char, dims)) if dims else {})
                best = max([best] + [d + 2 for d, r in results[-1].items() if r])
        for ranks in results:
            best = max([best] + [d + 2 for d, r in ranks.items() if r])
    logger.debug("pd search examined %d degrees, skipped %d; pd=%d", examined, skipped, best)
    return best


def pd(
    J: MonomialIdeal,
    field: Optional[FieldSpec] = None,
    jobs: int = 1,
    cross_check_prime: Optional[int] = None,
) -> int:
    """Projective dimension of R/J.

    ``cross_check_prime`` behaves as in :func:`betti`.
    """
    _require_proper(J)
    field = field or FieldSpec.rationals()
    if cross_check_prime is None:
        return _compute_pd(J, field, jobs)
    modular = _compute_pd(J, FieldSpec(characteristic=cross_check_prime), jobs)
    rational = _compute_pd(J, FieldSpec.rationals(), jobs)
    if modular != rational:
        raise CharacteristicMismatch(
            f"pd is {modular} mod {cross_check_prime} but {rational} over Q",
            cross_check_prime, modular, rational,
        )
    return rational


def depth_quotient(
    J: MonomialIdeal,
    field: Optional[FieldSpec] = None,
    jobs: int = 1,
    cross_check_prime: Optional[int] = None,
) -> int:
    """depth R/J = n - pd(R/J); unused variables count automatically through n."""
    return J.n - pd(J, field, jobs, cross_check_prime)


@dataclass(frozen=True)
class DepthFunction:
    """depth R/J^s for s = 1..s_max."""

    n: int
    values: Tuple[int, ...]
    field: FieldSpec = FieldSpec.rationals()

    def __getitem__(self, s: int) -> int:
        return self.values[s - 1]

    @property
    def s_max(self) -> int:
        return len(self.values)

    def rows(self) -> List[Tuple[int, int]]:
        return [(s, d) for s, d in enumerate(self.values, start=1)]

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "field": str(self.field), "depths": list(self.values)}


def depth_function(
    J: MonomialIdeal,
    s_max: int,
    field: Optional[FieldSpec] = None,
    jobs: int = 1,
    cross_check_prime: Optional[int] = None,
) -> DepthFunction:
    if s_max < 1:
        raise ValueError("s_max must be at least 1")
    field = field or FieldSpec.rationals()
    values = []
    for s in range(1, s_max + 1):
        Js = power(J, s)
        values.append(depth_quotient(Js, field, jobs, cross_check_prime))
        logger.info("depth R/J^%d = %d (%d generators)", s, values[-1], len(Js))
    return DepthFunction(J.n, tuple(values), field)


def depth_or_dimension(J: MonomialIdeal, field: Optional[FieldSpec] = None, jobs: int = 1) -> int:
    """depth R/J, with depth R = n for the zero ideal (verifier convention)."""
    if J.is_zero():
        return J.n
    return depth_quotient(J, field, jobs)
