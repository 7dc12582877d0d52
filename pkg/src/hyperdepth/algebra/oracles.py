"""Brute-force reference computations for the depth engine.

Neither function shares code paths with the lcm-lattice engine beyond
the rank kernels, so agreement between them is a meaningful check.
"""

import logging
from collections import defaultdict
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from ..core.config import FieldSpec
from ..core.errors import UnitIdeal, ZeroIdeal
from .homology import SimplicialComplex, matrix_rank
from .monomial import Monomial, MonomialIdeal

logger = logging.getLogger(__name__)

TAYLOR_GENERATOR_CAP = 10


def _check_proper(J: MonomialIdeal) -> None:
    if J.is_zero():
        raise ZeroIdeal("The zero ideal has no finite resolution to compare")
    if J.is_unit():
        raise UnitIdeal("R/J is zero for the unit ideal")


def taylor_betti(
    J: MonomialIdeal, field: Optional[FieldSpec] = None
) -> Dict[Tuple[int, Tuple[int, ...]], int]:
    """Betti numbers of R/J from the Taylor complex tensored with the field.

    In degree a the complex has a basis vector for each generator subset
    with lcm exactly a; the induced differential keeps only the faces
    whose lcm is still a.
    """
    field = field or FieldSpec.rationals()
    gens = J.generators
    if len(gens) > TAYLOR_GENERATOR_CAP:
        raise ValueError(f"Taylor oracle limited to {TAYLOR_GENERATOR_CAP} generators")

    strands: Dict[Tuple[int, ...], Dict[int, List[Tuple[int, ...]]]] = defaultdict(
        lambda: defaultdict(list)
    )
    strands[Monomial.one(J.n).exponents][0].append(())
    for size in range(1, len(gens) + 1):
        for subset in combinations(range(len(gens)), size):
            m = gens[subset[0]]
            for k in subset[1:]:
                m = m.lcm(gens[k])
            strands[m.exponents][size].append(subset)

    table: Dict[Tuple[int, Tuple[int, ...]], int] = {}
    for alpha, chains in strands.items():
        ranks: Dict[int, int] = {}
        for i, basis in chains.items():
            lower = chains.get(i - 1, [])
            if i == 0 or not lower:
                ranks[i] = 0
                continue
            index = {s: k for k, s in enumerate(lower)}
            columns = []
            for s in basis:
                col = {}
                for pos in range(len(s)):
                    face = s[:pos] + s[pos + 1:]
                    if face in index:
                        col[index[face]] = -1 if pos % 2 else 1
                columns.append(col)
            ranks[i] = matrix_rank(columns, len(lower), field)
        for i, basis in chains.items():
            h = len(basis) - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if h:
                table[(i, alpha)] = h
    return table


def taylor_depth(J: MonomialIdeal, field: Optional[FieldSpec] = None) -> int:
    _check_proper(J)
    pd = max(i for i, _ in taylor_betti(J, field))
    return J.n - pd


def hochster_depth(J: MonomialIdeal, field: Optional[FieldSpec] = None) -> int:
    """depth R/J for squarefree J from the Stanley-Reisner complex.

    beta_{i,s}(R/J) = dim H~_{|s|-i-1}(D|s) over all vertex subsets s,
    with D the complex of subsets not containing a generator support.
    """
    _check_proper(J)
    if any(a > 1 for g in J.generators for a in g.exponents):
        raise ValueError("hochster_depth needs a squarefree ideal")
    field = field or FieldSpec.rationals()
    gen_masks = [sum(1 << j for j in g.support) for g in J.generators]

    def is_face(mask: int) -> bool:
        return not any(g & ~mask == 0 for g in gen_masks)

    pd = 0
    for sigma in range(1, 1 << J.n):
        k = bin(sigma).count("1")
        if k <= pd:
            continue
        members = [j for j in range(J.n) if sigma >> j & 1]
        faces = [0]
        for j in members:
            faces += [f | 1 << j for f in faces if is_face(f | 1 << j)]
        facets = [
            f for f in faces if all(f >> j & 1 or not is_face(f | 1 << j) for j in members)
        ]
        ranks = SimplicialComplex(facets).reduced_homology(field)
        for d, r in ranks.items():
            if r:
                pd = max(pd, k - d - 1)
    logger.debug("Stanley-Reisner search gives pd=%d", pd)
    return J.n - pd
