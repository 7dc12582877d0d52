"""Exact reduced simplicial homology ranks.

Complexes are given by facets encoded as vertex bitmasks. Boundary ranks
are computed exactly: fraction-free integer elimination with content
removal over the rationals, dense modular elimination over GF(p).
"""

from functools import reduce
from itertools import combinations
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..core.config import FieldSpec

SparseVector = Dict[int, int]


def _bits(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def rank_rational(columns: Iterable[SparseVector]) -> int:
    """Rank over Q of integer sparse vectors.

    Each incoming vector is reduced against stored pivots by the
    fraction-free update v <- a*v - b*u, then divided by its content.
    """
    pivots: Dict[int, SparseVector] = {}
    rank = 0
    for col in columns:
        v = {k: x for k, x in col.items() if x}
        while v:
            p = max(v)
            u = pivots.get(p)
            if u is None:
                pivots[p] = v
                rank += 1
                break
            a, b = u[p], v[p]
            g = gcd(a, b)
            a, b = a // g, b // g
            w = {k: a * x for k, x in v.items()}
            for k, y in u.items():
                w[k] = w.get(k, 0) - b * y
            v = {k: x for k, x in w.items() if x}
            if v:
                content = reduce(gcd, v.values())
                if content > 1:
                    v = {k: x // content for k, x in v.items()}
    return rank


def rank_modular(columns: Sequence[SparseVector], n_rows: int, p: int) -> int:
    """Rank over GF(p) by dense Gaussian elimination."""
    if not columns or n_rows == 0:
        return 0
    m = np.zeros((len(columns), n_rows), dtype=np.int64)
    for j, col in enumerate(columns):
        for k, x in col.items():
            m[j, k] = x % p
    rank = 0
    rows, cols = m.shape
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(m[rank:, c])[0]
        if nz.size == 0:
            continue
        r = rank + nz[0]
        if r != rank:
            m[[rank, r]] = m[[r, rank]]
        inv = pow(int(m[rank, c]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        below = m[rank + 1:, c].copy()
        if below.any():
            m[rank + 1:] = (m[rank + 1:] - np.outer(below, m[rank])) % p
        rank += 1
    return rank


def matrix_rank(columns: Sequence[SparseVector], n_rows: int, field: FieldSpec) -> int:
    if field.is_rational:
        return rank_rational(columns)
    return rank_modular(columns, n_rows, field.characteristic)


class SimplicialComplex:
    """Simplicial complex on vertex bitmasks, given by (not necessarily maximal) facets.

    ``facets == []`` is the void complex (no faces at all); ``[0]`` is the
    complex whose only face is the empty set.
    """

    def __init__(self, facets: Iterable[int], vertices: Optional[Sequence[int]] = None):
        unique = sorted(set(facets), key=lambda f: -bin(f).count("1"))
        maximal: List[int] = []
        for f in unique:
            if not any(f & ~g == 0 for g in maximal):
                maximal.append(f)
        self.facets: Tuple[int, ...] = tuple(sorted(maximal))
        span = reduce(lambda a, b: a | b, self.facets, 0)
        self.vertices: Tuple[int, ...] = tuple(vertices) if vertices is not None else tuple(_bits(span))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        if self.is_void:
            return -2
        return max(bin(f).count("1") for f in self.facets) - 1

    def is_cone(self) -> bool:
        """Some vertex lies in every facet."""
        return not self.is_void and reduce(lambda a, b: a & b, self.facets) != 0

    def contains(self, face: int) -> bool:
        return any(face & ~f == 0 for f in self.facets)

    def faces(self, dim: int) -> List[int]:
        """Faces of the given dimension, as masks in lexicographic order."""
        if self.is_void or dim < -1:
            return []
        if dim == -1:
            return [0]
        found = set()
        for f in self.facets:
            members = _bits(f)
            for combo in combinations(members, dim + 1):
                found.add(sum(1 << v for v in combo))
        return sorted(found, key=lambda m: _bits(m))

    def face_sets(self) -> List[frozenset]:
        out = []
        for d in range(-1, self.dimension + 1):
            out.extend(frozenset(_bits(m)) for m in self.faces(d))
        return out

    def boundary_columns(self, dim: int, lower: List[int]) -> List[SparseVector]:
        """Columns of the boundary map C_dim -> C_{dim-1} in the given row basis."""
        index = {m: i for i, m in enumerate(lower)}
        cols = []
        for face in self.faces(dim):
            col: SparseVector = {}
            for k, v in enumerate(_bits(face)):
                col[index[face & ~(1 << v)]] = -1 if k % 2 else 1
            cols.append(col)
        return cols

    def reduced_homology(
        self, field: FieldSpec, dims: Optional[Iterable[int]] = None
    ) -> Dict[int, int]:
        """Ranks of reduced homology in the requested dimensions (default: all)."""
        if self.is_void:
            return {}
        top = self.dimension
        wanted = sorted(set(range(-1, top + 1) if dims is None else dims))
        wanted = [d for d in wanted if -1 <= d <= top]
        if not wanted:
            return {}
        if self.is_cone():
            return {d: 0 for d in wanted}

        faces = {d: self.faces(d) for d in range(wanted[0] - 1, wanted[-1] + 2)}
        ranks: Dict[int, int] = {}

        def boundary_rank(d: int) -> int:
            # rank of C_d -> C_{d-1}
            if d not in ranks:
                if d <= -1 or not faces.get(d):
                    ranks[d] = 0
                else:
                    cols = self.boundary_columns(d, faces[d - 1])
                    ranks[d] = matrix_rank(cols, len(faces[d - 1]), field)
            return ranks[d]

        return {d: len(faces[d]) - boundary_rank(d) - boundary_rank(d + 1) for d in wanted}
