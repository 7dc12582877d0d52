"""Monomials and monomial ideals over a fixed ambient variable list."""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..core.errors import AmbientMismatch
from ..core.hypergraph import EdgeLike, Hypergraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Monomial:
    """Exponent vector over the ambient variables."""

    exponents: Tuple[int, ...]

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "Monomial":
        exps = [0] * n
        for i in support:
            exps[i] = 1
        return cls(tuple(exps))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.exponents) if a)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other): the colon generator of self by other."""
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def format(self, variables: Sequence[str]) -> str:
        parts = []
        for name, a in zip(variables, self.exponents):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) if parts else "1"


def _sort_key(m: Monomial) -> Tuple[int, Tuple[int, ...]]:
    return m.degree, tuple(-a for a in m.exponents)


def minimal_generators(monomials: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Drop duplicates and monomials divisible by another one."""
    kept: List[Monomial] = []
    for m in sorted(set(monomials), key=_sort_key):
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators, in sorted order."""

    variables: Tuple[str, ...]
    generators: Tuple[Monomial, ...]

    @classmethod
    def from_generators(
        cls, variables: Sequence[str], generators: Iterable[Monomial]
    ) -> "MonomialIdeal":
        variables = tuple(variables)
        gens = list(generators)
        for g in gens:
            if len(g.exponents) != len(variables):
                raise AmbientMismatch(
                    f"Monomial of length {len(g.exponents)} in a ring with {len(variables)} variables"
                )
        return cls(variables, minimal_generators(gens))

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MonomialIdeal":
        return cls(tuple(variables), ())

    @property
    def n(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.is_one() for g in self.generators)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def max_exponents(self) -> Tuple[int, ...]:
        if not self.generators:
            return (0,) * self.n
        return tuple(max(col) for col in zip(*(g.exponents for g in self.generators)))

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _check_ambient(self, other)
        kept: List[Monomial] = []
        for g in self.generators:
            for h in other.generators:
                m = g * h
                # skip products already divisible by a kept generator
                if not any(k.divides(m) for k in kept):
                    kept.append(m)
        return MonomialIdeal.from_generators(self.variables, kept)

    def format(self) -> str:
        return "(" + ", ".join(g.format(self.variables) for g in self.generators) + ")"

    def __str__(self) -> str:
        return self.format()

    def __len__(self) -> int:
        return len(self.generators)


def _check_ambient(J1: MonomialIdeal, J2: MonomialIdeal) -> None:
    if J1.variables != J2.variables:
        raise AmbientMismatch("Ideals live in different polynomial rings")


def mono(G: Hypergraph, e: EdgeLike) -> Monomial:
    """Squarefree monomial of a vertex set of G."""
    return Monomial.from_support(G.n, G.resolve_edge(e))


def edge_ideal(G: Hypergraph) -> MonomialIdeal:
    """I(G): one squarefree generator per edge."""
    return MonomialIdeal(
        G.names, minimal_generators(Monomial.from_support(G.n, e) for e in G.edges)
    )


def variable_ideal(variables: Sequence[str], indices: Iterable[int]) -> MonomialIdeal:
    n = len(variables)
    return MonomialIdeal.from_generators(
        variables, (Monomial.from_support(n, [i]) for i in indices)
    )


def power(J: MonomialIdeal, s: int) -> MonomialIdeal:
    """Minimal generators of J^s."""
    if s < 1:
        raise ValueError("power requires s >= 1")
    result = J
    for _ in range(s - 1):
        result = result.product(J)
    logger.debug("power %d has %d generators", s, len(result))
    return result


def colon(J: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """J : m, generated by g / gcd(g, m)."""
    if len(m.exponents) != J.n:
        raise AmbientMismatch("Monomial and ideal live in different rings")
    return MonomialIdeal.from_generators(J.variables, (g.quotient(m) for g in J.generators))


def ideal_sum(J1: MonomialIdeal, J2: MonomialIdeal) -> MonomialIdeal:
    """J1 + J2."""
    _check_ambient(J1, J2)
    return MonomialIdeal.from_generators(J1.variables, J1.generators + J2.generators)
