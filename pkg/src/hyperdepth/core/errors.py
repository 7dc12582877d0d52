"""Exception hierarchy for hyperdepth."""

from typing import Any, Iterable, Optional


class HyperdepthError(ValueError):
    """Base class for all hyperdepth errors."""


# Hypergraph validation

class ValidationError(HyperdepthError):
    """Input does not describe a simple hypergraph."""


class DuplicateVertex(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class EdgeContainment(ValidationError):
    """One edge is contained in another."""

    def __init__(self, smaller: Iterable[str], larger: Iterable[str]):
        self.smaller = tuple(smaller)
        self.larger = tuple(larger)
        super().__init__(
            f"Edge {{{', '.join(self.smaller)}}} is contained in "
            f"{{{', '.join(self.larger)}}}"
        )


class UnknownVertex(ValidationError):
    pass


class UnknownEdge(ValidationError):
    pass


class EmptyEdge(ValidationError):
    pass


# Recognition

class CapExceeded(HyperdepthError):
    pass


# Algebra

class AmbientMismatch(HyperdepthError):
    pass


class UnsupportedField(HyperdepthError):
    pass


class UnitIdeal(HyperdepthError):
    pass


class ZeroIdeal(HyperdepthError):
    pass


class CharacteristicMismatch(HyperdepthError):
    """Ranks modulo the check prime disagree with the rationals."""

    def __init__(self, message: str, prime: int, modular: Any, rational: Any):
        self.prime = prime
        self.modular = modular
        self.rational = rational
        super().__init__(message)


# Verifier

class NotAHyperforest(HyperdepthError):
    pass


class NoBigEdge(HyperdepthError):
    pass


class NotAForestGraph(HyperdepthError):
    pass


class InvalidPartition(HyperdepthError):
    pass


class ConnectivityViolated(HyperdepthError):
    pass


class GoodLeafMissing(HyperdepthError):
    pass


class CertificateRejected(HyperdepthError):
    """Replaying a certificate failed at some node."""

    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path
        super().__init__(f"{message} (at node {path})" if path else message)


# Generators / IO

class InvalidConfig(HyperdepthError):
    pass


class ParseError(HyperdepthError):
    """Malformed input file; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
