"""Exception hierarchy shared by every stablequbo module."""

from typing import Optional


class StableQuboError(Exception):
    """Base class for all errors raised by stablequbo."""


# ~~ DIMACS ingestion ~~ #


class DimacsParseError(StableQuboError):
    """A DIMACS file could not be parsed.

    Parameters
    ----------
    line : Optional[int]
        1-based line number of the offending line, None when the error is global
    message : str
        Human readable description
    """

    def __init__(self, line: Optional[int], message: str) -> None:
        self.line = line
        self.message = message
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class MissingHeaderError(DimacsParseError):
    pass


class DuplicateHeaderError(DimacsParseError):
    pass


class EndpointOutOfRangeError(DimacsParseError):
    pass


class SelfLoopError(DimacsParseError):
    pass


class MalformedTokenError(DimacsParseError):
    pass


# ~~ graph primitives ~~ #


class VertexOutOfRangeError(StableQuboError, IndexError):
    """A vertex id does not belong to the graph it is used with."""


class InvalidOrderingError(StableQuboError, ValueError):
    """A vertex ordering is not a permutation of the vertex set."""


class SizeGuardError(StableQuboError, ValueError):
    """An oracle-backed check was called on a graph too large for it."""


# ~~ QUBO ~~ #


class InvalidPenaltyError(StableQuboError, ValueError):
    """The penalty parameter is not a positive rational."""


class EnumerationLimitError(StableQuboError, ValueError):
    """Exhaustive QUBO enumeration was requested on too many variables."""


class RescaleError(StableQuboError, ValueError):
    """Coefficients cannot be rescaled (all of them are zero)."""


# ~~ samplers ~~ #


class SamplerError(StableQuboError):
    """A sampler failed to produce a sample set."""


class ExternalTransportError(SamplerError):
    """The external sampler process or endpoint could not be reached or failed."""


class MalformedResponseError(SamplerError):
    """The external sampler answered with something that is not a 0/1 line per sample."""


class AssignmentLengthError(SamplerError):
    """The external sampler returned an assignment of the wrong length."""


# ~~ harness ~~ #


class InstanceFetchError(StableQuboError):
    """An instance could not be downloaded or found in the cache."""


class ChecksumMismatchError(InstanceFetchError):
    """A downloaded or cached instance does not match its recorded checksum."""


class ReportFormatError(StableQuboError, ValueError):
    """An unknown report format was requested."""
