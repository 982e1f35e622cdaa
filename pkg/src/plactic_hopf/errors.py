"""Exception hierarchy shared by all modules."""

from typing import Optional, Sequence


class PlacticHopfError(Exception):
    """Base class for all errors raised by this package."""
    pass


class InvalidInputError(PlacticHopfError, ValueError):
    """Error raised when an operation receives an argument outside its domain.

    Covers malformed text keys, duplicate letters, size or rank mismatches,
    non-interval restrictions and elements unknown to a poset.
    """
    pass


class PosetConstructionError(PlacticHopfError, RuntimeError):
    """Error raised when a relation does not generate a partial order.

    Attributes:
        witness: Elements of a directed cycle found in the relation, if any.
    """

    def __init__(self, message: str, witness: Optional[Sequence] = None):
        super().__init__(message)
        self.witness = list(witness) if witness is not None else []


class ResourceGuardError(PlacticHopfError, RuntimeError):
    """Error raised when a rank exceeds a soft limit and force is not set."""
    pass
