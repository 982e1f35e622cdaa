"""Exhaustive verification of the identities of the two Hopf algebras at small rank."""

from .base import Check, InvariantSuite, SuiteResult
from .registry import SuiteRegistry, create_default_registry

__all__ = [
    "Check",
    "InvariantSuite",
    "SuiteResult",
    "SuiteRegistry",
    "create_default_registry",
]
