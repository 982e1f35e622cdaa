"""Registry for invariant suites."""

import logging
from typing import Optional

from ..errors import InvalidInputError
from .base import InvariantSuite, SuiteResult

logger = logging.getLogger(__name__)


class SuiteRegistry:
    """Registry of invariant suites addressable by name.

    Example:
        >>> registry = create_default_registry()
        >>> registry.run("lemma1", nmax=4).passed
        True
    """

    def __init__(self):
        """Initialize an empty registry."""
        self._suites: list[InvariantSuite] = []

    def register(self, suite: InvariantSuite) -> None:
        """Register a suite.

        Args:
            suite: An InvariantSuite instance; its name must not be taken.

        Raises:
            InvalidInputError: If a suite with the same name is registered.
        """
        if self.get_suite(suite.name) is not None:
            raise InvalidInputError(f"Suite {suite.name!r} is already registered")
        self._suites.append(suite)

    def unregister(self, name: str) -> bool:
        """Remove a suite by name.

        Returns:
            True if a suite was removed.
        """
        original_length = len(self._suites)
        self._suites = [s for s in self._suites if s.name != name]
        return len(self._suites) < original_length

    def get_suite(self, name: str) -> Optional[InvariantSuite]:
        """Suite registered under name, or None."""
        for suite in self._suites:
            if suite.name == name:
                return suite
        return None

    @property
    def names(self) -> list[str]:
        """Registered suite names in registration order."""
        return [s.name for s in self._suites]

    def describe(self) -> list[tuple[str, str]]:
        """(name, description) pairs in registration order."""
        return [(s.name, s.description) for s in self._suites]

    def run(self, name: str, nmax: int) -> SuiteResult:
        """Run one suite.

        Raises:
            InvalidInputError: If no suite has that name.
        """
        suite = self.get_suite(name)
        if suite is None:
            raise InvalidInputError(f"Unknown suite {name!r}. Available: all, {', '.join(self.names)} (see 'verify list')")
        return suite.run(nmax)

    def run_all(self, nmax: int, stop_on_failure: bool = False) -> list[SuiteResult]:
        """Run every suite in registration order.

        Args:
            nmax: Rank bound passed to each suite.
            stop_on_failure: Stop after the first failing suite.

        Returns:
            One result per suite that ran.
        """
        results = []
        for suite in self._suites:
            result = suite.run(nmax)
            results.append(result)
            if not result.passed and stop_on_failure:
                break
        failed = sum(1 for r in results if not r.passed)
        logger.info(f"Ran {len(results)} suites, {failed} failed")
        return results


def create_default_registry(seed: int = 0) -> SuiteRegistry:
    """Create a registry with every built-in suite.

    Args:
        seed: Seed for the suites that draw random data.

    Returns:
        A SuiteRegistry, lemma suites first.
    """
    from ..hopf.permutations import PERMUTATIONS
    from ..hopf.tableaux import TABLEAUX
    from .algebra import (
        BialgebraSuite,
        CoassociativitySuite,
        DualitySuite,
        LodayRoncoSuite,
        MonomialCoproductSuite,
        MultiplicativeDualSuite,
        PositivitySuite,
        PrimitivesSuite,
        QuotientSuite,
        TaskinSuite,
    )
    from .orders import (
        BelowTableauTriangleSuite,
        BelowTriangleSuite,
        RestrictionOrderSuite,
        TableauRestrictionOrderSuite,
        TableauTriangleOrderSuite,
        TriangleOrderSuite,
        WeakOrderSuite,
    )
    from .structure import (
        ConjugationSuite,
        CountingSuite,
        FactorizationSuite,
        KnuthSuite,
        MobiusSuite,
        MonoidSuite,
        PlacticCongruenceSuite,
        PlacticProductSuite,
        RSKSuite,
    )

    registry = SuiteRegistry()
    registry.register(RestrictionOrderSuite())
    registry.register(TriangleOrderSuite())
    registry.register(BelowTriangleSuite())
    registry.register(PlacticCongruenceSuite())
    registry.register(TableauTriangleOrderSuite())
    registry.register(TableauRestrictionOrderSuite())
    registry.register(BelowTableauTriangleSuite())
    registry.register(MonomialCoproductSuite(PERMUTATIONS, "thm1"))
    registry.register(MonomialCoproductSuite(TABLEAUX, "thm3"))
    registry.register(LodayRoncoSuite())
    registry.register(TaskinSuite())
    registry.register(DualitySuite())
    registry.register(MultiplicativeDualSuite())
    registry.register(WeakOrderSuite())
    registry.register(RSKSuite())
    registry.register(KnuthSuite())
    registry.register(PlacticProductSuite())
    registry.register(FactorizationSuite())
    registry.register(CountingSuite())
    registry.register(ConjugationSuite())
    registry.register(MonoidSuite())
    registry.register(MobiusSuite(seed))
    registry.register(CoassociativitySuite())
    registry.register(BialgebraSuite())
    registry.register(QuotientSuite())
    registry.register(PrimitivesSuite())
    registry.register(PositivitySuite())
    return registry
