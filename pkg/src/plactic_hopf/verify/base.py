"""Base invariant suite interface."""

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import asdict, dataclass
from typing import Any, Iterator, Optional

logger = logging.getLogger(__name__)

# One check: whether it held, and the values it was made on.
Check = tuple[bool, tuple]


@dataclass
class SuiteResult:
    """Outcome of running an invariant suite.

    Attributes:
        name: Suite name.
        nmax: Rank bound the suite ran with.
        passed: True iff no check failed.
        checked: Number of checks made (up to and including the first failure).
        counterexample: Values of the first failing check, rendered as text.
        elapsed: Wall time in seconds.
    """
    name: str
    nmax: int
    passed: bool
    checked: int
    counterexample: Optional[str] = None
    elapsed: float = 0.0

    def to_json(self) -> dict[str, Any]:
        return asdict(self)

    def summary(self) -> str:
        """One-line report."""
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name} (nmax={self.nmax}, {self.checked} checks, {self.elapsed:.2f}s)"
        if self.counterexample:
            line += f"\n  counterexample: {self.counterexample}"
        return line


class InvariantSuite(ABC):
    """Abstract base class for exhaustive checks of an identity at small rank.

    Subclasses yield one Check per case; run() stops at the first failure and
    reports the values it was made on.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Name used on the command line."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """One sentence stating the identity."""
        pass

    @abstractmethod
    def checks(self, nmax: int) -> Iterator[Check]:
        """Yield (holds, values) for every case up to rank nmax.

        Args:
            nmax: Rank bound; each suite states how it applies it.
        """
        pass

    def run(self, nmax: int) -> SuiteResult:
        """Run all checks up to nmax, stopping at the first failure."""
        logger.info(f"Running {self.name} up to rank {nmax}")
        start = time.perf_counter()
        checked = 0
        counterexample = None
        for holds, values in self.checks(nmax):
            checked += 1
            if not holds:
                counterexample = ", ".join(str(v) for v in values)
                logger.warning(f"{self.name} failed on {counterexample}")
                break
        result = SuiteResult(
            name=self.name,
            nmax=nmax,
            passed=counterexample is None,
            checked=checked,
            counterexample=counterexample,
            elapsed=time.perf_counter() - start,
        )
        logger.info(f"{self.name}: {checked} checks in {result.elapsed:.2f}s")
        return result
