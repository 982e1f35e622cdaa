"""Engine configuration."""

import logging
from dataclasses import dataclass

from .errors import ResourceGuardError

logger = logging.getLogger(__name__)


@dataclass
class EngineConfig:
    """Configuration for command-line computations.

    Attributes:
        poset_rank_limit: Largest rank accepted for computations that build a
            weak order or Taskin poset (|S_8| = 40320 is refused by default).
        enumeration_rank_limit: Largest rank accepted for enumeration-only
            computations.
        force: Accept ranks above the soft limits (a warning is logged).
        french: Render tableaux in French convention (row 1 at the bottom).
        json_output: Emit machine-readable JSON instead of text.
        seed: Seed for randomized property checks.
    """
    poset_rank_limit: int = 7
    enumeration_rank_limit: int = 10
    force: bool = False
    french: bool = False
    json_output: bool = False
    seed: int = 0

    def check_poset_rank(self, n: int) -> None:
        """Refuse poset-backed work above the soft limit.

        Args:
            n: Requested rank.

        Raises:
            ResourceGuardError: If n exceeds the limit and force is not set.
        """
        self._check(n, self.poset_rank_limit, "poset-backed")

    def check_enumeration_rank(self, n: int) -> None:
        """Refuse enumeration work above the soft limit.

        Args:
            n: Requested rank.

        Raises:
            ResourceGuardError: If n exceeds the limit and force is not set.
        """
        self._check(n, self.enumeration_rank_limit, "enumeration")

    def _check(self, n: int, limit: int, kind: str) -> None:
        if n <= limit:
            return
        if not self.force:
            raise ResourceGuardError(
                f"Rank {n} exceeds the {kind} limit of {limit}. "
                f"Pass --force to run it anyway."
            )
        logger.warning(f"Rank {n} exceeds the {kind} limit of {limit}; continuing because of --force")
