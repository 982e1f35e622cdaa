"""The right weak order on S_n and the Taskin order on T_n."""

import logging
import time
from functools import lru_cache
from typing import Union

from ..combinat.permutations import Permutation, permutations_of, weak_covers
from ..combinat.tableaux import Tableau, enumerate_tableaux, insertion_tableau
from ..errors import InvalidInputError
from .base import FinitePoset

logger = logging.getLogger(__name__)

# |S_7| = 5040 and |T_7| = 232; beyond that the dense matrices get large
SOFT_RANK_LIMIT = 7


def _warn_if_large(n: int) -> None:
    if n > SOFT_RANK_LIMIT:
        logger.warning(f"Building a rank {n} poset; this may take a long time and a lot of memory")


@lru_cache(maxsize=None)
def weak_order_poset(n: int) -> FinitePoset[Permutation]:
    """Right weak order on S_n, generated by weak_covers.

    Args:
        n: Rank (0 <= n; 7 is the soft limit).

    Returns:
        The poset, elements in lexicographic order.
    """
    if n < 0:
        raise InvalidInputError(f"Rank must be nonnegative, got {n}")
    _warn_if_large(n)
    start = time.perf_counter()
    elements = permutations_of(n)
    pairs = [(u, v) for u in elements for v in weak_covers(u)]
    poset = FinitePoset.from_covers(elements, pairs)
    logger.info(
        f"Weak order on S_{n}: {len(elements)} elements, {len(pairs)} covers "
        f"({time.perf_counter() - start:.2f}s)"
    )
    return poset


@lru_cache(maxsize=None)
def taskin_poset(n: int) -> FinitePoset[Tableau]:
    """Smallest order on T_n for which sigma -> P(sigma) is increasing.

    The generating relation is {(P(u), P(v)) : v covers u in the weak order},
    without the pairs where P(u) = P(v). Construction fails if the closure is
    not antisymmetric.

    Args:
        n: Rank (0 <= n; 7 is the soft limit).

    Returns:
        The poset, elements in the canonical tableau order.

    Raises:
        PosetConstructionError: If the generated relation has a cycle.
    """
    if n < 0:
        raise InvalidInputError(f"Rank must be nonnegative, got {n}")
    _warn_if_large(n)
    start = time.perf_counter()
    perms = permutations_of(n)
    image = {sigma: insertion_tableau(sigma) for sigma in perms}
    pairs = set()
    for u in perms:
        for v in weak_covers(u):
            if image[u] != image[v]:
                pairs.add((image[u], image[v]))
    elements = enumerate_tableaux(n)
    poset = FinitePoset.from_covers(elements, sorted(pairs, key=lambda p: (p[0].sort_key(), p[1].sort_key())))
    logger.info(
        f"Taskin order on T_{n}: {len(elements)} elements, {len(pairs)} generating relations "
        f"({time.perf_counter() - start:.2f}s)"
    )
    return poset


def poset_for(key: Union[Permutation, Tableau]) -> FinitePoset:
    """The order of the rank of key: weak order for permutations, Taskin order for tableaux."""
    if isinstance(key, Permutation):
        return weak_order_poset(len(key))
    if isinstance(key, Tableau):
        return taskin_poset(len(key))
    raise InvalidInputError(f"No poset for basis key {key!r}")
