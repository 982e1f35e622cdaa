"""Closed-form counts used as independent oracles for the enumerations."""

from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from ..errors import InvalidInputError


def conjugate_shape(shape: Sequence[int]) -> tuple[int, ...]:
    """Column lengths of a Young diagram."""
    if not shape:
        return ()
    return tuple(sum(1 for part in shape if part > j) for j in range(shape[0]))


def hook_length_count(shape: Sequence[int]) -> int:
    """Number of standard tableaux of a shape, n! over the product of hook lengths.

    Example:
        >>> hook_length_count((3, 2))
        5
    """
    shape = tuple(shape)
    if any(a < b for a, b in zip(shape, shape[1:])) or any(p < 1 for p in shape):
        raise InvalidInputError(f"Not a partition: {shape}")
    columns = conjugate_shape(shape)
    hooks = prod(
        (shape[i] - j) + (columns[j] - i) - 1
        for i in range(len(shape))
        for j in range(shape[i])
    )
    return factorial(sum(shape)) // hooks


@lru_cache(maxsize=None)
def involution_count(n: int) -> int:
    """Involutions of S_n, which equals the number of standard tableaux of size n.

    Follows t(n) = t(n-1) + (n-1) t(n-2).
    """
    if n < 0:
        raise InvalidInputError(f"Rank must be nonnegative, got {n}")
    if n < 2:
        return 1
    return involution_count(n - 1) + (n - 1) * involution_count(n - 2)


@lru_cache(maxsize=None)
def indecomposable_permutation_count(n: int) -> int:
    """Permutations of S_n without global descent.

    Every permutation factors uniquely as v (tri) u with u indecomposable of
    some size k, so n! = sum over k of c(k) (n-k)!.
    """
    if n < 1:
        raise InvalidInputError(f"Rank must be at least 1, got {n}")
    return factorial(n) - sum(indecomposable_permutation_count(k) * factorial(n - k) for k in range(1, n))
