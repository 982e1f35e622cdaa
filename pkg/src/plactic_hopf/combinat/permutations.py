"""Words, permutations and the shifted concatenation products.

Permutations are written in one-line notation with 1-based values: the
permutation sigma of {1, ..., n} is the word sigma(1) sigma(2) ... sigma(n).
The empty permutation (n = 0) is a regular value and acts as the unit of both
shifted concatenations.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

from ..errors import InvalidInputError

# A word is any finite sequence of positive integers.
Word = tuple[int, ...]


def format_word(letters: Sequence[int]) -> str:
    """Render a word as digits, or comma separated when a letter exceeds 9.

    Args:
        letters: The letters to render.

    Returns:
        Text form; the empty word is rendered as "e".
    """
    if not letters:
        return "e"
    if all(x <= 9 for x in letters):
        return "".join(str(x) for x in letters)
    return ",".join(str(x) for x in letters)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    Attributes:
        word: The letters sigma(1), ..., sigma(n).
    """
    word: Word

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidInputError(f"Not a permutation of 1..{len(word)}: {format_word(word)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        """Return 12...n."""
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """Return n...21, the maximum of the weak order."""
        return cls(tuple(range(n, 0, -1)))

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __getitem__(self, position: int) -> int:
        return self.word[position]

    def __str__(self) -> str:
        return format_word(self.word)

    def __repr__(self) -> str:
        return f"Permutation({format_word(self.word)})"

    @property
    def rank(self) -> int:
        """Size n of the permutation."""
        return len(self.word)

    def sort_key(self) -> tuple:
        """Canonical order: by rank, then lexicographically."""
        return (len(self.word), self.word)


EMPTY = Permutation(())

WordLike = Union[Permutation, Sequence[int]]


def _letters(w: WordLike) -> Word:
    return w.word if isinstance(w, Permutation) else tuple(w)


def permutations_of(n: int) -> list[Permutation]:
    """List S_n in lexicographic order.

    Args:
        n: Rank.

    Returns:
        All n! permutations of {1, ..., n}.
    """
    return list(_permutations(n))


@lru_cache(maxsize=None)
def _permutations(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in itertools.permutations(range(1, n + 1)))


def _require_distinct(letters: Word) -> None:
    if len(set(letters)) != len(letters):
        raise InvalidInputError(f"Word has repeated letters: {format_word(letters)}")
    if any(x < 1 for x in letters):
        raise InvalidInputError(f"Word has letters below 1: {letters}")


def standardize(w: WordLike) -> Permutation:
    """Replace each letter by its rank among the letters of the word.

    Args:
        w: A word without repeated letters.

    Returns:
        The standard permutation st(w), e.g. st(5713) = 3412.

    Raises:
        InvalidInputError: If a letter is repeated.
    """
    letters = _letters(w)
    _require_distinct(letters)
    ranks = {x: i for i, x in enumerate(sorted(letters), start=1)}
    return Permutation(tuple(ranks[x] for x in letters))


def restrict(w: WordLike, letters: Iterable[int]) -> Word:
    """Keep the letters of w that belong to a set, in their original order.

    This is sigma|I (remove the digits not in I), not the restriction of the
    function sigma to I.

    Args:
        w: The word to restrict.
        letters: Any finite set of positive integers.

    Returns:
        The subword, possibly empty.
    """
    keep = set(letters)
    return tuple(x for x in _letters(w) if x in keep)


def inversion_set(w: WordLike) -> frozenset[tuple[int, int]]:
    """Inversions by values: pairs (j, i) with j > i and j left of i.

    Args:
        w: A word without repeated letters.

    Returns:
        The set of inversions.
    """
    letters = _letters(w)
    _require_distinct(letters)
    return frozenset(
        (a, b)
        for k, a in enumerate(letters)
        for b in letters[k + 1:]
        if a > b
    )


def leq_weak(u: Permutation, v: Permutation) -> bool:
    """Right weak order: u <= v iff Inv(u) is contained in Inv(v).

    Raises:
        InvalidInputError: If the permutations have different sizes.
    """
    if len(u) != len(v):
        raise InvalidInputError(f"Cannot compare {u} and {v}: sizes {len(u)} and {len(v)} differ")
    return inversion_set(u) <= inversion_set(v)


def weak_covers(u: Permutation) -> list[Permutation]:
    """Upper covers of u in the right weak order.

    The adjacent transposition acts on positions: letters at positions i and
    i+1 are swapped whenever u(i) < u(i+1), adding exactly one inversion.

    Args:
        u: A permutation.

    Returns:
        The covers, ordered by the position of the swap.
    """
    word = u.word
    covers = []
    for i in range(len(word) - 1):
        if word[i] < word[i + 1]:
            swapped = word[:i] + (word[i + 1], word[i]) + word[i + 2:]
            covers.append(Permutation(swapped))
    return covers


def shift(w: WordLike, offset: int) -> Word:
    """Add offset to every letter of w."""
    return tuple(x + offset for x in _letters(w))


def box(u: Permutation, v: Permutation) -> Permutation:
    """Right shifted concatenation u followed by v shifted up by |u|.

    Example: box(231, 12) = 23145.
    """
    return Permutation(u.word + shift(v, len(u)))


def triangle(v: Permutation, u: Permutation) -> Permutation:
    """Left shifted concatenation: v shifted up by |u|, followed by u.

    Example: triangle(12, 231) = 45231.
    """
    return Permutation(shift(v, len(u)) + u.word)


def triangle_all(factors: Sequence[Permutation]) -> Permutation:
    """Fold triangle over factors from left to right (EMPTY for no factor)."""
    result = EMPTY
    for factor in factors:
        result = triangle(result, factor)
    return result


def reverse(w: WordLike) -> WordLike:
    """Reverse a word; the reversal of a permutation is a permutation."""
    if isinstance(w, Permutation):
        return Permutation(w.word[::-1])
    return tuple(reversed(tuple(w)))


def global_descents(sigma: Permutation) -> frozenset[int]:
    """Positions i in 1..n-1 where every letter up to i exceeds every letter after.

    Example: 78465213 has global descents {2, 5}.
    """
    word = sigma.word
    n = len(word)
    descents = set()
    prefix_min = n + 1
    for i in range(1, n):
        prefix_min = min(prefix_min, word[i - 1])
        # the suffix after i holds {1..n-i} exactly when every prefix letter exceeds it
        if prefix_min == n - i + 1:
            descents.add(i)
    return frozenset(descents)


def triangle_factorize(sigma: Permutation) -> list[Permutation]:
    """Split sigma into triangle-indecomposable factors at its global descents.

    The factors satisfy sigma = f1 (tri) f2 (tri) ... (tri) fk, the last
    factor occupying the rightmost block of the word.

    Example: 78465213 -> [12, 132, 213].
    """
    if not len(sigma):
        return []
    cuts = [0] + sorted(global_descents(sigma)) + [len(sigma)]
    return [standardize(sigma.word[a:b]) for a, b in zip(cuts, cuts[1:])]


def is_triangle_indecomposable(sigma: Permutation) -> bool:
    """True iff sigma has no global descent.

    Raises:
        InvalidInputError: For the empty permutation, the monoid unit.
    """
    if not len(sigma):
        raise InvalidInputError("The empty permutation is neither decomposable nor indecomposable")
    return not global_descents(sigma)
