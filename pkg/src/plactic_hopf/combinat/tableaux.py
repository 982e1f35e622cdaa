"""Young tableaux, Schensted insertion and the plactic monoid.

Tableaux are stored in English convention: row 1 is the longest and comes
first, columns increase downward. A tableau is standard when its entries are
exactly {1, ..., n}; a standard tableau is identified with its plactic class
through the insertion tableau P.

The products on tableaux are computed on representatives and mapped back
through P, so no sliding algorithm is needed.
"""

import logging
from bisect import bisect_left, bisect_right
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from ..errors import InvalidInputError
from .permutations import (
    Permutation,
    Word,
    WordLike,
    _letters,
    box,
    format_word,
    restrict,
    shift,
    standardize,
    triangle,
)

logger = logging.getLogger(__name__)

Shape = tuple[int, ...]


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram with distinct positive integers.

    Rows and columns strictly increase. Intermediate tableaux of Schensted
    insertion need not be standard, every other operation of this module
    works on standard tableaux.

    Attributes:
        rows: Rows from the top (longest) row down.
    """
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        entries = [x for row in rows for x in row]
        if any(not row for row in rows):
            raise InvalidInputError(f"Tableau has an empty row: {rows}")
        if any(x < 1 for x in entries) or len(set(entries)) != len(entries):
            raise InvalidInputError(f"Tableau entries must be distinct positive integers: {rows}")
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) > len(upper):
                raise InvalidInputError(f"Row lengths must weakly decrease: {rows}")
            if any(lower[j] <= upper[j] for j in range(len(lower))):
                raise InvalidInputError(f"Columns must strictly increase downward: {rows}")
        for row in rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise InvalidInputError(f"Rows must strictly increase: {rows}")

    def __len__(self) -> int:
        return sum(len(row) for row in self.rows)

    def __str__(self) -> str:
        return format_tableau(self)

    def __repr__(self) -> str:
        return f"Tableau({format_tableau(self)})"

    @property
    def rank(self) -> int:
        """Number of cells."""
        return len(self)

    @property
    def shape(self) -> Shape:
        """Row lengths from the top row down."""
        return tuple(len(row) for row in self.rows)

    @property
    def entries(self) -> frozenset[int]:
        """Set of entries."""
        return frozenset(x for row in self.rows for x in row)

    @property
    def is_standard(self) -> bool:
        """True iff the entries are exactly {1, ..., n}."""
        return self.entries == frozenset(range(1, len(self) + 1))

    def sort_key(self) -> tuple:
        """Canonical order: by rank, then shape (dominant first), then row reading."""
        return (len(self), tuple(-p for p in self.shape), tuple(x for row in self.rows for x in row))


EMPTY_TABLEAU = Tableau(())


def format_tableau(T: Tableau) -> str:
    """Render rows top to bottom joined by "/".

    Entries are concatenated unless some entry exceeds 9, in which case they
    are space separated. The empty tableau renders as "e".
    """
    if not T.rows:
        return "e"
    spaced = any(x > 9 for row in T.rows for x in row)
    sep = " " if spaced else ""
    return "/".join(sep.join(str(x) for x in row) for row in T.rows)


def require_standard(T: Tableau) -> Tableau:
    """Return T, or raise InvalidInputError if T is not standard."""
    if not T.is_standard:
        raise InvalidInputError(f"Tableau {T} is not standard")
    return T


def standard_tableau(rows: Iterable[Iterable[int]]) -> Tableau:
    """Build a standard tableau from its rows.

    The Tableau constructor checks the shape and the strict increase only;
    this also requires the entries to be exactly 1..n.

    Raises:
        InvalidInputError: If the rows do not form a standard Young tableau.
    """
    return require_standard(Tableau(tuple(tuple(row) for row in rows)))


def _insert_rows(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Row-insert x into mutable rows; return the (row, column) of the new cell."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r, 0
        row = rows[r]
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return r, j
        x, row[j] = row[j], x
        r += 1


def row_insert(T: Tableau, x: int) -> Tableau:
    """Schensted row insertion of x into T.

    x bumps the smallest entry greater than x in the first row, which is
    inserted into the second row, and so on.

    Raises:
        InvalidInputError: If x is already an entry of T or x < 1.
    """
    if x < 1 or x in T.entries:
        raise InvalidInputError(f"Cannot insert {x} into {T}")
    rows = [list(row) for row in T.rows]
    _insert_rows(rows, x)
    return Tableau(rows)


def rsk(sigma: WordLike) -> tuple[Tableau, Tableau]:
    """Schensted correspondence.

    Args:
        sigma: A permutation (or a word without repeated letters).

    Returns:
        The insertion tableau P and the recording tableau Q, of equal shape.
    """
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(_letters(sigma), start=1):
        r, c = _insert_rows(P, x)
        if r == len(Q):
            Q.append([])
        Q[r].append(step)
    return Tableau(P), Tableau(Q)


def insertion_tableau(sigma: WordLike) -> Tableau:
    """P(sigma), the left tableau of the Schensted correspondence."""
    P: list[list[int]] = []
    for x in _letters(sigma):
        _insert_rows(P, x)
    return Tableau(P)


def inverse_rsk(P: Tableau, Q: Tableau) -> Permutation:
    """Recover sigma from (P(sigma), Q(sigma)) by reverse bumping.

    Raises:
        InvalidInputError: If the shapes differ or the tableaux are not standard.
    """
    if P.shape != Q.shape:
        raise InvalidInputError(f"Shapes of {P} and {Q} differ")
    require_standard(P)
    require_standard(Q)
    rows = [list(row) for row in P.rows]
    where = {x: (r, c) for r, row in enumerate(Q.rows) for c, x in enumerate(row)}
    word = []
    for k in range(len(P), 0, -1):
        r, c = where[k]
        y = rows[r].pop()
        if not rows[r]:
            rows.pop()
        for above in range(r - 1, -1, -1):
            row = rows[above]
            j = bisect_left(row, y) - 1
            y, row[j] = row[j], y
        word.append(y)
    return Permutation(tuple(reversed(word)))


def reading_word(T: Tableau) -> Permutation:
    """Row reading word: rows from the bottom row up, each left to right.

    P(reading_word(T)) == T, which makes it the canonical representative of
    the plactic class of T.
    """
    return Permutation(tuple(x for row in reversed(T.rows) for x in row))


def _reading_letters(T: Tableau) -> tuple[int, ...]:
    return tuple(x for row in reversed(T.rows) for x in row)


def _partitions(n: int, largest: Optional[int] = None) -> list[Shape]:
    if n == 0:
        return [()]
    largest = n if largest is None else largest
    shapes = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            shapes.append((first,) + rest)
    return shapes


def partitions(n: int) -> list[Shape]:
    """Partitions of n, dominant (lexicographically largest) first."""
    return _partitions(n)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Tableau, ...]:
    if n == 0:
        return (EMPTY_TABLEAU,)
    found = []
    for T in _enumerate(n - 1):
        rows = T.rows
        for r in range(len(rows) + 1):
            # a cell can be added at the end of row r when it stays a partition
            if r == len(rows) or r == 0 or len(rows[r]) < len(rows[r - 1]):
                new_rows = [list(row) for row in rows]
                if r == len(rows):
                    new_rows.append([n])
                else:
                    new_rows[r].append(n)
                found.append(Tableau(new_rows))
    found.sort(key=Tableau.sort_key)
    logger.debug(f"Enumerated {len(found)} standard tableaux of rank {n}")
    return tuple(found)


def enumerate_tableaux(n: int) -> list[Tableau]:
    """All standard Young tableaux with entries {1, ..., n}.

    Tableaux are generated by adding the cell containing n at each addable
    corner of each tableau of rank n-1, then sorted by shape and row reading.

    Args:
        n: Rank, 0 <= n (10 is the practical limit).

    Returns:
        T_n in canonical order (1, 1, 2, 4, 10, 26, 76, ... elements).
    """
    if n < 0:
        raise InvalidInputError(f"Rank must be nonnegative, got {n}")
    return list(_enumerate(n))


def tableaux_of_shape(shape: Sequence[int]) -> list[Tableau]:
    """Standard tableaux of a given shape, in canonical order."""
    shape = tuple(shape)
    return [T for T in _enumerate(sum(shape)) if T.shape == shape]


def plactic_class(T: Tableau) -> list[Permutation]:
    """All permutations whose insertion tableau is T.

    Generated as inverse_rsk(T, Q) for every standard Q of the shape of T.
    """
    require_standard(T)
    members = [inverse_rsk(T, Q) for Q in tableaux_of_shape(T.shape)]
    return sorted(members, key=Permutation.sort_key)


def knuth_neighbors(w: WordLike) -> list[Word]:
    """Words one elementary Knuth move away from w.

    The moves are x j i k y <-> x j k i y and x i k j y <-> x k i j y for
    letters i < j < k, applied at every position in either direction.

    Args:
        w: A word without repeated letters.

    Returns:
        The distinct neighbours in lexicographic order.
    """
    letters = _letters(w)
    if len(set(letters)) != len(letters):
        raise InvalidInputError(f"Word has repeated letters: {format_word(letters)}")
    found = set()
    for p in range(len(letters) - 2):
        a, b, c = letters[p:p + 3]
        if b < a < c or c < a < b:
            # j i k <-> j k i: swap the last two letters
            found.add(letters[:p] + (a, c, b) + letters[p + 3:])
        if a < c < b or b < c < a:
            # i k j <-> k i j: swap the first two letters
            found.add(letters[:p] + (b, a, c) + letters[p + 3:])
    return sorted(found)


def knuth_closure(w: WordLike) -> list[Word]:
    """Breadth-first closure of w under Knuth moves, sorted."""
    start = _letters(w)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for neighbour in knuth_neighbors(current):
            if neighbour not in seen:
                seen.add(neighbour)
                queue.append(neighbour)
    return sorted(seen)


def triangle_tab(V: Tableau, U: Tableau) -> Tableau:
    """Left shifted product of tableaux: P(reading_word(V) (tri) reading_word(U))."""
    return insertion_tableau(triangle(reading_word(V), reading_word(U)))


def box_tab(A: Tableau, B: Tableau) -> Tableau:
    """Right shifted product of tableaux: P(reading_word(A) (box) reading_word(B))."""
    return insertion_tableau(box(reading_word(A), reading_word(B)))


def triangle_tab_all(factors: Sequence[Tableau]) -> Tableau:
    """Fold triangle_tab over factors from left to right."""
    result = EMPTY_TABLEAU
    for factor in factors:
        result = triangle_tab(result, factor)
    return result


def _column_insert(columns: list[list[int]], x: int) -> None:
    c = 0
    while True:
        if c == len(columns):
            columns.append([x])
            return
        column = columns[c]
        j = bisect_right(column, x)
        if j == len(column):
            column.append(x)
            return
        x, column[j] = column[j], x
        c += 1


def fall_onto(V: Tableau, U: Tableau) -> Tableau:
    """Let V shifted by |U| fall onto U.

    Column insertion of the shifted reading word of V, read from right to
    left, into U. Gives the same tableau as triangle_tab(V, U) without going
    through the row reading word of the product.
    """
    columns: list[list[int]] = []
    for c in range(U.shape[0] if U.rows else 0):
        columns.append([row[c] for row in U.rows if c < len(row)])
    for x in reversed(shift(_reading_letters(V), len(U))):
        _column_insert(columns, x)
    height = max((len(col) for col in columns), default=0)
    rows = [[col[r] for col in columns if r < len(col)] for r in range(height)]
    return Tableau(rows)


def _interval_letters(letters: Iterable[int]) -> list[int]:
    values = sorted(set(letters))
    if values and values != list(range(values[0], values[-1] + 1)):
        raise InvalidInputError(f"Not an interval: {values}")
    return values


def restrict_std(T: Tableau, interval: Iterable[int]) -> Tableau:
    """st(T|I): P(standardize(restrict(u, I))) for any representative u of T.

    Args:
        T: A standard tableau.
        interval: Consecutive integers, e.g. range(2, 5).

    Returns:
        The restricted and standardized tableau.

    Raises:
        InvalidInputError: If the letters do not form an interval.
    """
    values = _interval_letters(interval)
    sub = restrict(_reading_letters(T), values)
    if not sub:
        return EMPTY_TABLEAU
    return insertion_tableau(standardize(sub))


def _triangle_splits(T: Tableau) -> Iterator[tuple[int, Tableau, Tableau]]:
    n = len(T)
    for p in range(1, n):
        U = restrict_std(T, range(1, p + 1))
        V = restrict_std(T, range(p + 1, n + 1))
        if triangle_tab(V, U) == T:
            yield p, V, U


def triangle_split_points(T: Tableau) -> list[int]:
    """Sizes p in 1..n-1 of a right factor U with T = V (tri) U."""
    return [p for p, _, _ in _triangle_splits(T)]


def is_triangle_indecomposable_tab(T: Tableau) -> bool:
    """True iff T is not V (tri) U for nonempty V, U.

    Raises:
        InvalidInputError: For the empty tableau.
    """
    if not len(T):
        raise InvalidInputError("The empty tableau is neither decomposable nor indecomposable")
    return next(_triangle_splits(T), None) is None


def triangle_factorize_tab(T: Tableau) -> list[Tableau]:
    """Factor T into triangle-indecomposable tableaux.

    The smallest split point gives the rightmost factor; the rest is factored
    recursively, so that triangle_tab_all(result) == T.
    """
    factors: list[Tableau] = []
    current = T
    while len(current):
        split = next(_triangle_splits(current), None)
        if split is None:
            factors.append(current)
            break
        _, current, U = split
        factors.append(U)
    return list(reversed(factors))


def count_indecomposable(n: int) -> int:
    """Number of triangle-indecomposable tableaux in T_n (1, 1, 1, 3, 7, 23, ...)."""
    if n < 1:
        raise InvalidInputError(f"Rank must be at least 1, got {n}")
    return sum(1 for T in enumerate_tableaux(n) if is_triangle_indecomposable_tab(T))

