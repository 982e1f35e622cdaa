"""Finite posets given by a generating relation."""

import logging
import threading
from functools import cached_property
from pathlib import Path
from typing import Callable, Generic, Hashable, Iterable, Optional, Sequence, TypeVar

import networkx as nx
import numpy as np

from ..errors import InvalidInputError, PosetConstructionError

logger = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)


class FinitePoset(Generic[K]):
    """A finite partial order on hashable keys.

    The order is the reflexive-transitive closure of a generating relation
    (typically the cover relation). Reachability is stored as a read-only
    dense boolean matrix, so comparisons are O(1). Möbius values are computed
    on demand, one row mu(x, .) at a time, and memoized under a lock; a
    poset is safe to share between threads once built.

    Example:
        >>> P = FinitePoset.from_covers(["a", "b", "c"], [("a", "b"), ("b", "c")])
        >>> P.mobius("a", "c")
        0
    """

    def __init__(self, elements: Sequence[K], graph: nx.DiGraph, reach: np.ndarray, order: list[int]):
        """Initialize from validated parts; use from_covers instead."""
        self._elements = list(elements)
        self._index = {x: i for i, x in enumerate(self._elements)}
        self._graph = graph
        self._reach = reach
        self._order = order
        self._position = np.empty(len(order), dtype=np.int64)
        self._position[order] = np.arange(len(order))
        self._mobius_rows: dict[int, dict[int, int]] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_covers(cls, elements: Iterable[K], cover_pairs: Iterable[tuple[K, K]]) -> "FinitePoset[K]":
        """Build the order generated by pairs x < y.

        Args:
            elements: The ground set, in the order used for listings.
            cover_pairs: Pairs (x, y) meaning x < y; need not be covers, the
                closure is the same.

        Returns:
            The poset.

        Raises:
            InvalidInputError: If a pair mentions an unknown element.
            PosetConstructionError: If the relation has a directed cycle
                (including x < x), which would break antisymmetry.
        """
        elements = list(elements)
        index = {x: i for i, x in enumerate(elements)}
        if len(index) != len(elements):
            raise InvalidInputError("Poset elements must be distinct")

        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(elements)))
        for x, y in cover_pairs:
            if x not in index or y not in index:
                raise InvalidInputError(f"Relation {x} < {y} mentions an unknown element")
            graph.add_edge(index[x], index[y])

        try:
            cycle = nx.find_cycle(graph)
        except nx.NetworkXNoCycle:
            cycle = None
        if cycle is not None:
            witness = [elements[u] for u, _ in cycle]
            raise PosetConstructionError(
                "Relation is not antisymmetric, cycle: " + " < ".join(str(w) for w in witness + witness[:1]),
                witness=witness,
            )

        order = list(nx.topological_sort(graph))
        n = len(elements)
        reach = np.zeros((n, n), dtype=bool)
        for i in reversed(order):
            reach[i, i] = True
            for j in graph.successors(i):
                reach[i] |= reach[j]
        reach.flags.writeable = False
        logger.debug(f"Built poset with {n} elements and {graph.number_of_edges()} generating relations")
        return cls(elements, graph, reach, order)

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def __iter__(self):
        return iter(self._elements)

    @property
    def elements(self) -> list[K]:
        """Elements in listing order."""
        return list(self._elements)

    @property
    def reach(self) -> np.ndarray:
        """Read-only matrix with reach[i, j] iff elements[i] <= elements[j]."""
        return self._reach

    def index_of(self, x: K) -> int:
        """Position of x in the listing order.

        Raises:
            InvalidInputError: If x is not an element.
        """
        try:
            return self._index[x]
        except KeyError:
            raise InvalidInputError(f"{x} is not an element of this poset") from None

    def leq(self, x: K, y: K) -> bool:
        """True iff x <= y."""
        return bool(self._reach[self.index_of(x), self.index_of(y)])

    def _sorted(self, indices: np.ndarray) -> list[K]:
        return [self._elements[i] for i in sorted(indices.tolist())]

    def interval(self, x: K, y: K) -> list[K]:
        """Elements z with x <= z <= y, empty when x is not below y."""
        i, j = self.index_of(x), self.index_of(y)
        return self._sorted(np.flatnonzero(self._reach[i] & self._reach[:, j]))

    def upset(self, x: K) -> list[K]:
        """Elements w with x <= w."""
        return self._sorted(np.flatnonzero(self._reach[self.index_of(x)]))

    def downset(self, y: K) -> list[K]:
        """Elements z with z <= y."""
        return self._sorted(np.flatnonzero(self._reach[:, self.index_of(y)]))

    def minimal(self) -> list[K]:
        """Elements with nothing strictly below them."""
        return self._sorted(np.flatnonzero(self._reach.sum(axis=0) == 1))

    def maximal(self) -> list[K]:
        """Elements with nothing strictly above them."""
        return self._sorted(np.flatnonzero(self._reach.sum(axis=1) == 1))

    def _mobius_row(self, i: int) -> dict[int, int]:
        with self._lock:
            row = self._mobius_rows.get(i)
            if row is not None:
                return row
            above = np.flatnonzero(self._reach[i])
            above = above[np.argsort(self._position[above])]
            row = {}
            for z in above.tolist():
                if z == i:
                    row[z] = 1
                    continue
                below = np.flatnonzero(self._reach[i] & self._reach[:, z])
                row[z] = -sum(row[w] for w in below.tolist() if w != z)
            self._mobius_rows[i] = row
            return row

    def mobius(self, x: K, y: K) -> int:
        """Möbius function mu(x, y); 0 when x is not below y.

        mu(x, x) = 1 and mu(x, y) = -sum of mu(x, z) over x <= z < y.
        """
        i, j = self.index_of(x), self.index_of(y)
        return self._mobius_row(i).get(j, 0)

    def mobius_upset(self, x: K) -> list[tuple[K, int]]:
        """Pairs (w, mu(x, w)) for every w >= x, in listing order."""
        row = self._mobius_row(self.index_of(x))
        return [(self._elements[w], row[w]) for w in sorted(row)]

    @cached_property
    def hasse_edges(self) -> list[tuple[K, K]]:
        """Cover relations x < y with nothing strictly between them."""
        edges = []
        for i, j in sorted(self._graph.edges()):
            if int(np.count_nonzero(self._reach[i] & self._reach[:, j])) == 2:
                edges.append((self._elements[i], self._elements[j]))
        return edges

    def export_lines(self, format_key: Callable[[K], str] = str) -> list[str]:
        """Cover edge list, one "x < y" line per cover."""
        return [f"{format_key(x)} < {format_key(y)}" for x, y in self.hasse_edges]


def write_edge_list(poset: FinitePoset, path: Path, format_key: Optional[Callable] = None) -> int:
    """Write the cover edge list of a poset to a text file.

    Args:
        poset: The poset to export.
        path: Destination file.
        format_key: Key renderer, str by default.

    Returns:
        Number of cover lines written.
    """
    lines = poset.export_lines(format_key or str)
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    logger.info(f"Wrote {len(lines)} cover relations to {path}")
    return len(lines)
