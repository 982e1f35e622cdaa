"""Suites for the weak order on permutations and the Taskin order on tableaux."""

from typing import Iterator

from ..combinat.permutations import (
    Permutation,
    inversion_set,
    restrict,
    standardize,
    triangle,
)
from ..combinat.tableaux import enumerate_tableaux, restrict_std, triangle_tab
from ..poset.base import FinitePoset
from ..poset.builders import taskin_poset, weak_order_poset
from .base import Check, InvariantSuite


def _related(poset: FinitePoset) -> Iterator[tuple]:
    for x in poset:
        for y in poset.upset(x):
            yield x, y


def _intervals(n: int) -> Iterator[range]:
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            yield range(a, b + 1)


def _label(interval: range) -> str:
    return f"I=[{interval.start},{interval.stop - 1}]"


class WeakOrderSuite(InvariantSuite):
    """The closure of weak_covers is inversion-set containment, n <= nmax."""

    @property
    def name(self) -> str:
        return "weak-order"

    @property
    def description(self) -> str:
        return "The reflexive-transitive closure of the covers equals Inv containment, which is antisymmetric."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(nmax + 1):
            poset = weak_order_poset(n)
            inversions = {u: inversion_set(u) for u in poset}
            for u in poset:
                for v in poset:
                    contained = inversions[u] <= inversions[v]
                    yield poset.leq(u, v) == contained, (u, v)
                    if contained and u != v:
                        yield not inversions[v] <= inversions[u], (u, v)


class RestrictionOrderSuite(InvariantSuite):
    """s <= t implies st(s|I) <= st(t|I) for every interval I, n <= nmax."""

    @property
    def name(self) -> str:
        return "lemma1"

    @property
    def description(self) -> str:
        return "Restriction to an interval followed by standardization is increasing for the weak order."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(1, nmax + 1):
            poset = weak_order_poset(n)
            for interval in _intervals(n):
                target = weak_order_poset(len(interval))
                image = {s: standardize(restrict(s, interval)) for s in poset}
                for s, t in _related(poset):
                    yield target.leq(image[s], image[t]), (s, t, _label(interval))


class TriangleOrderSuite(InvariantSuite):
    """u <= u' and v <= v' imply v (tri) u <= v' (tri) u', |u| + |v| <= nmax."""

    @property
    def name(self) -> str:
        return "lemma2"

    @property
    def description(self) -> str:
        return "The left shifted product of permutations is compatible with the weak order."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(nmax + 1):
            poset = weak_order_poset(n)
            for p in range(n + 1):
                left, right = weak_order_poset(p), weak_order_poset(n - p)
                right_pairs = list(_related(right))
                for u, u2 in _related(left):
                    for v, v2 in right_pairs:
                        yield poset.leq(triangle(v, u), triangle(v2, u2)), (u, u2, v, v2)


class BelowTriangleSuite(InvariantSuite):
    """sigma <= v (tri) u iff sigma|{1..p} <= u and st(sigma|{p+1..n}) <= v, n <= nmax."""

    @property
    def name(self) -> str:
        return "lemma3"

    @property
    def description(self) -> str:
        return "A permutation lies below v (tri) u exactly when its two value blocks lie below u and v."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(nmax + 1):
            poset = weak_order_poset(n)
            for p in range(n + 1):
                lower, upper = weak_order_poset(p), weak_order_poset(n - p)
                products = {(v, u): triangle(v, u) for u in lower for v in upper}
                for sigma in poset:
                    a = Permutation(restrict(sigma, range(1, p + 1)))
                    b = standardize(restrict(sigma, range(p + 1, n + 1)))
                    for (v, u), product in products.items():
                        expected = lower.leq(a, u) and upper.leq(b, v)
                        yield poset.leq(sigma, product) == expected, (sigma, v, u)


class TableauTriangleOrderSuite(InvariantSuite):
    """U <= U' and V <= V' imply V (tri) U <= V' (tri) U' in the Taskin order, |U| + |V| <= nmax."""

    @property
    def name(self) -> str:
        return "lemma5"

    @property
    def description(self) -> str:
        return "The left shifted product of tableaux is compatible with the Taskin order."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(nmax + 1):
            poset = taskin_poset(n)
            for p in range(n + 1):
                left, right = taskin_poset(p), taskin_poset(n - p)
                products = {(V, U): triangle_tab(V, U) for U in left for V in right}
                right_pairs = list(_related(right))
                for U, U2 in _related(left):
                    for V, V2 in right_pairs:
                        yield poset.leq(products[(V, U)], products[(V2, U2)]), (U, U2, V, V2)


class TableauRestrictionOrderSuite(InvariantSuite):
    """A <= B in T_n implies st(A|I) <= st(B|I) for every interval I, n <= nmax."""

    @property
    def name(self) -> str:
        return "lemma6"

    @property
    def description(self) -> str:
        return "Restriction-standardization of tableaux is increasing for the Taskin order."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(1, nmax + 1):
            poset = taskin_poset(n)
            for interval in _intervals(n):
                target = taskin_poset(len(interval))
                image = {A: restrict_std(A, interval) for A in poset}
                for A, B in _related(poset):
                    yield target.leq(image[A], image[B]), (A, B, _label(interval))


class BelowTableauTriangleSuite(InvariantSuite):
    """S <= V (tri) U iff st(S|{1..p}) <= U and st(S|{p+1..n}) <= V, n <= nmax.

    This is the property that makes the monomial coproduct of tableaux
    depend only on the factorizations of S.
    """

    @property
    def name(self) -> str:
        return "lemma7"

    @property
    def description(self) -> str:
        return "A tableau lies below V (tri) U exactly when its two restrictions lie below U and V."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(nmax + 1):
            poset = taskin_poset(n)
            for p in range(n + 1):
                lower, upper = taskin_poset(p), taskin_poset(n - p)
                products = {(V, U): triangle_tab(V, U) for U in lower for V in upper}
                for sigma in enumerate_tableaux(n):
                    A = restrict_std(sigma, range(1, p + 1))
                    B = restrict_std(sigma, range(p + 1, n + 1))
                    for (V, U), product in products.items():
                        expected = lower.leq(A, U) and upper.leq(B, V)
                        yield poset.leq(sigma, product) == expected, (sigma, V, U)
