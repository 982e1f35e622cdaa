"""Suites for Schensted insertion, plactic classes, factorizations and Möbius functions."""

from math import factorial
from typing import Iterator

import numpy as np

from ..combinat.permutations import (
    EMPTY,
    box,
    global_descents,
    is_triangle_indecomposable,
    permutations_of,
    restrict,
    reverse,
    standardize,
    triangle,
    triangle_all,
    triangle_factorize,
)
from ..combinat.tableaux import (
    EMPTY_TABLEAU,
    box_tab,
    enumerate_tableaux,
    fall_onto,
    insertion_tableau,
    inverse_rsk,
    is_triangle_indecomposable_tab,
    knuth_closure,
    partitions,
    plactic_class,
    restrict_std,
    rsk,
    tableaux_of_shape,
    triangle_factorize_tab,
    triangle_tab,
    triangle_tab_all,
)
from ..hopf.permutations import count_indecomposable_perm
from ..poset.builders import taskin_poset, weak_order_poset
from ..utils.counting import hook_length_count, indecomposable_permutation_count, involution_count
from .base import Check, InvariantSuite


def _split_sizes(n: int) -> Iterator[tuple[int, int]]:
    for total in range(n + 1):
        for p in range(total + 1):
            yield p, total - p


class RSKSuite(InvariantSuite):
    """Schensted insertion is a bijection onto same-shape pairs, n <= nmax."""

    @property
    def name(self) -> str:
        return "rsk"

    @property
    def description(self) -> str:
        return "inverse_rsk undoes rsk, the image is every same-shape pair and plactic classes partition S_n."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(nmax + 1):
            pairs = set()
            for sigma in permutations_of(n):
                P, Q = rsk(sigma)
                yield P.shape == Q.shape and inverse_rsk(P, Q) == sigma, (sigma,)
                pairs.add((P, Q))
            same_shape = sum(len(tableaux_of_shape(shape)) ** 2 for shape in partitions(n))
            yield len(pairs) == same_shape == factorial(n), (f"n={n}", len(pairs))
            total = 0
            for T in enumerate_tableaux(n):
                members = plactic_class(T)
                total += len(members)
                yield all(insertion_tableau(w) == T for w in members), (T,)
            yield total == factorial(n), (f"n={n}", total)


class KnuthSuite(InvariantSuite):
    """The closure of a permutation under Knuth moves is its plactic class, n <= nmax."""

    @property
    def name(self) -> str:
        return "knuth"

    @property
    def description(self) -> str:
        return "Knuth equivalence classes coincide with the fibers of the insertion tableau."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(nmax + 1):
            classes = {T: [w.word for w in plactic_class(T)] for T in enumerate_tableaux(n)}
            for sigma in permutations_of(n):
                closure = knuth_closure(sigma)
                yield closure == classes[insertion_tableau(sigma)], (sigma,)


class PlacticCongruenceSuite(InvariantSuite):
    """Plactic equivalence is compatible with the left shifted product, |u| + |v| <= nmax."""

    @property
    def name(self) -> str:
        return "lemma4"

    @property
    def description(self) -> str:
        return "u ~ u' implies v (tri) u ~ v (tri) u' and u (tri) w ~ u' (tri) w."

    def checks(self, nmax: int) -> Iterator[Check]:
        for p, q in _split_sizes(nmax):
            others = permutations_of(q)
            for T in enumerate_tableaux(p):
                members = plactic_class(T)
                for v in others:
                    left = {insertion_tableau(triangle(v, u)) for u in members}
                    right = {insertion_tableau(triangle(u, v)) for u in members}
                    yield len(left) == 1 and len(right) == 1, (T, v)


class PlacticProductSuite(InvariantSuite):
    """Tableau products and restrictions do not depend on representatives, |A| + |B| <= nmax.

    Also checks P(v (tri) u) = P(v) (tri) P(u) on every pair of permutations
    and the column insertion description of V (tri) U.
    """

    @property
    def name(self) -> str:
        return "plactic"

    @property
    def description(self) -> str:
        return "P is a monoid morphism for (tri) and (box), and restrictions are class functions."

    def checks(self, nmax: int) -> Iterator[Check]:
        for p, q in _split_sizes(nmax):
            for u in permutations_of(p):
                for v in permutations_of(q):
                    expected = triangle_tab(insertion_tableau(v), insertion_tableau(u))
                    yield insertion_tableau(triangle(v, u)) == expected, (v, u)
            for A in enumerate_tableaux(p):
                for B in enumerate_tableaux(q):
                    tri, bx = triangle_tab(B, A), box_tab(A, B)
                    yield fall_onto(B, A) == tri, (B, A)
                    for a in plactic_class(A):
                        for b in plactic_class(B):
                            yield insertion_tableau(triangle(b, a)) == tri, (b, a)
                            yield insertion_tableau(box(a, b)) == bx, (a, b)
        for n in range(1, nmax + 1):
            for T in enumerate_tableaux(n):
                members = plactic_class(T)
                for a in range(1, n + 1):
                    for b in range(a, n + 1):
                        interval = range(a, b + 1)
                        expected = restrict_std(T, interval)
                        for w in members:
                            got = insertion_tableau(standardize(restrict(w, interval)))
                            yield got == expected, (T, w, f"I=[{a},{b}]")


class FactorizationSuite(InvariantSuite):
    """Unique factorization into indecomposables for (tri), n <= nmax + 2."""

    @property
    def name(self) -> str:
        return "factorization"

    @property
    def description(self) -> str:
        return "Folding the factors gives back the element and every factor is indecomposable."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(1, nmax + 3):
            for sigma in permutations_of(n):
                factors = triangle_factorize(sigma)
                boundaries = set()
                covered = n
                for factor in factors[:0:-1]:
                    covered -= len(factor)
                    boundaries.add(covered)
                yield triangle_all(factors) == sigma, (sigma,)
                yield all(is_triangle_indecomposable(f) for f in factors), (sigma,)
                yield boundaries == set(global_descents(sigma)), (sigma,)
            for T in enumerate_tableaux(n):
                factors = triangle_factorize_tab(T)
                yield triangle_tab_all(factors) == T, (T,)
                yield all(is_triangle_indecomposable_tab(F) for F in factors), (T,)


class CountingSuite(InvariantSuite):
    """Enumerations agree with closed-form counts, n <= nmax + 2."""

    @property
    def name(self) -> str:
        return "counting"

    @property
    def description(self) -> str:
        return "Tableaux are counted by hook lengths and involutions, indecomposable permutations by recurrence."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(nmax + 3):
            yield len(enumerate_tableaux(n)) == involution_count(n), (f"n={n}",)
            for shape in partitions(n):
                yield len(tableaux_of_shape(shape)) == hook_length_count(shape), (shape,)
            if n >= 1:
                yield count_indecomposable_perm(n) == indecomposable_permutation_count(n), (f"n={n}",)


class ConjugationSuite(InvariantSuite):
    """v (tri) u is the reversal of reverse(u) (box) reverse(v), |u| + |v| <= nmax."""

    @property
    def name(self) -> str:
        return "conjugation"

    @property
    def description(self) -> str:
        return "Reversal exchanges the two shifted concatenations."

    def checks(self, nmax: int) -> Iterator[Check]:
        for p, q in _split_sizes(nmax):
            for u in permutations_of(p):
                for v in permutations_of(q):
                    yield triangle(v, u) == reverse(box(reverse(u), reverse(v))), (v, u)


class MonoidSuite(InvariantSuite):
    """The shifted concatenations are associative with the empty unit, total rank <= nmax."""

    @property
    def name(self) -> str:
        return "monoid"

    @property
    def description(self) -> str:
        return "(box) and (tri) are associative and unital on permutations and on tableaux."

    def checks(self, nmax: int) -> Iterator[Check]:
        for p, rest in _split_sizes(nmax):
            for q in range(rest + 1):
                r = rest - q
                for a in permutations_of(p):
                    yield box(EMPTY, a) == a == box(a, EMPTY), (a,)
                    yield triangle(EMPTY, a) == a == triangle(a, EMPTY), (a,)
                    for b in permutations_of(q):
                        for c in permutations_of(r):
                            yield box(box(a, b), c) == box(a, box(b, c)), (a, b, c)
                            yield triangle(triangle(a, b), c) == triangle(a, triangle(b, c)), (a, b, c)
                for A in enumerate_tableaux(p):
                    yield box_tab(EMPTY_TABLEAU, A) == A == box_tab(A, EMPTY_TABLEAU), (A,)
                    yield triangle_tab(EMPTY_TABLEAU, A) == A == triangle_tab(A, EMPTY_TABLEAU), (A,)
                    for B in enumerate_tableaux(q):
                        for C in enumerate_tableaux(r):
                            yield box_tab(box_tab(A, B), C) == box_tab(A, box_tab(B, C)), (A, B, C)
                            yield triangle_tab(triangle_tab(A, B), C) == triangle_tab(A, triangle_tab(B, C)), (A, B, C)


class MobiusSuite(InvariantSuite):
    """Möbius functions of both orders satisfy their defining identity and invert upset sums, n <= nmax."""

    def __init__(self, seed: int = 0):
        """Initialize the suite.

        Args:
            seed: Seed for the random functions used in the inversion check.
        """
        self._seed = seed

    @property
    def name(self) -> str:
        return "mobius"

    @property
    def description(self) -> str:
        return "sum of mu(x, z) over x <= z <= y is [x = y], and mu inverts summation over upsets."

    def checks(self, nmax: int) -> Iterator[Check]:
        rng = np.random.default_rng(self._seed)
        for n in range(nmax + 1):
            for poset in (weak_order_poset(n), taskin_poset(n)):
                for x in poset:
                    row = dict(poset.mobius_upset(x))
                    for y in row:
                        total = sum(row[z] for z in poset.interval(x, y))
                        yield total == (1 if x == y else 0), (x, y)
                values = rng.integers(-5, 6, size=len(poset)).tolist()
                f = dict(zip(poset.elements, values))
                g = {x: sum(f[w] for w in poset.upset(x)) for x in poset}
                recovered = {x: sum(mu * g[w] for w, mu in poset.mobius_upset(x)) for x in poset}
                yield recovered == f, (f"n={n}", f"seed={self._seed}")
