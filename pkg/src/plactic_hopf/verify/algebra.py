"""Suites for the Hopf algebra structure: coproduct formulas, interval products, primitives."""

from abc import abstractmethod
from collections import Counter
from typing import Iterator

from ..combinat.permutations import box, permutations_of, triangle
from ..combinat.tableaux import count_indecomposable, enumerate_tableaux, insertion_tableau, triangle_tab
from ..hopf.base import HopfAlgebra, LinComb, TensorComb
from ..hopf.linear import is_primitive
from ..hopf.monomial import (
    delta_monomial,
    delta_monomial_via_fundamental,
    m_structure_constants_perm,
    monomial_element,
    primitive_dimension,
)
from ..hopf.permutations import PERMUTATIONS, count_indecomposable_perm, delta_perm, shifted_shuffle_perm, star_perm
from ..hopf.tableaux import (
    TABLEAUX,
    apply_p,
    delta_monomial_tab,
    delta_tab,
    delta_tab_via_representative,
    shifted_shuffle_tab,
    star_tab,
)
from ..poset.builders import weak_order_poset
from .base import Check, InvariantSuite


def _pairs_of_size(algebra: HopfAlgebra, n: int) -> Iterator[tuple]:
    for p in range(n + 1):
        for a in algebra.basis(p):
            for b in algebra.basis(n - p):
                yield a, b


class MonomialCoproductSuite(InvariantSuite):
    """The coproduct of M_b read off the factorizations of b agrees with the basis-change pipeline."""

    def __init__(self, algebra: HopfAlgebra, name: str):
        """Initialize the suite.

        Args:
            algebra: The algebra to check.
            name: Command-line name of the suite.
        """
        self._algebra = algebra
        self._name = name

    @property
    def name(self) -> str:
        return self._name

    @property
    def description(self) -> str:
        return f"delta(M_S) = sum of M_U (x) M_V over S = V (tri) U, for {self._algebra}."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(nmax + 1):
            for b in self._algebra.basis(n):
                yield delta_monomial(b) == delta_monomial_via_fundamental(b), (b,)


class LodayRoncoSuite(InvariantSuite):
    """Shifted shuffles of permutations are weak order intervals, |a| + |b| <= nmax."""

    @property
    def name(self) -> str:
        return "loday-ronco"

    @property
    def description(self) -> str:
        return "a shifted-shuffle b is the sum of the interval [a (box) b, b (tri) a]."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(nmax + 1):
            poset = weak_order_poset(n)
            for a, b in _pairs_of_size(PERMUTATIONS, n):
                interval = LinComb((s, 1) for s in poset.interval(box(a, b), triangle(b, a)))
                yield shifted_shuffle_perm(a, b) == interval, (a, b)


class _PairingSuite(InvariantSuite):
    """<x shifted-shuffle y, S> = <x (x) y, delta(S)> on every triple with |x| + |y| = |S| <= nmax."""

    @property
    @abstractmethod
    def algebra(self) -> HopfAlgebra:
        pass

    @abstractmethod
    def _shuffle(self, a, b) -> LinComb:
        pass

    @abstractmethod
    def _coproduct(self, s) -> TensorComb:
        pass

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(nmax + 1):
            shuffles = {(a, b): self._shuffle(a, b) for a, b in _pairs_of_size(self.algebra, n)}
            for s in self.algebra.basis(n):
                coproduct = self._coproduct(s)
                for (a, b), shuffle in shuffles.items():
                    yield shuffle.coefficient(s) == coproduct.coefficient((a, b)), (a, b, s)


class TaskinSuite(_PairingSuite):
    """The Taskin interval formula, checked against the tableau coproduct."""

    @property
    def algebra(self) -> HopfAlgebra:
        return TABLEAUX

    @property
    def name(self) -> str:
        return "taskin"

    @property
    def description(self) -> str:
        return "The coefficient of S in the interval [A (box) B, B (tri) A] equals that of A (x) B in delta(S)."

    def _shuffle(self, a, b) -> LinComb:
        return shifted_shuffle_tab(a, b)

    def _coproduct(self, s) -> TensorComb:
        return delta_tab(s)


class DualitySuite(_PairingSuite):
    """The shifted shuffle of permutations is dual to standardized unshuffling."""

    @property
    def algebra(self) -> HopfAlgebra:
        return PERMUTATIONS

    @property
    def name(self) -> str:
        return "duality"

    @property
    def description(self) -> str:
        return "The coefficient of s in a shifted-shuffle b equals that of a (x) b in delta(s)."

    def _shuffle(self, a, b) -> LinComb:
        return shifted_shuffle_perm(a, b)

    def _coproduct(self, s) -> TensorComb:
        return delta_perm(s)


class MultiplicativeDualSuite(InvariantSuite):
    """The coefficient of M_U (x) M_V in delta(M_S) is 1 if S = V (tri) U and 0 otherwise, n <= nmax."""

    @property
    def name(self) -> str:
        return "multiplicative-dual"

    @property
    def description(self) -> str:
        return "The basis dual to M is multiplicative for the shifted shuffle."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(nmax + 1):
            products = {(U, V): triangle_tab(V, U) for U, V in _pairs_of_size(TABLEAUX, n)}
            for sigma in enumerate_tableaux(n):
                coproduct = delta_monomial_tab(sigma)
                for (U, V), product in products.items():
                    expected = 1 if product == sigma else 0
                    yield coproduct.coefficient((U, V)) == expected, (sigma, U, V)


def _triples(counts: Counter, algebra: HopfAlgebra, split_left: bool, tensor: TensorComb) -> None:
    for (x, y), c in tensor.items():
        inner = algebra.coproduct_of(x if split_left else y)
        for (a, b), d in inner.items():
            key = (a, b, y) if split_left else (x, a, b)
            counts[key] += c * d


def _nonzero(counts: Counter) -> dict:
    return {k: v for k, v in counts.items() if v}


class CoassociativitySuite(InvariantSuite):
    """(delta (x) id) delta = (id (x) delta) delta and the counit laws, n <= nmax, both algebras."""

    @property
    def name(self) -> str:
        return "coassoc"

    @property
    def description(self) -> str:
        return "The coproducts are coassociative and counital."

    def checks(self, nmax: int) -> Iterator[Check]:
        for algebra in (PERMUTATIONS, TABLEAUX):
            for n in range(nmax + 1):
                for b in algebra.basis(n):
                    coproduct = algebra.coproduct_of(b)
                    left, right = Counter(), Counter()
                    _triples(left, algebra, True, coproduct)
                    _triples(right, algebra, False, coproduct)
                    yield _nonzero(left) == _nonzero(right), (b,)
                    kept_left = LinComb((x, c) for (x, y), c in coproduct.items() if len(y) == 0)
                    kept_right = LinComb((y, c) for (x, y), c in coproduct.items() if len(x) == 0)
                    yield kept_left == LinComb.term(b) == kept_right, (b,)


class BialgebraSuite(InvariantSuite):
    """delta(x * y) = delta(x) delta(y) on basis pairs, |x| + |y| <= nmax, both algebras."""

    @property
    def name(self) -> str:
        return "bialgebra"

    @property
    def description(self) -> str:
        return "The coproduct is multiplicative."

    def checks(self, nmax: int) -> Iterator[Check]:
        for algebra in (PERMUTATIONS, TABLEAUX):
            for n in range(nmax + 1):
                for a, b in _pairs_of_size(algebra, n):
                    lhs = algebra.coproduct(algebra.product(a, b))
                    rhs = algebra.tensor_multiply(algebra.coproduct_of(a), algebra.coproduct_of(b))
                    yield lhs == rhs, (a, b)


class QuotientSuite(InvariantSuite):
    """sigma -> P(sigma) is a morphism of Hopf algebras, total rank <= nmax."""

    @property
    def name(self) -> str:
        return "quotient"

    @property
    def description(self) -> str:
        return "P(x * y) = P(x) * P(y), (P (x) P) delta = delta P and both tableau coproducts agree."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(nmax + 1):
            for a, b in _pairs_of_size(PERMUTATIONS, n):
                expected = star_tab(insertion_tableau(a), insertion_tableau(b))
                yield apply_p(star_perm(a, b)) == expected, (a, b)
            for sigma in permutations_of(n):
                yield apply_p(delta_perm(sigma)) == delta_tab(insertion_tableau(sigma)), (sigma,)
            for T in enumerate_tableaux(n):
                yield delta_tab(T) == delta_tab_via_representative(T), (T,)


class PrimitivesSuite(InvariantSuite):
    """Primitive elements are spanned by the M elements of indecomposables, 1 <= n <= nmax."""

    @property
    def name(self) -> str:
        return "primitives"

    @property
    def description(self) -> str:
        return "M_b is primitive iff b is indecomposable, and these span the kernel of the reduced coproduct."

    def checks(self, nmax: int) -> Iterator[Check]:
        counts = {PERMUTATIONS.name: count_indecomposable_perm, TABLEAUX.name: count_indecomposable}
        for algebra in (PERMUTATIONS, TABLEAUX):
            for n in range(1, nmax + 1):
                dimension = primitive_dimension(algebra, n)
                yield dimension == counts[algebra.name](n), (algebra, f"n={n}", dimension)
                for b in algebra.basis(n):
                    yield is_primitive(monomial_element(b)) == algebra.is_indecomposable(b), (b,)


class PositivitySuite(InvariantSuite):
    """Products of permutation M elements have nonnegative coefficients, |a| + |b| <= nmax."""

    @property
    def name(self) -> str:
        return "positivity"

    @property
    def description(self) -> str:
        return "The structure constants of * in the monomial basis of permutations are nonnegative."

    def checks(self, nmax: int) -> Iterator[Check]:
        for n in range(2, nmax + 1):
            for p in range(1, n):
                for a in permutations_of(p):
                    for b in permutations_of(n - p):
                        product = m_structure_constants_perm(a, b)
                        yield all(c >= 0 for _, c in product.items()), (a, b, product)
