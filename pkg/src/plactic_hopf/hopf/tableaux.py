"""The Hopf algebra ZT of standard tableaux, a quotient of ZS.

Every operation is computed on a representative permutation and mapped back
through the insertion tableau P; the ideal spanned by differences of plactic
equivalent permutations is also a coideal, so the result does not depend on
the representative.
"""

import logging
from typing import Union

from ..combinat.permutations import Permutation
from ..combinat.tableaux import (
    EMPTY_TABLEAU,
    Tableau,
    box_tab,
    enumerate_tableaux,
    insertion_tableau,
    is_triangle_indecomposable_tab,
    reading_word,
    restrict_std,
    triangle_tab,
)
from ..poset.base import FinitePoset
from ..poset.builders import taskin_poset
from .base import HopfAlgebra, LinComb, MonomialTensor, TensorComb
from .permutations import delta_perm, star_perm

logger = logging.getLogger(__name__)


def _p(key: Union[Permutation, Tableau]) -> Tableau:
    return insertion_tableau(key) if isinstance(key, Permutation) else key


def apply_p(x: Union[LinComb, TensorComb]) -> Union[LinComb, TensorComb]:
    """The canonical map ZS -> ZT, sigma -> P(sigma), on elements or tensors.

    Tableau keys are left unchanged.
    """
    if isinstance(x, TensorComb):
        return TensorComb(((_p(a), _p(b)), c) for (a, b), c in x.items())
    return LinComb((_p(k), c) for k, c in x.items())


def star_tab(A: Tableau, B: Tableau) -> LinComb:
    """Product of tableaux: P applied to reading_word(A) * reading_word(B).

    Returns:
        A combination with positive coefficients summing to C(p+q, p).
    """
    return apply_p(star_perm(reading_word(A), reading_word(B)))


def delta_tab(sigma: Tableau) -> TensorComb:
    """Coproduct of a tableau: sum over p of st(S|{1..p}) (x) st(S|{p+1..n}).

    Returns:
        n+1 terms with coefficient 1.
    """
    n = len(sigma)
    return TensorComb(
        ((restrict_std(sigma, range(1, p + 1)), restrict_std(sigma, range(p + 1, n + 1))), 1)
        for p in range(n + 1)
    )


def delta_tab_via_representative(sigma: Tableau) -> TensorComb:
    """(P (x) P) applied to the permutation coproduct of reading_word(sigma)."""
    return apply_p(delta_perm(reading_word(sigma)))


def shifted_shuffle_tab(A: Tableau, B: Tableau) -> LinComb:
    """Shifted shuffle of tableaux as an interval of the Taskin order.

    The sum of all T with box_tab(A, B) <= T <= triangle_tab(B, A), each with
    coefficient 1. Builds the Taskin poset of rank |A| + |B|.
    """
    poset = taskin_poset(len(A) + len(B))
    return LinComb((T, 1) for T in poset.interval(box_tab(A, B), triangle_tab(B, A)))


def delta_monomial_tab(sigma: Tableau) -> MonomialTensor:
    """Coproduct of M_sigma: the sum of M_U (x) M_V over sigma = V (tri) U.

    Splits are found by scanning p = 0..n with U = st(sigma|{1..p}) and
    V = st(sigma|{p+1..n}); the two boundary terms are always present.
    """
    n = len(sigma)
    terms = []
    for p in range(n + 1):
        U = restrict_std(sigma, range(1, p + 1))
        V = restrict_std(sigma, range(p + 1, n + 1))
        if p in (0, n) or triangle_tab(V, U) == sigma:
            terms.append(((U, V), 1))
    return MonomialTensor(terms)


def primitive_basis_tab(n: int) -> list[Tableau]:
    """Indecomposable tableaux of T_n; their M elements span the primitives of rank n.

    Args:
        n: Rank, at least 1.

    Returns:
        count_indecomposable(n) tableaux in canonical order.
    """
    basis = [T for T in enumerate_tableaux(n) if is_triangle_indecomposable_tab(T)]
    logger.debug(f"{len(basis)} indecomposable tableaux of rank {n}")
    return basis


class TableauHopfAlgebra(HopfAlgebra):
    """ZT, the quotient of ZS by the plactic congruence."""

    @property
    def name(self) -> str:
        return "tableaux"

    @property
    def key_type(self) -> type:
        return Tableau

    @property
    def unit(self) -> Tableau:
        return EMPTY_TABLEAU

    def basis(self, n: int) -> list[Tableau]:
        return enumerate_tableaux(n)

    def product(self, a: Tableau, b: Tableau) -> LinComb:
        return star_tab(a, b)

    def coproduct_of(self, b: Tableau) -> TensorComb:
        return delta_tab(b)

    def order(self, n: int) -> FinitePoset:
        return taskin_poset(n)

    def triangle(self, v: Tableau, u: Tableau) -> Tableau:
        return triangle_tab(v, u)

    def is_indecomposable(self, b: Tableau) -> bool:
        return len(b) > 0 and is_triangle_indecomposable_tab(b)

    def monomial_coproduct(self, b: Tableau) -> MonomialTensor:
        return delta_monomial_tab(b)


TABLEAUX = TableauHopfAlgebra()
