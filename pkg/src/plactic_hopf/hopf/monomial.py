"""Monomial bases obtained by Möbius inversion, primitives and structure constants.

For a basis key b of rank n, b = sum of M_w over w >= b in the order of rank
n (weak order on permutations, Taskin order on tableaux). Inverting gives
M_b = sum of mu(b, w) w over w >= b.
"""

import logging
from typing import Optional, Union

import sympy

from ..combinat.permutations import Permutation
from ..combinat.tableaux import Tableau
from ..errors import InvalidInputError
from ..poset.base import FinitePoset
from .base import HopfAlgebra, LinComb, MonomialCoords, MonomialTensor
from .linear import algebra_for, algebra_of

logger = logging.getLogger(__name__)

BasisKey = Union[Permutation, Tableau]


def _order_for(x: LinComb, poset: Optional[FinitePoset]) -> FinitePoset:
    n = x.homogeneous_rank()
    return poset if poset is not None else algebra_of(x).order(n)


def to_monomial(x: LinComb, poset: Optional[FinitePoset] = None) -> MonomialCoords:
    """Express a combination of basis keys in the monomial basis.

    Each key b contributes its coefficient to every M_w with w >= b.

    Args:
        x: A combination homogeneous in rank (the zero element is allowed).
        poset: The order of that rank; built from the basis type when omitted.

    Returns:
        The monomial coordinates of x.

    Raises:
        InvalidInputError: If x mixes ranks or has a key outside the poset.
    """
    if not x:
        return MonomialCoords()
    order = _order_for(x, poset)
    return MonomialCoords((w, c) for b, c in x.items() for w in order.upset(b))


def from_monomial(m: MonomialCoords, poset: Optional[FinitePoset] = None) -> LinComb:
    """Expand monomial coordinates in the fundamental basis, inverse of to_monomial.

    Args:
        m: Monomial coordinates homogeneous in rank.
        poset: The order of that rank; built from the basis type when omitted.

    Raises:
        InvalidInputError: If m mixes ranks or has a key outside the poset.
    """
    if not m:
        return LinComb()
    order = _order_for(m, poset)
    return LinComb((w, c * mu) for b, c in m.items() for w, mu in order.mobius_upset(b))


def monomial_element(b: BasisKey) -> LinComb:
    """M_b written in the fundamental basis."""
    return from_monomial(MonomialCoords.term(b))


def delta_monomial(b: BasisKey) -> MonomialTensor:
    """Coproduct of M_b in monomial coordinates, from the factorizations of b."""
    return algebra_for(b).monomial_coproduct(b)


def delta_monomial_via_fundamental(b: BasisKey) -> MonomialTensor:
    """Coproduct of M_b computed without the factorization theory.

    M_b is expanded in the fundamental basis, the coproduct is applied term
    by term and both legs are converted back to monomial coordinates. The
    result must agree with delta_monomial(b).
    """
    algebra = algebra_for(b)
    expanded = algebra.coproduct(monomial_element(b))
    terms = []
    for (y, z), c in expanded.items():
        left = algebra.order(len(y)).upset(y)
        right = algebra.order(len(z)).upset(z)
        terms.extend(((u, v), c) for u in left for v in right)
    return MonomialTensor(terms)


def primitive_dimension(algebra: HopfAlgebra, n: int) -> int:
    """Dimension of the primitive elements of rank n.

    Computed as the kernel dimension of x -> delta(x) - x (x) e - e (x) x on
    the rank-n basis, with an exact integer rank.

    Args:
        algebra: The algebra.
        n: Rank, at least 1.
    """
    if n < 1:
        raise InvalidInputError(f"Rank must be at least 1, got {n}")
    basis = algebra.basis(n)
    rows: dict = {}
    entries = {}
    for j, b in enumerate(basis):
        x = LinComb.term(b)
        interior = algebra.coproduct(x) - algebra.boundary(x)
        for pair, c in interior.items():
            i = rows.setdefault(pair, len(rows))
            entries[(i, j)] = c
    if not rows:
        return len(basis)
    rank = sympy.SparseMatrix(len(rows), len(basis), entries).rank()
    logger.debug(f"{algebra}: rank {n} coproduct matrix {len(rows)}x{len(basis)} has rank {rank}")
    return len(basis) - rank


def m_structure_constants(a: BasisKey, b: BasisKey) -> MonomialCoords:
    """M_a * M_b in monomial coordinates.

    Both factors are expanded in the fundamental basis, multiplied and the
    product is converted back. Coefficients may be negative for tableaux.

    Raises:
        InvalidInputError: If a permutation is multiplied by a tableau.
    """
    algebra = algebra_for(a)
    if algebra is not algebra_for(b):
        raise InvalidInputError(f"Cannot multiply {a} and {b}: different basis types")
    product = algebra.multiply(monomial_element(a), monomial_element(b))
    return to_monomial(product)


def m_structure_constants_tab(A: Tableau, B: Tableau) -> MonomialCoords:
    """M_A * M_B for tableaux."""
    return m_structure_constants(A, B)


def m_structure_constants_perm(alpha: Permutation, beta: Permutation) -> MonomialCoords:
    """M_alpha * M_beta for permutations; the coefficients are nonnegative."""
    return m_structure_constants(alpha, beta)
