"""The Hopf algebra ZS of permutations.

The product is destandardized concatenation and the coproduct is
standardized unshuffling by values:

    12 * 21 = 1243 + 1342 + 1432 + 2341 + 2431 + 3421
    delta(3124) = e(x)3124 + 1(x)213 + 12(x)12 + 312(x)1 + 3124(x)e
"""

import itertools
import logging

from ..combinat.permutations import (
    EMPTY,
    Permutation,
    global_descents,
    permutations_of,
    restrict,
    shift,
    standardize,
    triangle,
    triangle_all,
    triangle_factorize,
)
from ..poset.base import FinitePoset
from ..poset.builders import weak_order_poset
from .base import HopfAlgebra, LinComb, MonomialTensor, TensorComb

logger = logging.getLogger(__name__)


def star_perm(alpha: Permutation, beta: Permutation) -> LinComb:
    """Destandardized concatenation alpha * beta.

    Sums every sigma = uv in S_{p+q} with st(u) = alpha and st(v) = beta:
    each p-subset of {1, ..., p+q} is arranged in the pattern of alpha and its
    complement in the pattern of beta.

    Args:
        alpha: Left factor, of size p.
        beta: Right factor, of size q.

    Returns:
        C(p+q, p) distinct permutations, each with coefficient 1.
    """
    p, q = len(alpha), len(beta)
    letters = range(1, p + q + 1)
    terms = []
    for chosen in itertools.combinations(letters, p):
        rest = [x for x in letters if x not in chosen]
        u = tuple(chosen[a - 1] for a in alpha.word)
        v = tuple(rest[b - 1] for b in beta.word)
        terms.append((Permutation(u + v), 1))
    return LinComb(terms)


def delta_perm(sigma: Permutation) -> TensorComb:
    """Standardized unshuffling.

    delta(sigma) = sum over i = 0..n of sigma|{1..i} (x) st(sigma|{i+1..n}).
    The left leg is already standard.

    Returns:
        n+1 terms with coefficient 1.
    """
    n = len(sigma)
    terms = []
    for i in range(n + 1):
        left = Permutation(restrict(sigma, range(1, i + 1)))
        right = standardize(restrict(sigma, range(i + 1, n + 1)))
        terms.append(((left, right), 1))
    return TensorComb(terms)


def shifted_shuffle_perm(a: Permutation, b: Permutation) -> LinComb:
    """All interleavings of a with b shifted up by |a|.

    The support is the weak order interval [box(a, b), triangle(b, a)].
    """
    p, q = len(a), len(b)
    shifted = shift(b, p)
    terms = []
    for positions in itertools.combinations(range(p + q), p):
        chosen = set(positions)
        left, right = iter(a.word), iter(shifted)
        word = tuple(next(left) if i in chosen else next(right) for i in range(p + q))
        terms.append((Permutation(word), 1))
    return LinComb(terms)


def delta_monomial_perm(sigma: Permutation) -> MonomialTensor:
    """Coproduct of M_sigma: the sum of M_u (x) M_v over sigma = v (tri) u.

    The splittings are read off the factorization at global descents, so an
    element with k factors has k+1 terms.
    """
    factors = triangle_factorize(sigma)
    terms = []
    for j in range(len(factors) + 1):
        v = triangle_all(factors[:j])
        u = triangle_all(factors[j:])
        terms.append(((u, v), 1))
    return MonomialTensor(terms)


def is_indecomposable_perm(sigma: Permutation) -> bool:
    """Nonempty and without global descent."""
    return len(sigma) > 0 and not global_descents(sigma)


def primitive_basis_perm(n: int) -> list[Permutation]:
    """Permutations of S_n without global descent; their M elements span the primitives of rank n."""
    return [sigma for sigma in permutations_of(n) if is_indecomposable_perm(sigma)]


def count_indecomposable_perm(n: int) -> int:
    """Number of permutations of S_n without global descent (1, 1, 3, 13, 71, 461, ...)."""
    return len(primitive_basis_perm(n))


class PermutationHopfAlgebra(HopfAlgebra):
    """ZS with destandardized concatenation and standardized unshuffling."""

    @property
    def name(self) -> str:
        return "permutations"

    @property
    def key_type(self) -> type:
        return Permutation

    @property
    def unit(self) -> Permutation:
        return EMPTY

    def basis(self, n: int) -> list[Permutation]:
        return permutations_of(n)

    def product(self, a: Permutation, b: Permutation) -> LinComb:
        return star_perm(a, b)

    def coproduct_of(self, b: Permutation) -> TensorComb:
        return delta_perm(b)

    def order(self, n: int) -> FinitePoset:
        return weak_order_poset(n)

    def triangle(self, v: Permutation, u: Permutation) -> Permutation:
        return triangle(v, u)

    def is_indecomposable(self, b: Permutation) -> bool:
        return is_indecomposable_perm(b)

    def monomial_coproduct(self, b: Permutation) -> MonomialTensor:
        return delta_monomial_perm(b)


PERMUTATIONS = PermutationHopfAlgebra()
