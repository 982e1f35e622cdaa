"""Linear operations dispatched on the basis type of their arguments."""

from typing import Union

from ..combinat.permutations import Permutation
from ..combinat.tableaux import Tableau
from ..errors import InvalidInputError
from .base import FreeModuleElement, HopfAlgebra, LinComb, TensorComb
from .permutations import PERMUTATIONS
from .tableaux import TABLEAUX

ALGEBRAS: tuple[HopfAlgebra, ...] = (PERMUTATIONS, TABLEAUX)


def algebra_for(key: Union[Permutation, Tableau]) -> HopfAlgebra:
    """The algebra whose basis contains key.

    Raises:
        InvalidInputError: If key is neither a permutation nor a tableau.
    """
    for algebra in ALGEBRAS:
        if algebra.owns(key):
            return algebra
    raise InvalidInputError(f"Not a basis key: {key!r}")


def _keys(x: FreeModuleElement) -> list:
    if isinstance(x, TensorComb):
        return [leg for pair in x.support() for leg in pair]
    return x.support()


def algebra_of(*elements: FreeModuleElement) -> HopfAlgebra:
    """The single algebra all terms of the given elements belong to.

    Zero elements carry no type information; when every element is zero the
    permutation algebra is returned.

    Raises:
        InvalidInputError: If permutations and tableaux are mixed.
    """
    found = {algebra_for(k).name: algebra_for(k) for x in elements for k in _keys(x)}
    if len(found) > 1:
        raise InvalidInputError("Cannot mix permutations and tableaux in one computation")
    return next(iter(found.values()), PERMUTATIONS)


def multiply(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear product * of two combinations of the same basis type."""
    return algebra_of(x, y).multiply(x, y)


def coproduct(x: LinComb) -> TensorComb:
    """Linear coproduct delta."""
    return algebra_of(x).coproduct(x)


def tensor_multiply(s: TensorComb, t: TensorComb) -> TensorComb:
    """Componentwise product of two tensors."""
    return algebra_of(s, t).tensor_multiply(s, t)


def counit(x: LinComb) -> int:
    """Coefficient of the empty basis element."""
    return algebra_of(x).counit(x)


def is_primitive(x: LinComb) -> bool:
    """True iff delta(x) = x (x) e + e (x) x.

    Args:
        x: A nonzero element homogeneous of rank at least 1.

    Raises:
        InvalidInputError: If x is zero, mixes ranks or has rank 0.
    """
    n = x.homogeneous_rank()
    if n < 1:
        raise InvalidInputError("Primitive elements live in positive ranks")
    algebra = algebra_of(x)
    return algebra.coproduct(x) == algebra.boundary(x)
