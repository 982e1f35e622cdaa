"""The Hopf algebras of permutations and of standard tableaux."""

from .base import FreeModuleElement, HopfAlgebra, LinComb, MonomialCoords, MonomialTensor, TensorComb
from .linear import algebra_for, algebra_of, coproduct, counit, is_primitive, multiply, tensor_multiply
from .monomial import (
    delta_monomial,
    delta_monomial_via_fundamental,
    from_monomial,
    m_structure_constants,
    m_structure_constants_perm,
    m_structure_constants_tab,
    monomial_element,
    primitive_dimension,
    to_monomial,
)
from .permutations import (
    PERMUTATIONS,
    PermutationHopfAlgebra,
    count_indecomposable_perm,
    delta_monomial_perm,
    delta_perm,
    primitive_basis_perm,
    shifted_shuffle_perm,
    star_perm,
)
from .tableaux import (
    TABLEAUX,
    TableauHopfAlgebra,
    apply_p,
    delta_monomial_tab,
    delta_tab,
    delta_tab_via_representative,
    primitive_basis_tab,
    shifted_shuffle_tab,
    star_tab,
)

__all__ = [
    "FreeModuleElement",
    "HopfAlgebra",
    "LinComb",
    "MonomialCoords",
    "MonomialTensor",
    "TensorComb",
    "algebra_for",
    "algebra_of",
    "coproduct",
    "counit",
    "is_primitive",
    "multiply",
    "tensor_multiply",
    "delta_monomial",
    "delta_monomial_via_fundamental",
    "from_monomial",
    "m_structure_constants",
    "m_structure_constants_perm",
    "m_structure_constants_tab",
    "monomial_element",
    "primitive_dimension",
    "to_monomial",
    "PERMUTATIONS",
    "PermutationHopfAlgebra",
    "count_indecomposable_perm",
    "delta_monomial_perm",
    "delta_perm",
    "primitive_basis_perm",
    "shifted_shuffle_perm",
    "star_perm",
    "TABLEAUX",
    "TableauHopfAlgebra",
    "apply_p",
    "delta_monomial_tab",
    "delta_tab",
    "delta_tab_via_representative",
    "primitive_basis_tab",
    "shifted_shuffle_tab",
    "star_tab",
]
