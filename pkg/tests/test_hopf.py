"""Tests for the Hopf algebras of permutations and tableaux."""

import pytest

from plactic_hopf.combinat import (
    EMPTY,
    EMPTY_TABLEAU,
    Permutation,
    Tableau,
    box,
    enumerate_tableaux,
    insertion_tableau,
    permutations_of,
    triangle,
    triangle_tab,
)
from plactic_hopf.errors import InvalidInputError
from plactic_hopf.hopf import (
    PERMUTATIONS,
    TABLEAUX,
    LinComb,
    MonomialCoords,
    MonomialTensor,
    TensorComb,
    algebra_of,
    apply_p,
    coproduct,
    counit,
    delta_monomial_perm,
    delta_monomial_tab,
    delta_perm,
    delta_tab,
    delta_tab_via_representative,
    is_primitive,
    monomial_element,
    multiply,
    primitive_basis_perm,
    primitive_basis_tab,
    shifted_shuffle_perm,
    shifted_shuffle_tab,
    star_perm,
    star_tab,
    tensor_multiply,
)
from plactic_hopf.poset import weak_order_poset


def perm(text: str) -> Permutation:
    return Permutation(tuple(int(ch) for ch in text))


def tab(*rows) -> Tableau:
    return Tableau(tuple(tuple(int(ch) for ch in row) for row in rows))


def lin(*words) -> LinComb:
    return LinComb((perm(w), 1) for w in words)


class TestLinComb:
    """Tests for integer linear combinations."""

    def test_zero_terms_dropped(self):
        """Test that cancelling terms disappear."""
        x = LinComb([(perm("12"), 2), (perm("21"), 1), (perm("12"), -2)])
        assert x.support() == [perm("21")]
        assert len(x - x) == 0
        assert not (x - x)

    def test_module_operations(self):
        """Test addition, negation and scaling."""
        x = lin("12")
        y = lin("21")
        z = 3 * (x + y) - x
        assert z.coefficient(perm("12")) == 2
        assert z[perm("21")] == 3
        assert (-z).total() == -5
        assert x * 2 == 2 * x

    def test_integer_coefficients_only(self):
        """Test that non-integer coefficients are rejected."""
        with pytest.raises(InvalidInputError):
            LinComb([(perm("1"), 0.5)])

    def test_canonical_order(self):
        """Test that terms are listed by rank, then lexicographically."""
        x = lin("21", "1", "12") + LinComb.term(EMPTY)
        assert [str(k) for k in x.support()] == ["e", "1", "12", "21"]

    def test_text_round_trip(self):
        """Test rendering and reparsing with negative coefficients."""
        x = LinComb([(perm("12"), -1), (perm("21"), 2), (perm("132"), -3)])
        assert x.to_text() == "-1*12 + 2*21 - 3*132"
        assert LinComb.from_text(x.to_text()) == x
        assert LinComb().to_text() == "0"
        assert LinComb.from_text("0") == LinComb()

    def test_json_round_trip(self):
        """Test the JSON term list."""
        x = LinComb([(tab("13", "2"), 2), (tab("12"), -1)])
        assert x.to_json() == [{"coeff": -1, "key": [[1, 2]]}, {"coeff": 2, "key": [[1, 3], [2]]}]
        assert LinComb.from_json(x.to_json()) == x

    def test_malformed_text(self):
        """Test rejection of terms without a coefficient."""
        with pytest.raises(InvalidInputError):
            LinComb.from_text("12 + 1*21")

    def test_homogeneous_rank(self):
        """Test the common rank of a combination."""
        assert lin("12", "21").homogeneous_rank() == 2
        with pytest.raises(InvalidInputError):
            lin("1", "12").homogeneous_rank()
        with pytest.raises(InvalidInputError):
            LinComb().homogeneous_rank()

    def test_equality_is_typed(self):
        """Test that monomial coordinates never equal fundamental ones."""
        assert LinComb.term(perm("1")) != MonomialCoords.term(perm("1"))


class TestTensorComb:
    """Tests for tensor combinations."""

    def test_text_forms(self):
        """Test the unicode and ASCII separators."""
        t = TensorComb([((perm("1"), perm("21")), 2)])
        assert t.to_text() == "2*(1⊗21)"
        assert t.to_text(ascii=True) == "2*(1(x)21)"
        assert TensorComb.from_text(t.to_text()) == t
        assert TensorComb.from_text(t.to_text(ascii=True)) == t

    def test_monomial_text(self):
        """Test monomial legs."""
        t = MonomialTensor([((tab("1"), EMPTY_TABLEAU), 1)])
        assert t.to_text() == "1*(M[1]⊗M[e])"
        assert MonomialTensor.from_text(t.to_text(), tableaux=True) == t

    def test_json_round_trip(self):
        """Test the JSON form of tensor terms."""
        t = delta_perm(perm("3124"))
        assert TensorComb.from_json(t.to_json()) == t


class TestPermutationAlgebra:
    """Tests for the product and coproduct of permutations."""

    def test_star(self):
        """Test destandardized concatenation of 12 and 21."""
        assert star_perm(perm("12"), perm("21")) == lin("1243", "1342", "1432", "2341", "2431", "3421")

    def test_star_unit(self):
        """Test that the empty permutation is the unit."""
        assert star_perm(EMPTY, perm("21")) == lin("21")
        assert star_perm(perm("21"), EMPTY) == lin("21")

    def test_star_term_count(self):
        """Test that alpha * beta has C(p+q, p) terms."""
        assert len(star_perm(perm("132"), perm("21"))) == 10

    def test_delta(self):
        """Test standardized unshuffling of 3124."""
        expected = TensorComb(
            [
                ((EMPTY, perm("3124")), 1),
                ((perm("1"), perm("213")), 1),
                ((perm("12"), perm("12")), 1),
                ((perm("312"), perm("1")), 1),
                ((perm("3124"), EMPTY), 1),
            ]
        )
        assert delta_perm(perm("3124")) == expected
        assert delta_perm(perm("3124")).to_text() == (
            "1*(e⊗3124) + 1*(1⊗213) + 1*(12⊗12) + 1*(312⊗1) + 1*(3124⊗e)"
        )

    def test_delta_empty(self):
        """Test the coproduct of the unit."""
        assert delta_perm(EMPTY) == TensorComb([((EMPTY, EMPTY), 1)])

    def test_shifted_shuffle(self):
        """Test interleavings of two single letters."""
        assert shifted_shuffle_perm(perm("1"), perm("1")) == lin("12", "21")
        assert shifted_shuffle_perm(perm("21"), EMPTY) == lin("21")

    def test_shifted_shuffle_is_interval(self):
        """Test the interval [a (box) b, b (tri) a] for total size 4."""
        poset = weak_order_poset(4)
        for p in range(5):
            for a in permutations_of(p):
                for b in permutations_of(4 - p):
                    interval = LinComb((s, 1) for s in poset.interval(box(a, b), triangle(b, a)))
                    assert shifted_shuffle_perm(a, b) == interval

    def test_bialgebra(self):
        """Test that the coproduct is multiplicative on S_2 x S_2."""
        for a in permutations_of(2):
            for b in permutations_of(2):
                lhs = coproduct(star_perm(a, b))
                rhs = tensor_multiply(delta_perm(a), delta_perm(b))
                assert lhs == rhs

    def test_counit(self):
        """Test that the counit reads the rank 0 coefficient."""
        assert counit(LinComb([(EMPTY, 3), (perm("1"), 2)])) == 3
        assert PERMUTATIONS.counit(lin("12")) == 0

    def test_counit_dispatches(self):
        """Test that counit uses the algebra of its argument."""
        assert counit(LinComb([(EMPTY_TABLEAU, -2), (tab("12"), 5)])) == -2
        assert counit(LinComb([(tab("1", "2"), 1)])) == 0
        assert counit(LinComb()) == 0


class TestTableauAlgebra:
    """Tests for the quotient algebra of tableaux."""

    def test_star_mass(self):
        """Test that P(12) * P(21) has total coefficient C(4, 2)."""
        product = star_tab(tab("12"), tab("1", "2"))
        assert product.total() == 6
        assert product == apply_p(star_perm(perm("12"), perm("21")))

    def test_star_unit(self):
        """Test that the empty tableau is the unit."""
        assert star_tab(EMPTY_TABLEAU, tab("13", "2")) == LinComb.term(tab("13", "2"))

    def test_delta(self):
        """Test that the coproduct of P(3124) is P applied to delta(3124)."""
        T = insertion_tableau(perm("3124"))
        assert len(delta_tab(T)) == 5
        assert delta_tab(T) == apply_p(delta_perm(perm("3124")))
        assert delta_tab(EMPTY_TABLEAU) == TensorComb([((EMPTY_TABLEAU, EMPTY_TABLEAU), 1)])

    def test_delta_representative_free(self):
        """Test both coproduct constructions on T_5."""
        for T in enumerate_tableaux(5):
            assert delta_tab(T) == delta_tab_via_representative(T)

    def test_shifted_shuffle(self):
        """Test that two single cells shuffle to all of T_2."""
        result = shifted_shuffle_tab(tab("1"), tab("1"))
        assert result == LinComb((T, 1) for T in enumerate_tableaux(2))
        assert shifted_shuffle_tab(EMPTY_TABLEAU, tab("13", "2")) == LinComb.term(tab("13", "2"))

    def test_multiply_dispatch(self):
        """Test that linear operations pick the algebra from the keys."""
        x = LinComb.term(tab("1"))
        assert algebra_of(x) is TABLEAUX
        assert multiply(x, x) == star_tab(tab("1"), tab("1"))

    def test_mixed_types_rejected(self):
        """Test that permutations and tableaux cannot be combined."""
        with pytest.raises(InvalidInputError):
            multiply(LinComb.term(tab("1")), lin("1"))


class TestMonomialCoproduct:
    """Tests for the coproduct of monomial elements."""

    def test_global_descent_example(self):
        """Test the four splittings of 78465213."""
        sigma = perm("78465213")
        expected = MonomialTensor(
            [
                ((sigma, EMPTY), 1),
                ((perm("465213"), perm("12")), 1),
                ((perm("213"), perm("45132")), 1),
                ((EMPTY, sigma), 1),
            ]
        )
        assert delta_monomial_perm(sigma) == expected

    def test_indecomposable_tableau(self):
        """Test that an indecomposable tableau has only boundary terms."""
        T = tab("12")
        expected = MonomialTensor([((T, EMPTY_TABLEAU), 1), ((EMPTY_TABLEAU, T), 1)])
        assert delta_monomial_tab(T) == expected

    def test_two_factor_tableau(self):
        """Test V (tri) U with indecomposable factors has three terms."""
        V, U = tab("12"), tab("12")
        assert triangle_tab(V, U) == tab("12", "34")
        assert len(delta_monomial_tab(triangle_tab(V, U))) == 3


class TestPrimitives:
    """Tests for primitive elements."""

    def test_rank_one(self):
        """Test that rank one basis elements are primitive."""
        assert is_primitive(lin("1"))
        assert is_primitive(LinComb.term(tab("1")))

    def test_indecomposable_monomials(self):
        """Test M_b for indecomposable and decomposable b."""
        assert is_primitive(monomial_element(perm("12")))
        assert not is_primitive(monomial_element(perm("21")))
        assert is_primitive(monomial_element(tab("12")))
        assert not is_primitive(monomial_element(tab("1", "2")))

    def test_fundamental_element_not_primitive(self):
        """Test that 12 itself is not primitive."""
        assert not is_primitive(lin("12"))

    def test_bad_inputs(self):
        """Test zero, mixed and rank-zero input."""
        with pytest.raises(InvalidInputError):
            is_primitive(LinComb())
        with pytest.raises(InvalidInputError):
            is_primitive(lin("1", "12"))
        with pytest.raises(InvalidInputError):
            is_primitive(LinComb.term(EMPTY))

    def test_primitive_bases(self):
        """Test the numbers of indecomposable keys."""
        assert len(primitive_basis_tab(4)) == 3
        assert primitive_basis_tab(1) == [tab("1")]
        assert [len(primitive_basis_perm(n)) for n in range(1, 5)] == [1, 1, 3, 13]
