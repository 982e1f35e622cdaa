"""Tests for permutations and the shifted concatenations."""

import pytest
from hypothesis import given, strategies as st

from plactic_hopf.combinat import (
    EMPTY,
    Permutation,
    box,
    global_descents,
    inversion_set,
    is_triangle_indecomposable,
    leq_weak,
    permutations_of,
    restrict,
    reverse,
    standardize,
    triangle,
    triangle_all,
    triangle_factorize,
    weak_covers,
)
from plactic_hopf.errors import InvalidInputError


def perm(text: str) -> Permutation:
    return Permutation(tuple(int(ch) for ch in text))


@st.composite
def permutation_strategy(draw, max_n=6):
    n = draw(st.integers(min_value=0, max_value=max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


class TestPermutation:
    """Tests for the Permutation value type."""

    def test_create(self):
        """Test creating a permutation from its word."""
        sigma = perm("45231")
        assert sigma.word == (4, 5, 2, 3, 1)
        assert len(sigma) == 5
        assert str(sigma) == "45231"

    def test_reject_non_permutation(self):
        """Test that words that are not permutations of 1..n are rejected."""
        with pytest.raises(InvalidInputError):
            Permutation((1, 1))
        with pytest.raises(InvalidInputError):
            Permutation((2, 3))

    def test_empty_is_a_value(self):
        """Test that the empty permutation renders as e."""
        assert len(EMPTY) == 0
        assert str(EMPTY) == "e"

    def test_large_letters_comma_separated(self):
        """Test that words with a letter above 9 use commas."""
        sigma = Permutation((4, 5, 2, 3, 1, 10, 6, 7, 8, 9))
        assert str(sigma) == "4,5,2,3,1,10,6,7,8,9"

    def test_identity_and_longest(self):
        """Test the extreme elements of S_n."""
        assert Permutation.identity(3) == perm("123")
        assert Permutation.longest(3) == perm("321")

    def test_permutations_of_counts(self):
        """Test that S_n has n! elements in lexicographic order."""
        assert len(permutations_of(4)) == 24
        assert permutations_of(0) == [EMPTY]
        assert [str(s) for s in permutations_of(3)] == ["123", "132", "213", "231", "312", "321"]

    def test_permutations_of_cached_copy(self):
        """Test that the cached listing cannot be altered through a returned list."""
        first = permutations_of(3)
        first.clear()
        second = permutations_of(3)
        assert len(second) == 6
        assert second is not permutations_of(3)
        assert second[0] is permutations_of(3)[0]


class TestStandardizeAndRestrict:
    """Tests for standardize and restrict."""

    def test_standardize(self):
        """Test replacing letters by their ranks."""
        assert standardize((5, 7, 1, 3)) == perm("3412")
        assert standardize((2, 6, 3)) == perm("132")
        assert standardize(perm("123")) == perm("123")

    def test_standardize_duplicates(self):
        """Test that repeated letters are rejected."""
        with pytest.raises(InvalidInputError):
            standardize((1, 2, 1))

    def test_restrict_to_set(self):
        """Test keeping the letters of an arbitrary set."""
        assert restrict(perm("2517643"), {2, 3, 6}) == (2, 6, 3)

    def test_restrict_to_interval(self):
        """Test keeping the letters of an interval."""
        assert restrict(perm("3124"), range(2, 5)) == (3, 2, 4)
        assert restrict(perm("3124"), range(1, 5)) == (3, 1, 2, 4)
        assert restrict(perm("3124"), []) == ()

    @given(permutation_strategy())
    def test_standardize_idempotent(self, sigma):
        """Test that standardize is the identity on permutations."""
        assert standardize(sigma) == sigma


class TestWeakOrder:
    """Tests for inversion sets, comparison and covers."""

    def test_inversion_set(self):
        """Test inversions by values."""
        assert inversion_set(perm("231")) == {(2, 1), (3, 1)}
        assert inversion_set(perm("21")) == {(2, 1)}
        assert inversion_set(perm("1234")) == frozenset()

    def test_leq_weak(self):
        """Test comparison by inversion set containment."""
        assert leq_weak(perm("123"), perm("321"))
        assert not leq_weak(perm("231"), perm("213"))
        assert leq_weak(perm("231"), perm("231"))

    def test_leq_weak_size_mismatch(self):
        """Test that permutations of different sizes cannot be compared."""
        with pytest.raises(InvalidInputError):
            leq_weak(perm("12"), perm("123"))

    def test_weak_covers(self):
        """Test that covers swap an ascent at adjacent positions."""
        assert weak_covers(perm("12")) == [perm("21")]
        assert weak_covers(perm("321")) == []
        assert weak_covers(perm("213")) == [perm("231")]
        assert weak_covers(perm("123")) == [perm("213"), perm("132")]

    def test_cover_count_s3(self):
        """Test that S_3 has six cover relations."""
        assert sum(len(weak_covers(s)) for s in permutations_of(3)) == 6

    def test_covers_add_one_inversion(self):
        """Test that every cover adds exactly one inversion."""
        for u in permutations_of(4):
            for v in weak_covers(u):
                assert inversion_set(u) < inversion_set(v)
                assert len(inversion_set(v)) == len(inversion_set(u)) + 1


class TestShiftedConcatenation:
    """Tests for box, triangle and reverse."""

    def test_box(self):
        """Test the right shifted concatenation."""
        assert box(perm("231"), perm("12")) == perm("23145")
        assert box(perm("12"), perm("21")) == perm("1243")
        assert box(EMPTY, perm("21")) == perm("21")

    def test_triangle(self):
        """Test the left shifted concatenation."""
        assert triangle(perm("12"), perm("231")) == perm("45231")
        assert triangle(perm("132"), perm("213")) == perm("465213")
        assert triangle(perm("21"), EMPTY) == perm("21")

    def test_reverse(self):
        """Test reversing words."""
        assert reverse(perm("45231")) == perm("13254")
        assert reverse(EMPTY) == EMPTY
        assert reverse((3, 1)) == (1, 3)

    @given(permutation_strategy(4), permutation_strategy(4))
    def test_reversal_exchanges_products(self, u, v):
        """Test that v (tri) u is the reversal of reverse(u) (box) reverse(v)."""
        assert triangle(v, u) == reverse(box(reverse(u), reverse(v)))

    @given(permutation_strategy(3), permutation_strategy(3), permutation_strategy(3))
    def test_associativity(self, a, b, c):
        """Test that both products are associative."""
        assert box(box(a, b), c) == box(a, box(b, c))
        assert triangle(triangle(a, b), c) == triangle(a, triangle(b, c))


class TestGlobalDescents:
    """Tests for global descents and the factorization they define."""

    def test_global_descents(self):
        """Test global descent positions."""
        assert global_descents(perm("78465213")) == {2, 5}
        assert global_descents(perm("1234")) == frozenset()
        assert global_descents(perm("321")) == {1, 2}

    def test_factorize(self):
        """Test factoring at global descents."""
        assert triangle_factorize(perm("78465213")) == [perm("12"), perm("132"), perm("213")]
        assert triangle_factorize(perm("321")) == [perm("1")] * 3
        assert triangle_factorize(perm("2413")) == [perm("2413")]
        assert triangle_factorize(EMPTY) == []

    def test_indecomposable(self):
        """Test the indecomposability predicate."""
        assert is_triangle_indecomposable(perm("12"))
        assert not is_triangle_indecomposable(perm("21"))
        assert is_triangle_indecomposable(perm("1"))

    def test_empty_is_neither(self):
        """Test that the unit is rejected by the predicate."""
        with pytest.raises(InvalidInputError):
            is_triangle_indecomposable(EMPTY)

    @given(permutation_strategy(7))
    def test_factorization_reconstitutes(self, sigma):
        """Test that folding the factors gives sigma back."""
        factors = triangle_factorize(sigma)
        assert triangle_all(factors) == sigma
        assert all(is_triangle_indecomposable(f) for f in factors)
