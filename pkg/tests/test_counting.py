"""Tests for the closed-form counting oracles."""

import pytest

from plactic_hopf.combinat import enumerate_tableaux
from plactic_hopf.combinat.tableaux import partitions
from plactic_hopf.hopf import count_indecomposable_perm
from plactic_hopf.errors import InvalidInputError
from plactic_hopf.utils import (
    conjugate_shape,
    hook_length_count,
    indecomposable_permutation_count,
    involution_count,
)


class TestHookLength:
    """Tests for the hook length formula."""

    def test_small_shapes(self):
        """Test known counts."""
        assert hook_length_count((3, 2)) == 5
        assert hook_length_count((2, 1)) == 2
        assert hook_length_count((1, 1, 1)) == 1
        assert hook_length_count(()) == 1

    def test_conjugate(self):
        """Test column lengths."""
        assert conjugate_shape((3, 1)) == (2, 1, 1)
        assert conjugate_shape(()) == ()

    def test_not_a_partition(self):
        """Test rejection of increasing shapes."""
        with pytest.raises(InvalidInputError):
            hook_length_count((1, 2))

    def test_sum_over_partitions(self):
        """Test that hook counts add up to the involution numbers."""
        for n in range(9):
            assert sum(hook_length_count(shape) for shape in partitions(n)) == involution_count(n)


class TestInvolutions:
    """Tests for the involution numbers."""

    def test_values(self):
        """Test the first eleven values."""
        assert [involution_count(n) for n in range(11)] == [1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496]

    def test_match_enumeration(self):
        """Test against enumerated tableaux."""
        for n in range(7):
            assert involution_count(n) == len(enumerate_tableaux(n))


class TestIndecomposablePermutations:
    """Tests for permutations without global descent."""

    def test_values(self):
        """Test the recurrence."""
        assert [indecomposable_permutation_count(n) for n in range(1, 7)] == [1, 1, 3, 13, 71, 461]

    def test_match_enumeration(self):
        """Test against direct counting on S_n."""
        for n in range(1, 7):
            assert indecomposable_permutation_count(n) == count_indecomposable_perm(n)

    def test_rank_zero(self):
        """Test that rank zero is rejected."""
        with pytest.raises(InvalidInputError):
            indecomposable_permutation_count(0)
