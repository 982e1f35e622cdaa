"""Counting oracles."""

from .counting import conjugate_shape, hook_length_count, indecomposable_permutation_count, involution_count

__all__ = [
    "conjugate_shape",
    "hook_length_count",
    "indecomposable_permutation_count",
    "involution_count",
]
