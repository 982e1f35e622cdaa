"""Permutations, tableaux and their shifted concatenation products."""

from .permutations import (
    EMPTY,
    Permutation,
    Word,
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
from .tableaux import (
    EMPTY_TABLEAU,
    Tableau,
    box_tab,
    count_indecomposable,
    enumerate_tableaux,
    fall_onto,
    insertion_tableau,
    inverse_rsk,
    is_triangle_indecomposable_tab,
    knuth_closure,
    knuth_neighbors,
    plactic_class,
    reading_word,
    restrict_std,
    row_insert,
    rsk,
    standard_tableau,
    tableaux_of_shape,
    triangle_factorize_tab,
    triangle_split_points,
    triangle_tab,
    triangle_tab_all,
)
from .formats import parse_key, parse_permutation, parse_tableau, render_tableau

__all__ = [
    "EMPTY",
    "Permutation",
    "Word",
    "box",
    "global_descents",
    "inversion_set",
    "is_triangle_indecomposable",
    "leq_weak",
    "permutations_of",
    "restrict",
    "reverse",
    "standardize",
    "triangle",
    "triangle_all",
    "triangle_factorize",
    "weak_covers",
    "EMPTY_TABLEAU",
    "Tableau",
    "box_tab",
    "count_indecomposable",
    "enumerate_tableaux",
    "fall_onto",
    "insertion_tableau",
    "inverse_rsk",
    "is_triangle_indecomposable_tab",
    "knuth_closure",
    "knuth_neighbors",
    "plactic_class",
    "reading_word",
    "restrict_std",
    "row_insert",
    "rsk",
    "standard_tableau",
    "tableaux_of_shape",
    "triangle_factorize_tab",
    "triangle_split_points",
    "triangle_tab",
    "triangle_tab_all",
    "parse_key",
    "parse_permutation",
    "parse_tableau",
    "render_tableau",
]
