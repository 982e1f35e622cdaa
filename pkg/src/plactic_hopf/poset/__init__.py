"""Finite posets, Möbius functions and the orders on permutations and tableaux."""

from .base import FinitePoset, write_edge_list
from .builders import poset_for, taskin_poset, weak_order_poset

__all__ = [
    "FinitePoset",
    "write_edge_list",
    "poset_for",
    "taskin_poset",
    "weak_order_poset",
]
