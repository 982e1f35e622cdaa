"""Text and JSON rendering of command results."""

import json
from typing import Any, Sequence

from ..combinat.formats import render_tableau
from ..combinat.permutations import Permutation
from ..combinat.tableaux import Tableau, insertion_tableau
from ..hopf.base import FreeModuleElement, MonomialCoords, key_to_json

# Representatives of the tableaux in the expansion of M_{P(123)} * M_{P(123)},
# in the order that expansion is usually written.
NEGATIVE_EXPANSION_ORDER = (
    "123456",
    "241356",
    "251346",
    "261345",
    "351246",
    "361245",
    "461235",
    "256134",
    "346125",
    "356124",
    "456123",
    "362514",
    "462513",
    "543126",
)

# Coefficients of the expansion as published, aligned with NEGATIVE_EXPANSION_ORDER.
# The last one disagrees with the computed value -2 and is reported, not corrected.
PUBLISHED_COEFFICIENTS = (1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 2, 2, -1, -1)


def to_jsonable(value: Any) -> Any:
    """Convert a result to plain JSON data."""
    if isinstance(value, (Permutation, Tableau)):
        return key_to_json(value)
    if isinstance(value, FreeModuleElement):
        return value.to_json()
    if isinstance(value, dict):
        return {k: to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def dump_json(value: Any) -> str:
    """Canonical JSON text of a result."""
    return json.dumps(to_jsonable(value), ensure_ascii=False)


def render_value(value: Any, french: bool = False, ascii: bool = False) -> str:
    """Text form of a result.

    Tableaux are followed by their drawing; combinations use their one-line
    text form.
    """
    if isinstance(value, Tableau):
        return f"{value}\n{render_tableau(value, french)}"
    if isinstance(value, FreeModuleElement):
        return value.to_text(ascii=ascii)
    return str(value)


def _signed(coeff: int, body: str, first: bool) -> str:
    magnitude = "" if abs(coeff) == 1 else f"{abs(coeff)}*"
    if first:
        return f"{'-' if coeff < 0 else ''}{magnitude}{body}"
    return f"{'-' if coeff < 0 else '+'} {magnitude}{body}"


def ordered_terms(result: MonomialCoords, order: Sequence[str] = NEGATIVE_EXPANSION_ORDER) -> list[tuple[str, int]]:
    """Terms of a tableau monomial expansion, listed in a preferred order.

    Args:
        result: Monomial coordinates over tableaux.
        order: Permutations whose insertion tableaux come first, in order.

    Returns:
        (label, coefficient) pairs. Tableaux reached from order are labelled
        "P(<permutation>)", the others by their own text form and come last.
    """
    terms = []
    seen = set()
    for text in order:
        T = insertion_tableau(Permutation(tuple(int(ch) for ch in text)))
        seen.add(T)
        coeff = result.coefficient(T)
        if coeff:
            terms.append((f"P({text})", coeff))
    terms.extend((str(T), c) for T, c in result.items() if T not in seen)
    return terms


def render_ordered_expansion(result: MonomialCoords) -> str:
    """One-line expansion "M_{P(123456)} - M_{P(241356)} ... + 2*M_{P(456123)} ..."."""
    terms = ordered_terms(result)
    if not terms:
        return "0"
    return " ".join(_signed(c, f"M_{{{label}}}", i == 0) for i, (label, c) in enumerate(terms))


def published_mismatches(
    result: MonomialCoords,
    order: Sequence[str] = NEGATIVE_EXPANSION_ORDER,
    published: Sequence[int] = PUBLISHED_COEFFICIENTS,
) -> list[dict]:
    """Terms whose computed coefficient differs from the published one.

    Returns:
        One {"key", "computed", "published"} record per disagreeing term, in order.
    """
    mismatches = []
    for text, expected in zip(order, published):
        computed = result.coefficient(insertion_tableau(Permutation(tuple(int(ch) for ch in text))))
        if computed != expected:
            mismatches.append({"key": f"P({text})", "computed": computed, "published": expected})
    return mismatches


def render_mismatch(mismatch: dict) -> str:
    """Note line for one published_mismatches record."""
    return (
        f"note: coefficient of M_{{{mismatch['key']}}} is {mismatch['computed']}, "
        f"published value {mismatch['published']}"
    )
