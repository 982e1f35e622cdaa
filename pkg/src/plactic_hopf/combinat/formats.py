"""Text and JSON forms of permutations and tableaux."""

import re
from typing import Union

from ..errors import InvalidInputError
from .permutations import EMPTY, Permutation
from .tableaux import EMPTY_TABLEAU, Tableau, standard_tableau

BasisKey = Union[Permutation, Tableau]

_EMPTY_TOKENS = ("e", "ε", "")


def _parse_letters(text: str, spaced: bool = False) -> tuple[int, ...]:
    text = text.strip()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
    elif spaced or " " in text:
        parts = text.split()
    else:
        parts = list(text)
    if not parts or not all(re.fullmatch(r"\d+", p) for p in parts):
        raise InvalidInputError(f"Malformed letters: {text!r}")
    return tuple(int(p) for p in parts)


def parse_permutation(text: str) -> Permutation:
    """Parse "45231", "4,5,2,3,1,10,..." or "e" (the empty permutation).

    Raises:
        InvalidInputError: If the text is not a permutation of 1..n.
    """
    text = text.strip()
    if text in _EMPTY_TOKENS:
        return EMPTY
    return Permutation(_parse_letters(text))


def parse_tableau(text: str) -> Tableau:
    """Parse rows joined by "/" from the top row down, e.g. "1347/25/6".

    Rows are digit strings, or space separated numbers when some entry
    exceeds 9. "e" is the empty tableau. A trailing "/" is accepted so that
    single-row tableaux can be told apart from permutations ("123/").

    Raises:
        InvalidInputError: If the text is not a standard Young tableau.
    """
    text = text.strip()
    if text in _EMPTY_TOKENS:
        return EMPTY_TABLEAU
    rows = [r for r in text.split("/")]
    if rows and rows[-1].strip() == "" and len(rows) > 1:
        rows = rows[:-1]
    # nine cells at most can be written digit by digit
    spaced = " " in text or "," in text or sum(ch.isdigit() for ch in text) > 9
    return standard_tableau(_parse_letters(r, spaced) for r in rows)


def looks_like_tableau(text: str) -> bool:
    """Tableau keys contain "/"; anything else is read as a permutation."""
    return "/" in text


def parse_key(text: str, tableaux: bool = False) -> BasisKey:
    """Parse a basis key, detecting tableaux by their "/" separator.

    Args:
        text: The key text.
        tableaux: Force the tableau interpretation.
    """
    if tableaux or looks_like_tableau(text):
        return parse_tableau(text)
    return parse_permutation(text)


def tableau_to_json(T: Tableau) -> list[list[int]]:
    """JSON form of a tableau: list of rows."""
    return [list(row) for row in T.rows]


def tableau_from_json(data: list) -> Tableau:
    """Inverse of tableau_to_json; validates standardness."""
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InvalidInputError(f"Tableau JSON must be a list of rows, got {data!r}")
    return standard_tableau((int(x) for x in r) for r in data)


def render_tableau(T: Tableau, french: bool = False) -> str:
    """Multi-line drawing of a tableau.

    Args:
        T: The tableau.
        french: Put row 1 at the bottom, as in French convention.

    Returns:
        One line per row, entries right-aligned in columns.
    """
    if not T.rows:
        return "e"
    width = max(len(str(x)) for row in T.rows for x in row)
    lines = [" ".join(str(x).rjust(width) for x in row) for row in T.rows]
    if french:
        lines.reverse()
    return "\n".join(lines)
