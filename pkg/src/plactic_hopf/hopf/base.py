"""Integer combinations over permutations or tableaux, and the Hopf algebra interface."""

import re
from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any, Hashable, Iterable, Iterator, Mapping, Optional, Union

from ..combinat.formats import parse_key, tableau_from_json, tableau_to_json
from ..combinat.permutations import Permutation
from ..combinat.tableaux import Tableau
from ..errors import InvalidInputError

if TYPE_CHECKING:
    from ..poset.base import FinitePoset

BasisKey = Union[Permutation, Tableau]

_TERM = re.compile(r"^(-?\d+)\*(.+)$", re.DOTALL)
_SPLIT = re.compile(r"\s+([+-])\s+")


def key_order(key: BasisKey) -> tuple:
    """Sort key over both basis types: permutations first, then tableaux."""
    return (isinstance(key, Tableau), key.sort_key())


def key_to_json(key: BasisKey) -> Any:
    """Permutations as their text form, tableaux as lists of rows."""
    if isinstance(key, Tableau):
        return tableau_to_json(key)
    return str(key)


def key_from_json(data: Any) -> BasisKey:
    """Inverse of key_to_json."""
    if isinstance(data, list):
        return tableau_from_json(data)
    if isinstance(data, str):
        return parse_key(data)
    raise InvalidInputError(f"Malformed basis key in JSON: {data!r}")


class FreeModuleElement(ABC):
    """An element of a free Z-module with integer coefficients.

    Zero coefficients are never stored, so equality is structural. Terms are
    always listed in a canonical order, which keeps text and JSON output
    stable.
    """

    def __init__(self, terms: Optional[Union[Mapping, Iterable[tuple[Hashable, int]]]] = None):
        """Initialize from a mapping or (key, coefficient) pairs; repeated keys add up."""
        self._terms: dict = {}
        if terms is None:
            return
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in pairs:
            self._add_term(key, coeff)

    def _add_term(self, key: Hashable, coeff: int) -> None:
        if not isinstance(coeff, int):
            raise InvalidInputError(f"Coefficients must be integers, got {coeff!r}")
        total = self._terms.get(key, 0) + coeff
        if total:
            self._terms[key] = total
        else:
            self._terms.pop(key, None)

    @classmethod
    @abstractmethod
    def _order(cls, key: Hashable) -> tuple:
        """Canonical sort key of a term."""
        pass

    @classmethod
    @abstractmethod
    def _format_key(cls, key: Hashable, ascii: bool = False) -> str:
        """Text form of a term key."""
        pass

    @classmethod
    @abstractmethod
    def _parse_key(cls, text: str, tableaux: bool = False) -> Hashable:
        """Inverse of _format_key."""
        pass

    @classmethod
    @abstractmethod
    def _key_to_json(cls, key: Hashable, coeff: int) -> dict:
        pass

    @classmethod
    @abstractmethod
    def _key_from_json(cls, item: dict) -> Hashable:
        pass

    @classmethod
    def zero(cls):
        """The zero element."""
        return cls()

    @classmethod
    def term(cls, key: Hashable, coeff: int = 1):
        """A single term coeff * key."""
        return cls({key: coeff})

    def items(self) -> list[tuple[Hashable, int]]:
        """(key, coefficient) pairs in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: self._order(kv[0]))

    def support(self) -> list:
        """Keys with nonzero coefficient, in canonical order."""
        return [k for k, _ in self.items()]

    def coefficient(self, key: Hashable) -> int:
        """Coefficient of key (0 when absent)."""
        return self._terms.get(key, 0)

    def __getitem__(self, key: Hashable) -> int:
        return self.coefficient(key)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._terms

    def __iter__(self) -> Iterator:
        return iter(self.support())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        result = type(self)(self._terms)
        for key, coeff in other._terms.items():
            result._add_term(key, coeff)
        return result

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return type(self)({k: scalar * c for k, c in self._terms.items()})

    __rmul__ = __mul__

    def total(self) -> int:
        """Sum of all coefficients."""
        return sum(self._terms.values())

    def to_text(self, ascii: bool = False) -> str:
        """Render as "c*key + c*key - c*key"; the zero element is "0"."""
        parts = []
        for key, coeff in self.items():
            body = f"{abs(coeff)}*{self._format_key(key, ascii)}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if coeff > 0 else '-'} {body}")
        return " ".join(parts) if parts else "0"

    @classmethod
    def from_text(cls, text: str, tableaux: bool = False):
        """Parse the output of to_text.

        Args:
            text: The text form.
            tableaux: Read keys without "/" as single-row tableaux.

        Raises:
            InvalidInputError: If a term is malformed.
        """
        text = text.strip()
        result = cls()
        if text == "0":
            return result
        pieces = _SPLIT.split(text)
        signs = ["+"] + pieces[1::2]
        for sign, body in zip(signs, pieces[0::2]):
            match = _TERM.match(body.strip())
            if not match:
                raise InvalidInputError(f"Malformed term: {body!r}")
            coeff = int(match.group(1)) * (1 if sign == "+" else -1)
            result._add_term(cls._parse_key(match.group(2).strip(), tableaux), coeff)
        return result

    def to_json(self) -> list[dict]:
        """List of term objects in canonical order."""
        return [self._key_to_json(k, c) for k, c in self.items()]

    @classmethod
    def from_json(cls, data: list):
        """Inverse of to_json."""
        if not isinstance(data, list):
            raise InvalidInputError(f"Expected a list of terms, got {data!r}")
        result = cls()
        for item in data:
            result._add_term(cls._key_from_json(item), int(item["coeff"]))
        return result

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_text()})"


class LinComb(FreeModuleElement):
    """Linear combination of permutations or tableaux in the fundamental basis."""

    @classmethod
    def _order(cls, key: BasisKey) -> tuple:
        return key_order(key)

    @classmethod
    def _format_key(cls, key: BasisKey, ascii: bool = False) -> str:
        return str(key)

    @classmethod
    def _parse_key(cls, text: str, tableaux: bool = False) -> BasisKey:
        return parse_key(text, tableaux)

    @classmethod
    def _key_to_json(cls, key: BasisKey, coeff: int) -> dict:
        return {"coeff": coeff, "key": key_to_json(key)}

    @classmethod
    def _key_from_json(cls, item: dict) -> BasisKey:
        return key_from_json(item["key"])

    def ranks(self) -> set[int]:
        """Ranks present in the support."""
        return {len(k) for k in self._terms}

    def homogeneous_rank(self) -> int:
        """The common rank of all terms.

        Raises:
            InvalidInputError: If the element is zero or mixes ranks.
        """
        ranks = self.ranks()
        if len(ranks) != 1:
            raise InvalidInputError(f"Expected a homogeneous nonzero element, got ranks {sorted(ranks)}")
        return ranks.pop()


class MonomialCoords(LinComb):
    """Coordinates in a monomial basis M; a key b stands for M_b."""

    @classmethod
    def _format_key(cls, key: BasisKey, ascii: bool = False) -> str:
        return f"M[{key}]"

    @classmethod
    def _parse_key(cls, text: str, tableaux: bool = False) -> BasisKey:
        if not (text.startswith("M[") and text.endswith("]")):
            raise InvalidInputError(f"Monomial term must look like M[key], got {text!r}")
        return parse_key(text[2:-1], tableaux)


class TensorComb(FreeModuleElement):
    """Combination of ordered pairs (x, y) standing for x ⊗ y."""

    _SEPARATOR = "⊗"
    _ASCII_SEPARATOR = "(x)"

    @classmethod
    def _order(cls, key: tuple) -> tuple:
        return (key_order(key[0]), key_order(key[1]))

    @classmethod
    def _format_leg(cls, key: BasisKey) -> str:
        return str(key)

    @classmethod
    def _parse_leg(cls, text: str, tableaux: bool) -> BasisKey:
        return parse_key(text, tableaux)

    @classmethod
    def _format_key(cls, key: tuple, ascii: bool = False) -> str:
        sep = cls._ASCII_SEPARATOR if ascii else cls._SEPARATOR
        return f"({cls._format_leg(key[0])}{sep}{cls._format_leg(key[1])})"

    @classmethod
    def _parse_key(cls, text: str, tableaux: bool = False) -> tuple:
        if not (text.startswith("(") and text.endswith(")")):
            raise InvalidInputError(f"Tensor term must be parenthesized, got {text!r}")
        inner = text[1:-1]
        sep = cls._SEPARATOR if cls._SEPARATOR in inner else cls._ASCII_SEPARATOR
        legs = inner.split(sep)
        if len(legs) != 2:
            raise InvalidInputError(f"Tensor term must have two legs, got {text!r}")
        return (cls._parse_leg(legs[0].strip(), tableaux), cls._parse_leg(legs[1].strip(), tableaux))

    @classmethod
    def _key_to_json(cls, key: tuple, coeff: int) -> dict:
        return {"coeff": coeff, "left": key_to_json(key[0]), "right": key_to_json(key[1])}

    @classmethod
    def _key_from_json(cls, item: dict) -> tuple:
        return (key_from_json(item["left"]), key_from_json(item["right"]))


class MonomialTensor(TensorComb):
    """Tensor coordinates in a monomial basis: (u, v) stands for M_u ⊗ M_v."""

    @classmethod
    def _format_leg(cls, key: BasisKey) -> str:
        return f"M[{key}]"

    @classmethod
    def _parse_leg(cls, text: str, tableaux: bool) -> BasisKey:
        return MonomialCoords._parse_key(text, tableaux)


class HopfAlgebra(ABC):
    """A graded connected Hopf algebra with a combinatorial fundamental basis.

    Subclasses supply the basis, the product and coproduct of basis elements,
    the order defining the monomial basis and the left shifted product. The
    bilinear and linear extensions are provided here.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Short name used in logs and reports."""
        pass

    @property
    @abstractmethod
    def key_type(self) -> type:
        """Type of the basis keys."""
        pass

    @property
    @abstractmethod
    def unit(self) -> BasisKey:
        """The rank-0 basis element."""
        pass

    @abstractmethod
    def basis(self, n: int) -> list:
        """Basis keys of rank n in canonical order."""
        pass

    @abstractmethod
    def product(self, a: BasisKey, b: BasisKey) -> LinComb:
        """Product of two basis elements."""
        pass

    @abstractmethod
    def coproduct_of(self, b: BasisKey) -> TensorComb:
        """Coproduct of a basis element."""
        pass

    @abstractmethod
    def order(self, n: int) -> "FinitePoset":
        """The order on rank-n keys defining the monomial basis."""
        pass

    @abstractmethod
    def triangle(self, v: BasisKey, u: BasisKey) -> BasisKey:
        """Left shifted product v (tri) u."""
        pass

    @abstractmethod
    def is_indecomposable(self, b: BasisKey) -> bool:
        """True iff b is not v (tri) u with v, u nonempty."""
        pass

    @abstractmethod
    def monomial_coproduct(self, b: BasisKey) -> "MonomialTensor":
        """Coproduct of M_b in monomial coordinates, from the factorization of b."""
        pass

    def owns(self, key: object) -> bool:
        """True iff key is a basis key of this algebra."""
        return isinstance(key, self.key_type)

    def multiply(self, x: LinComb, y: LinComb) -> LinComb:
        """Bilinear extension of product."""
        return LinComb(
            (k, ca * cb * c)
            for a, ca in x.items()
            for b, cb in y.items()
            for k, c in self.product(a, b).items()
        )

    def coproduct(self, x: LinComb) -> TensorComb:
        """Linear extension of coproduct_of."""
        return TensorComb((k, c * ck) for b, c in x.items() for k, ck in self.coproduct_of(b).items())

    def tensor_multiply(self, s: TensorComb, t: TensorComb) -> TensorComb:
        """Componentwise product (a (x) b)(c (x) d) = ac (x) bd."""
        terms = []
        for (a, b), cs in s.items():
            for (c, d), ct in t.items():
                right = self.product(b, d).items()
                for x, cx in self.product(a, c).items():
                    terms.extend(((x, y), cs * ct * cx * cy) for y, cy in right)
        return TensorComb(terms)

    def counit(self, x: LinComb) -> int:
        """Coefficient of the unit; the counit kills every positive rank."""
        return x.coefficient(self.unit)

    def boundary(self, x: LinComb) -> TensorComb:
        """x (x) unit + unit (x) x, the coproduct of a primitive element."""
        return TensorComb(((b, self.unit), c) for b, c in x.items()) + TensorComb(
            ((self.unit, b), c) for b, c in x.items()
        )

    def __str__(self) -> str:
        return self.name
