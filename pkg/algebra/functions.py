"""
Finitely supported functions on a discrete group, the elements of the
weighted ℓ¹ algebra.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from groups.elements import Element
from groups.kinds import GroupSpec
from scales.scale import Scale
from utils.errors import GroupMismatchError, GroupSpecError
from utils.logger import get_logger

logger = get_logger("algebra")

Coefficient = Union[Fraction, float]


def _coefficient(value) -> Coefficient:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise GroupSpecError(f"Bad coefficient {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise GroupSpecError(f"Bad coefficient {value!r}")
    raise GroupSpecError(f"Bad coefficient {value!r}")


@dataclass(frozen=True, eq=False)
class WeightedFunction:
    """
    φ: G → Q (or R) with finite support.

    Coefficients are Fractions in exact mode; a single float coefficient
    switches the function to float mode. Zero coefficients never appear in
    `terms`, which are kept in the group's canonical order.

    Attributes:
        group (GroupSpec): A discrete group
        terms (tuple): ((element, coefficient), ...)
        scale (Scale): Scale the seminorms of φ are taken with, optional
    """
    group: GroupSpec
    terms: Tuple[Tuple[Element, Coefficient], ...]
    scale: Optional[Scale] = None

    @classmethod
    def from_items(cls, group: GroupSpec, items: Iterable[Tuple[Element, object]],
                   scale: Optional[Scale] = None) -> "WeightedFunction":
        """Build φ from (element, coefficient) pairs, adding up repeated elements."""
        merged: Dict[Element, Coefficient] = {}
        for g, value in items:
            g = group.canonical_form(g)
            merged[g] = merged.get(g, Fraction(0)) + _coefficient(value)
        return cls._from_map(group, merged, scale)

    @classmethod
    def _from_map(cls, group: GroupSpec, merged: Dict[Element, Coefficient],
                  scale: Optional[Scale]) -> "WeightedFunction":
        if scale is not None and scale.group != group:
            raise GroupMismatchError(f"Scale on {scale.group.spec} attached to a function on {group.spec}")
        terms = tuple(sorted(((g, c) for g, c in merged.items() if c != 0), key=lambda t: group.sort_key(t[0])))
        return cls(group=group, terms=terms, scale=scale)

    @classmethod
    def delta(cls, group: GroupSpec, g: Element, coefficient=1, scale: Optional[Scale] = None) -> "WeightedFunction":
        """coefficient · δ_g."""
        return cls.from_items(group, [(g, coefficient)], scale)

    @classmethod
    def parse(cls, group: GroupSpec, pairs: Iterable[Tuple[str, str]],
              scale: Optional[Scale] = None) -> "WeightedFunction":
        """Build φ from (element text, coefficient text) pairs, as read from a function literal."""
        return cls.from_items(group, [(group.parse_element(e), c) for e, c in pairs], scale)

    @property
    def exact(self) -> bool:
        return all(isinstance(c, Fraction) for _, c in self.terms)

    @property
    def support(self) -> List[Element]:
        return [g for g, _ in self.terms]

    def __iter__(self) -> Iterator[Tuple[Element, Coefficient]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def as_dict(self) -> Dict[Element, Coefficient]:
        return dict(self.terms)

    def coefficient(self, g: Element) -> Coefficient:
        return self.as_dict().get(self.group.canonical_form(g), Fraction(0))

    def with_scale(self, scale: Scale) -> "WeightedFunction":
        return WeightedFunction._from_map(self.group, self.as_dict(), scale)

    def plus(self, other: "WeightedFunction") -> "WeightedFunction":
        if other.group != self.group:
            raise GroupMismatchError(f"Cannot add functions on {self.group.spec} and {other.group.spec}")
        merged = self.as_dict()
        for g, c in other.terms:
            merged[g] = merged.get(g, Fraction(0)) + c
        return WeightedFunction._from_map(self.group, merged, self.scale or other.scale)

    def equals(self, other: "WeightedFunction") -> bool:
        return self.group == other.group and self.terms == other.terms

    def to_records(self) -> List[Dict[str, str]]:
        """Rows {element, coefficient} in canonical order, coefficients as exact text or 17 digits."""
        fmt = self.group.format_element
        return [{"element": fmt(g), "coefficient": str(c) if isinstance(c, Fraction) else format(c, ".17g")}
                for g, c in self.terms]
