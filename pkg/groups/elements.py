"""
Group elements and generating sets.
"""
from dataclasses import dataclass
from typing import Any, Iterator, Tuple


@dataclass(frozen=True)
class Element:
    """
    A group element in canonical form.

    The payload layout depends on the group kind:
        z / r      tuple of coordinates
        heis       (a, b, c), the matrix [[1, a, b], [0, 1, c], [0, 0, 1]]
        free       reduced word as signed generator indices, -i is the inverse of i
        qinf/qsum  sorted ((index, Fraction), ...) without neutral entries
        axb        (a, b), the matrix [[e^a, b], [0, 1]]
        sl2/gl     matrix entries, row-major
        unip       integer matrix entries, row-major

    Discrete payloads hash and compare exactly. Continuous payloads still hash
    (floats), but equality that matters is GroupSpec.equals, which uses tolerances.
    """
    kind: str
    payload: Tuple[Any, ...]


@dataclass(frozen=True)
class GeneratingSet:
    """
    An ordered list of generators.

    Attributes:
        elements (tuple): Generators in declaration order; words index them from 1
        symmetric (bool): Closed under inverses
        contains_identity (bool): The identity was declared as a generator
        standard (bool): The kind's default generating set, symmetrized
    """
    elements: Tuple[Element, ...]
    symmetric: bool = False
    contains_identity: bool = False
    standard: bool = False

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __getitem__(self, index: int) -> Element:
        return self.elements[index]
