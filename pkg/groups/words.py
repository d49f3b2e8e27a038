"""
Word evaluation and canonical forms.
"""
from typing import Any, Optional, Sequence

from groups.elements import Element, GeneratingSet
from groups.kinds import GroupSpec
from utils.errors import GeneratorIndexError


def evaluate_word(group: GroupSpec, word: Sequence[int], generators: Optional[GeneratingSet] = None) -> Element:
    """
    Multiply out a word in the generators.

    Args:
        group (GroupSpec): The group
        word (Sequence[int]): Signed 1-based generator indices; -i stands for the inverse of generator i
        generators (GeneratingSet): Generators the indices refer to; defaults to the group's declared basis

    Returns:
        Element: The product, in canonical form
    """
    gens = generators if generators is not None else group.basis()
    result = group.identity()
    for letter in word:
        index = abs(int(letter))
        if index == 0 or index > len(gens):
            raise GeneratorIndexError(f"Generator index {letter} outside 1..{len(gens)}")
        g = gens[index - 1]
        result = group.multiply(result, g if letter > 0 else group.inverse(g))
    return result


def canonical_form(group: GroupSpec, raw: Any) -> Element:
    """Canonical element of `group` for raw payload data."""
    return group.canonical_form(raw)
