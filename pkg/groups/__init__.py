"""
Groups: kinds, elements, words and balls.
"""
from groups.ball import Shell, ShellTable, ball_enumerate, word_gauge
from groups.elements import Element, GeneratingSet
from groups.kinds import GroupSpec, parse_generators, parse_group, symmetrize
from groups.words import canonical_form, evaluate_word

__all__ = [
    "Element",
    "GeneratingSet",
    "GroupSpec",
    "Shell",
    "ShellTable",
    "ball_enumerate",
    "canonical_form",
    "evaluate_word",
    "parse_generators",
    "parse_group",
    "symmetrize",
    "word_gauge",
]
