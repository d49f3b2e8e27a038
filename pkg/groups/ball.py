"""
Breadth-first ball enumeration and the word gauge.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

import config
from groups.elements import Element, GeneratingSet
from groups.kinds import GroupSpec, symmetrize
from utils.errors import DomainError, UnsupportedOperationError
from utils.logger import get_logger

logger = get_logger("groups.ball")


@dataclass(frozen=True)
class Shell:
    """Elements at word length exactly n, in canonical order."""
    n: int
    elements: Tuple[Element, ...]

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True, eq=False)
class ShellTable:
    """
    Result of a ball enumeration.

    Attributes:
        group (GroupSpec): The group
        generators (GeneratingSet): Symmetric generating set used
        radius (int): Largest complete shell index
        shells (tuple): Shells 0..radius
        lengths (dict): Element -> word length, for every enumerated element
        parents (dict): Element -> (predecessor, generator position), for geodesic words
        truncated (bool): The cap stopped enumeration before the requested radius
    """
    group: GroupSpec
    generators: GeneratingSet
    radius: int
    shells: Tuple[Shell, ...]
    lengths: Dict[Element, int] = field(repr=False)
    parents: Dict[Element, Tuple[Element, int]] = field(repr=False)
    truncated: bool = False
    requested_radius: int = 0

    @property
    def sphere_sizes(self) -> List[int]:
        return [s.size for s in self.shells]

    @property
    def ball_sizes(self) -> List[int]:
        sizes, total = [], 0
        for s in self.shells:
            total += s.size
            sizes.append(total)
        return sizes

    @property
    def standard(self) -> bool:
        return self.generators.standard

    def ball(self, n: Optional[int] = None) -> List[Element]:
        """Elements of B_n in shell order (the whole table when n is None)."""
        last = self.radius if n is None else min(n, self.radius)
        return [g for s in self.shells[:last + 1] for g in s.elements]

    def geodesic_word(self, g: Element) -> List[int]:
        """A shortest word for g as 1-based positions in the symmetric generating set."""
        if g not in self.lengths:
            raise DomainError(f"{self.group.format_element(g)} is outside the enumerated ball")
        word = []
        while g in self.parents:
            g, position = self.parents[g]
            word.append(position + 1)
        return list(reversed(word))


def ball_enumerate(group: GroupSpec, generators: Optional[GeneratingSet], radius: int,
                   cap: Optional[int] = None) -> ShellTable:
    """
    Enumerate B_R by breadth-first search.

    Only complete shells are kept: if adding the next shell would exceed the
    cap, enumeration stops and the table is flagged truncated, so every
    recorded length is exact.

    Args:
        group (GroupSpec): A discrete group
        generators (GeneratingSet): Generating set; symmetrized when needed, standard set when None
        radius (int): Requested radius R >= 0
        cap (int): Largest number of ball elements, config.BALL_CAP by default

    Returns:
        ShellTable: Shells, lengths and geodesic parents
    """
    if not group.discrete:
        raise UnsupportedOperationError(f"Ball enumeration needs a discrete group, {group.spec} is continuous")
    if radius < 0:
        raise DomainError(f"Radius must be non-negative, got {radius}")
    cap = config.BALL_CAP if cap is None else cap
    gens = generators if generators is not None else group.standard_generators()
    if not gens.symmetric:
        logger.info(f"Symmetrizing {len(gens)} generators for {group.spec}")
        gens = symmetrize(group, gens)

    identity = group.identity()
    lengths: Dict[Element, int] = {identity: 0}
    parents: Dict[Element, Tuple[Element, int]] = {}
    shells = [Shell(0, (identity,))]
    frontier = [identity]
    total = 1
    truncated = False

    for n in tqdm(range(1, radius + 1), disable=not config.PROGRESS, desc=f"ball {group.spec}"):
        found: Dict[Element, Tuple[Element, int]] = {}
        for g in frontier:
            for position, u in enumerate(gens):
                h = group.multiply(g, u)
                if h in lengths or h in found:
                    continue
                found[h] = (g, position)
        if total + len(found) > cap:
            logger.warning(f"Ball cap {cap} reached for {group.spec}; stopping at radius {n - 1}")
            truncated = True
            break
        for h, parent in found.items():
            lengths[h] = n
            parents[h] = parent
        ordered = tuple(sorted(found, key=group.sort_key))
        shells.append(Shell(n, ordered))
        frontier = list(ordered)
        total += len(ordered)

    table = ShellTable(
        group=group,
        generators=gens,
        radius=len(shells) - 1,
        shells=tuple(shells),
        lengths=lengths,
        parents=parents,
        truncated=truncated,
        requested_radius=radius,
    )
    logger.debug(f"Enumerated {total} elements of {group.spec} up to radius {table.radius}")
    return table


def word_gauge(table: ShellTable, g: Element) -> Optional[int]:
    """
    Word length of g, or None when g lies outside the enumerated ball.

    Args:
        table (ShellTable): Enumerated ball
        g (Element): Canonical element

    Returns:
        Optional[int]: τ_U(g)
    """
    return table.lengths.get(g)
