"""
Seeded element sampling for continuous groups and large discrete ones.

Probes over continuous groups cannot enumerate balls, so they look at
elements arranged by magnitude levels t_j = base * 2^j: a few fixed
anchor elements, deterministic rays that push one parameter to t_j, and
uniform random elements whose parameters stay within t_j.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np

import config
from groups.elements import Element
from groups.kinds import (
    AffineGroup,
    FreeGroup,
    GeneralLinear,
    GroupSpec,
    Heisenberg,
    IntegerLattice,
    PositiveRationalSequences,
    RationalSequences,
    RealVector,
    SpecialLinear2,
    UnipotentInteger,
)
from utils.errors import DomainError, UnsupportedOperationError
from utils.logger import get_logger

logger = get_logger("groups.sampling")


@dataclass(frozen=True)
class SamplerSpec:
    """
    How to sample a group.

    Attributes:
        group (GroupSpec): Group to sample
        samples (int): Number of uniform random elements, spread over the levels
        seed (int): Seed for numpy's default_rng
        levels (int): Number of magnitude levels
        base (float): Magnitude of level 0
    """
    group: GroupSpec
    samples: int
    seed: int = 0
    levels: int = config.SAMPLER_LEVELS
    base: float = 0.25

    def magnitude(self, level: int) -> float:
        return self.base * 2.0 ** level


def _rotation(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def _orthogonal(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def _int_magnitude(t: float) -> int:
    return max(1, int(round(t)))


def random_element(group: GroupSpec, rng: np.random.Generator, t: float) -> Element:
    """
    A random element whose parameters have size at most about t.

    Args:
        group (GroupSpec): Group to sample
        rng (np.random.Generator): Random source
        t (float): Magnitude

    Returns:
        Element: Canonical element
    """
    if isinstance(group, IntegerLattice):
        k = _int_magnitude(t)
        return group.canonical_form(rng.integers(-k, k + 1, size=group.dim).tolist())
    if isinstance(group, RealVector):
        return group.canonical_form(rng.uniform(-t, t, size=group.dim).tolist())
    if isinstance(group, Heisenberg):
        if group.real:
            return group.canonical_form(rng.uniform(-t, t, size=3).tolist())
        k = _int_magnitude(t)
        return group.canonical_form(rng.integers(-k, k + 1, size=3).tolist())
    if isinstance(group, FreeGroup):
        length = int(rng.integers(0, _int_magnitude(t) + 1))
        letters = [int(x) for x in rng.integers(1, group.rank + 1, size=length)]
        signs = rng.choice([-1, 1], size=length)
        return group.canonical_form([s * x for s, x in zip(signs, letters)])
    if isinstance(group, (PositiveRationalSequences, RationalSequences)):
        k = _int_magnitude(t)
        support = rng.choice(np.arange(1, 5), size=int(rng.integers(1, 4)), replace=False)
        entries = []
        for i in sorted(int(x) for x in support):
            num, den = int(rng.integers(1, k + 1)), int(rng.integers(1, k + 1))
            value = Fraction(num, den)
            if isinstance(group, RationalSequences) and rng.random() < 0.5:
                value = -value
            entries.append((i, value))
        return group.canonical_form(entries)
    if isinstance(group, AffineGroup):
        return group.canonical_form(rng.uniform(-t, t, size=2).tolist())
    if isinstance(group, SpecialLinear2):
        s = rng.uniform(-t, t)
        m = _rotation(rng.uniform(0, 2 * math.pi)) @ np.diag([math.exp(s), math.exp(-s)]) @ _rotation(rng.uniform(0, 2 * math.pi))
        return group.from_matrix(m)
    if isinstance(group, GeneralLinear):
        # the rays carry the large magnitudes; a rotated spread past ~e^±8 rounds to a singular matrix
        n = group.n
        spread = min(t, config.SAMPLER_GL_LOG_SPREAD)
        m = _orthogonal(rng, n) @ np.diag(np.exp(rng.uniform(-spread, spread, size=n))) @ _orthogonal(rng, n)
        return group.from_matrix(m)
    if isinstance(group, UnipotentInteger):
        k = _int_magnitude(t)
        upper = group.q * (group.q - 1) // 2
        return group.canonical_form(rng.integers(-k, k + 1, size=upper).tolist())
    raise UnsupportedOperationError(f"No sampler for {group.spec}")


def ray_elements(group: GroupSpec, t: float) -> List[Element]:
    """Deterministic elements pushing one direction of the group to magnitude t."""
    if isinstance(group, IntegerLattice):
        k = _int_magnitude(t)
        return [group.canonical_form([k] + [0] * (group.dim - 1)), group.canonical_form([k] * group.dim)]
    if isinstance(group, RealVector):
        return [group.canonical_form([t] + [0.0] * (group.dim - 1)), group.canonical_form([-t] * group.dim)]
    if isinstance(group, Heisenberg):
        k = t if group.real else _int_magnitude(t)
        zero = 0.0 if group.real else 0
        return [group.canonical_form(p) for p in ((k, zero, zero), (zero, k, zero), (zero, zero, k), (k, k, k))]
    if isinstance(group, FreeGroup):
        k = _int_magnitude(t)
        return [group.canonical_form([1] * k), group.canonical_form([1, 2 if group.rank > 1 else 1] * k)]
    if isinstance(group, AffineGroup):
        return [group.canonical_form(p) for p in ((t, 0.0), (-t, 0.0), (0.0, t), (t, t), (-t, t))]
    if isinstance(group, SpecialLinear2):
        e = math.exp(t)
        return [group.from_matrix(np.diag([e, 1.0 / e])), group.from_matrix(np.array([[1.0, t], [0.0, 1.0]]))]
    if isinstance(group, GeneralLinear):
        n = group.n
        e = math.exp(t)
        stretch = np.eye(n)
        stretch[0, 0] = e
        if n > 1:
            stretch[1, 1] = 1.0 / e
        shear = np.eye(n)
        if n > 1:
            shear[0, n - 1] = t
        return [group.from_matrix(stretch), group.from_matrix(e * np.eye(n)), group.from_matrix(shear)]
    if isinstance(group, UnipotentInteger):
        k = _int_magnitude(t)
        upper = group.q * (group.q - 1) // 2
        corner = [0] * upper
        corner[group.q - 2] = k
        return [group.canonical_form([k] + [0] * (upper - 1)), group.canonical_form(corner)]
    if isinstance(group, (PositiveRationalSequences, RationalSequences)):
        k = _int_magnitude(t)
        return [group.canonical_form([(1, k)]), group.canonical_form([(1, k), (2, k)])]
    raise UnsupportedOperationError(f"No sampler for {group.spec}")


def anchor_elements(group: GroupSpec) -> List[Element]:
    """Small fixed elements every sampled probe looks at first."""
    if isinstance(group, AffineGroup):
        return [group.canonical_form((1.0, 0.0)), group.canonical_form((0.0, 1.0))]
    if isinstance(group, SpecialLinear2):
        return [group.from_matrix(np.diag([2.0, 0.5])), group.from_matrix(np.array([[1.0, 1.0], [0.0, 1.0]]))]
    if isinstance(group, GeneralLinear):
        m = np.eye(group.n)
        m[0, 0] = 2.0
        if group.n > 1:
            m[1, 1] = 0.5
        return [group.from_matrix(m)]
    if isinstance(group, Heisenberg):
        one = 1.0 if group.real else 1
        return [group.canonical_form((one, one, one))]
    if isinstance(group, UnipotentInteger):
        return list(group.basis())
    return ray_elements(group, 1.0)


def draw(spec: SamplerSpec) -> List[Tuple[int, Element]]:
    """
    Sample elements level by level.

    Args:
        spec (SamplerSpec): What to sample

    Returns:
        List[Tuple[int, Element]]: (level, element) pairs, anchors first
    """
    if spec.samples < 1 or spec.samples > config.MAX_SAMPLES:
        raise DomainError(f"samples must lie in 1..{config.MAX_SAMPLES}, got {spec.samples}")
    if spec.levels < 1:
        raise DomainError("A sampler needs at least one level")
    rng = np.random.default_rng(spec.seed)
    out: List[Tuple[int, Element]] = [(0, g) for g in anchor_elements(spec.group)]
    per_level, extra = divmod(spec.samples, spec.levels)
    for level in range(spec.levels):
        t = spec.magnitude(level)
        out.extend((level, g) for g in ray_elements(spec.group, t))
        count = per_level + (1 if level >= spec.levels - extra else 0)
        out.extend((level, random_element(spec.group, rng, t)) for _ in range(count))
    logger.debug(f"Drew {len(out)} elements of {spec.group.spec} (seed {spec.seed})")
    return out
