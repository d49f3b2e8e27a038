"""
Scaled G-spaces.

A G-space M carries a scale σ and the acting group G a weight ω. The space
is scaled when σ(g·m) ≤ C·ω(g)^l·σ(m)^l. Points of M are plain Python
values (floats, numpy vectors, matrices), group elements are Elements.
"""
import math
from dataclasses import dataclass, replace
from typing import Any, Callable, List, Optional, Tuple

import numpy as np

import config
from groups.elements import Element
from groups.kinds import GeneralLinear, GroupSpec, parse_group
from groups.sampling import random_element, ray_elements
from scales.fitting import EvidenceItem, fit_exponent
from scales.report import ProbeReport, report_from_fit
from scales.scale import Scale, parse_scale
from utils.errors import DomainError
from utils.logger import get_logger

logger = get_logger("scales.gspace")

SCALED_SPACE = "σ(g·m) ≤ C·ω(g)^l·σ(m)^l"
UNIFORM_TRANSLATION = "σ(g·m) ≤ C·σ(m)^d + D uniformly for g in a compact set"
INDUCED_SCALE = "σ_G([g, m]) = inf over n in N of ω(g·n⁻¹)·σ(n·m)"

Point = Any


@dataclass(frozen=True, eq=False)
class GSpaceSpec:
    """
    A group acting on a space, with a scale on the space and a weight on the group.

    Attributes:
        name (str): Registry name
        group (GroupSpec): Acting group
        action (Callable): (g, m) -> g·m
        space_log_scale (Callable): m -> log σ(m)
        weight (Scale): ω, on `group` or on `ambient` for induced spaces
        sample_point (Callable): (rng, t) -> random point of size about t
        ray_points (Callable): t -> deterministic points of size t
        distance (Callable): (m, m') -> distance used to validate the action
        ambient (GroupSpec): Group containing `group`, for induced spaces
        embed (Callable): Element of `group` -> element of `ambient`
        nearest (Callable): Element of `ambient` -> nearest element of `group`
        neighbours (Callable): (center, window) -> elements of `group` around center
        analytic_bound (Tuple[int, float]): Known (l, C) for this weight, when one is known
    """
    name: str
    group: GroupSpec
    action: Callable[[Element, Point], Point]
    space_log_scale: Callable[[Point], float]
    weight: Scale
    sample_point: Callable[[np.random.Generator, float], Point]
    ray_points: Callable[[float], List[Point]]
    distance: Callable[[Point, Point], float]
    ambient: Optional[GroupSpec] = None
    embed: Optional[Callable[[Element], Element]] = None
    nearest: Optional[Callable[[Element], Element]] = None
    neighbours: Optional[Callable[[Element, int], List[Element]]] = None
    analytic_bound: Optional[Tuple[int, float]] = None


def _log_one_plus_norm(m: Point) -> float:
    return math.log1p(float(np.linalg.norm(np.atleast_1d(m), 2)))


def _real_distance(m: Point, m2: Point) -> float:
    return float(np.max(np.abs(np.asarray(m, dtype=float) - np.asarray(m2, dtype=float))))


def _circle_distance(t: float, t2: float) -> float:
    d = abs(t - t2) % 1.0
    return min(d, 1.0 - d)


def _real_points(t: float) -> List[Point]:
    return [0.0, t, -t]


def _vector_points(n: int) -> Callable[[float], List[Point]]:
    def points(t: float) -> List[Point]:
        e1 = np.zeros(n)
        e1[0] = t
        return [np.zeros(n), e1, np.full(n, t)]
    return points


def _matrix_points(n: int) -> Callable[[float], List[Point]]:
    def points(t: float) -> List[Point]:
        corner = np.zeros((n, n))
        corner[0, n - 1] = max(t, 1.0)
        return [corner, t * np.eye(n)]
    return points


_ROTATION = (math.sqrt(5) - 1) / 2

GSPACE_NAMES = ("translate", "real-translate", "dilate", "affine", "gl-vector", "gl-conjugate", "rotate-circle")

# (l, C) known in closed form for a registered space and weight
_ANALYTIC_BOUNDS = {
    ("translate", "one_plus_abs"): (1, 1.0),
    ("affine", "axb_omega"): (1, 2.0),
    ("gl-vector", "gl_theta"): (1, 1.0),
    ("gl-conjugate", "gl_theta"): (2, 1.0),
}


def gspace_from_name(name: str, weight_spec: str, n: int = 2) -> GSpaceSpec:
    """
    Build a registered G-space.

        translate      Z acting on R by n·r = n + r, σ(r) = 1 + |r|
        real-translate R acting on R by translation, σ(r) = 1 + |r|
        dilate         R acting on R by r·m = e^r m, σ(m) = 1 + |m|
        affine         ax+b acting on R by (a, b)·m = e^a m + b, σ(m) = 1 + |m|
        gl-vector      GL(n) acting on R^n by left multiplication, σ(v) = 1 + ‖v‖
        gl-conjugate   GL(n) acting on n x n matrices by conjugation, σ(S) = 1 + ‖S‖
        rotate-circle  Z acting on the circle R/Z by an irrational rotation, σ ≡ 1;
                       induced up to R with ω on R

    Args:
        name (str): Registry name
        weight_spec (str): Scale spec of ω on the acting (or ambient) group
        n (int): Dimension for the GL spaces

    Returns:
        GSpaceSpec: The space
    """
    spec = _build_space(name, weight_spec, n)
    bound = _ANALYTIC_BOUNDS.get((name, weight_spec.strip().lower()))
    return spec if bound is None else replace(spec, analytic_bound=bound)


def _build_space(name: str, weight_spec: str, n: int) -> GSpaceSpec:
    if name == "translate":
        group = parse_group("z")
        return GSpaceSpec(name, group, lambda g, r: r + g.payload[0], _log_one_plus_norm,
                          parse_scale(weight_spec, group),
                          lambda rng, t: float(rng.uniform(-t, t)), _real_points, _real_distance)
    if name == "real-translate":
        group = parse_group("r:1")
        return GSpaceSpec(name, group, lambda g, r: r + g.payload[0], _log_one_plus_norm,
                          parse_scale(weight_spec, group),
                          lambda rng, t: float(rng.uniform(-t, t)), _real_points, _real_distance)
    if name == "dilate":
        group = parse_group("r:1")
        return GSpaceSpec(name, group, lambda g, m: math.exp(g.payload[0]) * m, _log_one_plus_norm,
                          parse_scale(weight_spec, group),
                          lambda rng, t: float(rng.uniform(-t, t)), _real_points, _real_distance)
    if name == "affine":
        group = parse_group("axb")
        return GSpaceSpec(name, group, lambda g, m: math.exp(g.payload[0]) * m + g.payload[1],
                          _log_one_plus_norm, parse_scale(weight_spec, group),
                          lambda rng, t: float(rng.uniform(-t, t)), _real_points, _real_distance)
    if name == "gl-vector":
        group = GeneralLinear(n)
        return GSpaceSpec(name, group, lambda g, v: group.matrix(g) @ v, _log_one_plus_norm,
                          parse_scale(weight_spec, group),
                          lambda rng, t: rng.uniform(-t, t, size=n), _vector_points(n), _real_distance)
    if name == "gl-conjugate":
        group = GeneralLinear(n)

        def conjugate(g: Element, s: np.ndarray) -> np.ndarray:
            a = group.matrix(g)
            return a @ s @ np.linalg.inv(a)
        return GSpaceSpec(name, group, conjugate, _log_one_plus_norm, parse_scale(weight_spec, group),
                          lambda rng, t: rng.uniform(-t, t, size=(n, n)), _matrix_points(n), _real_distance)
    if name == "rotate-circle":
        group = parse_group("z")
        ambient = parse_group("r:1")
        return GSpaceSpec(
            name, group,
            lambda g, t: (t + g.payload[0] * _ROTATION) % 1.0,
            lambda t: 0.0,
            parse_scale(weight_spec, ambient),
            lambda rng, t: float(rng.uniform(0.0, 1.0)),
            lambda t: [0.0, 0.5],
            _circle_distance,
            ambient=ambient,
            embed=lambda k: ambient.canonical_form((float(k.payload[0]),)),
            nearest=lambda r: group.canonical_form(int(round(r.payload[0]))),
            neighbours=lambda c, w: [group.canonical_form(c.payload[0] + j) for j in range(-w, w + 1)],
        )
    raise DomainError(f"Unknown G-space {name!r}")


def _draw_pairs(spec: GSpaceSpec, samples: int, seed: int, levels: int,
                group_scale: Optional[float] = None) -> List[List[Tuple[Element, Point]]]:
    if samples < 1 or samples > config.MAX_SAMPLES:
        raise DomainError(f"samples must lie in 1..{config.MAX_SAMPLES}, got {samples}")
    rng = np.random.default_rng(seed)
    per_level = max(1, samples // levels)
    out = []
    for j in range(levels):
        t = 0.25 * 2.0 ** j
        tg = t if group_scale is None else group_scale
        pairs = [(g, m) for g in ray_elements(spec.group, tg) for m in spec.ray_points(t)]
        pairs.extend((spec.group.identity(), m) for m in spec.ray_points(t))
        pairs.extend((random_element(spec.group, rng, tg), spec.sample_point(rng, t)) for _ in range(per_level))
        out.append(pairs)
    return out


def validate_action(spec: GSpaceSpec, samples: int = 64, seed: int = 0) -> None:
    """
    Check e·m = m and (gh)·m = g·(h·m) on sampled triples, to GROUP_TOL relative.

    Raises:
        DomainError: When the action law fails
    """
    rng = np.random.default_rng(seed)
    group = spec.group
    for _ in range(samples):
        g = random_element(group, rng, 1.0)
        h = random_element(group, rng, 1.0)
        m = spec.sample_point(rng, 1.0)
        tol = config.GROUP_TOL * max(1.0, float(np.max(np.abs(np.atleast_1d(m)))))
        if spec.distance(spec.action(group.identity(), m), m) > tol:
            raise DomainError(f"Identity does not act trivially on {spec.name}")
        lhs = spec.action(group.multiply(g, h), m)
        rhs = spec.action(g, spec.action(h, m))
        scale = max(1.0, float(np.max(np.abs(np.atleast_1d(lhs)))))
        if spec.distance(lhs, rhs) > 1e-6 * scale:
            raise DomainError(f"(gh)·m != g·(h·m) on {spec.name} for g={group.format_element(g)}")


def _weight_log(spec: GSpaceSpec, g: Element) -> float:
    if spec.ambient is not None:
        return spec.weight.log_value(spec.embed(g))
    return spec.weight.log_value(g)


def gspace_check(spec: GSpaceSpec, samples: int, seed: int = 0, l_max: Optional[int] = None,
                 levels: Optional[int] = None) -> ProbeReport:
    """
    Probe σ(g·m) ≤ C·ω(g)^l·σ(m)^l on seeded samples.

    Evidence levels are sampling magnitudes t_j = 2^j / 4 for both g and m,
    with rays that push only one of them.

    Args:
        spec (GSpaceSpec): The G-space
        samples (int): Random (g, m) pairs
        seed (int): Seed
        l_max (int): Largest exponent l tried
        levels (int): Magnitude levels, config.SAMPLER_LEVELS by default

    Returns:
        ProbeReport: Constants (l, C), or a growth witness
    """
    l_max = config.MAX_EXPONENT if l_max is None else l_max
    levels = config.SAMPLER_LEVELS if levels is None else levels
    validate_action(spec, seed=seed)
    fmt = spec.group.format_element
    evidence_levels = []
    for pairs in _draw_pairs(spec, samples, seed, levels):
        items = []
        for g, m in pairs:
            items.append(EvidenceItem(
                spec.space_log_scale(spec.action(g, m)),
                _weight_log(spec, g) + spec.space_log_scale(m),
                tag={"g": fmt(g), "m": np.asarray(m, dtype=float).tolist()},
            ))
        evidence_levels.append(items)
    fit = fit_exponent(evidence_levels, range(0, l_max + 1), with_offset=False)
    evidence = {"space": spec.name, "group": spec.group.spec, "weight": spec.weight.name,
                "samples": samples, "seed": seed}
    if spec.analytic_bound is not None:
        l_known, c_known = spec.analytic_bound
        evidence["analytic_bound"] = {"l": l_known, "C": c_known}
        if fit.status == "fit":
            # the fit may find a sharper constant than the closed form
            evidence["within_analytic_bound"] = bool(
                fit.exponent < l_known
                or (fit.exponent == l_known and fit.log_C <= math.log(c_known) + 1e-9)
            )
    return report_from_fit(fit, "gspace-check", SCALED_SPACE, "l", evidence)


def uniform_translation_probe(spec: GSpaceSpec, samples: int, seed: int = 0, radius: float = 1.0,
                              m_max: Optional[int] = None, levels: Optional[int] = None) -> ProbeReport:
    """
    Probe σ(g·m) ≤ C·σ(m)^d + D uniformly over g of size at most `radius`.

    Holds whenever the space is scaled, since ω is bounded on compact sets.

    Args:
        spec (GSpaceSpec): The G-space
        samples (int): Random (g, m) pairs
        seed (int): Seed
        radius (float): Size of the compact set of group elements
        m_max (int): Largest exponent d tried
        levels (int): Magnitude levels for m

    Returns:
        ProbeReport: Constants (d, C, D)
    """
    m_max = config.MAX_EXPONENT if m_max is None else m_max
    levels = config.SAMPLER_LEVELS if levels is None else levels
    fmt = spec.group.format_element
    evidence_levels = []
    for pairs in _draw_pairs(spec, samples, seed, levels, group_scale=radius):
        evidence_levels.append([
            EvidenceItem(spec.space_log_scale(spec.action(g, m)), spec.space_log_scale(m),
                         tag={"g": fmt(g), "m": np.asarray(m, dtype=float).tolist()})
            for g, m in pairs
        ])
    fit = fit_exponent(evidence_levels, range(0, m_max + 1))
    evidence = {"space": spec.name, "samples": samples, "seed": seed, "radius": radius}
    return report_from_fit(fit, "uniform-translation", UNIFORM_TRANSLATION, "d", evidence)


@dataclass(frozen=True)
class InducedScaleValue:
    """Upper bound for an induced scale value and the subgroup element attaining it."""
    log_value: float
    minimizer: Element
    window: int
    upper_bound: bool = True

    @property
    def value(self) -> float:
        return math.exp(self.log_value)


def induced_scale_eval(base: GSpaceSpec, coset_rep: Tuple[Element, Point], search_window: int) -> InducedScaleValue:
    """
    σ_G([g, m]) = inf over n in N of ω(g·n⁻¹)·σ(n·m), searched over a window.

    The window holds the 2w+1 elements of N nearest to g; the result is an
    upper bound for the infimum.

    Args:
        base (GSpaceSpec): N-space with ω on the ambient group G
        coset_rep (Tuple[Element, Point]): (g, m) with g in G and m in M
        search_window (int): Half-width w of the window

    Returns:
        InducedScaleValue: Log of the bound and its minimizer
    """
    if base.ambient is None or base.embed is None or base.nearest is None or base.neighbours is None:
        raise DomainError(f"{base.name} is not set up for induction")
    if search_window < 0:
        raise DomainError("Empty search window")
    g, m = coset_rep
    ambient = base.ambient
    best: Optional[Tuple[float, Element]] = None
    for n in base.neighbours(base.nearest(g), search_window):
        shifted = ambient.multiply(g, ambient.inverse(base.embed(n)))
        value = base.weight.log_value(shifted) + base.space_log_scale(base.action(n, m))
        if best is None or value < best[0]:
            best = (value, n)
    if best is None:
        raise DomainError("Empty search window")
    return InducedScaleValue(log_value=best[0], minimizer=best[1], window=search_window)
