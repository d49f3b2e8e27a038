"""
Convolution, seminorms and involution on the weighted ℓ¹ algebra of a
discrete group.

    (φ * ψ)(g) = Σ_h φ(h) ψ(h⁻¹g)
    ‖φ‖_m      = Σ_g σ(g)^m |φ(g)|
    φ*(g)      = conj φ(g⁻¹)            (discrete groups are unimodular)
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from tqdm import tqdm

import config
from algebra.functions import Coefficient, WeightedFunction
from groups.elements import Element
from scales.report import ProbeReport, Verdict
from scales.scale import Scale
from utils.errors import DomainError, GroupMismatchError, UnsupportedOperationError
from utils.logdomain import NEG_INF, finite_or_none, log_of, log_sum, scaled
from utils.logger import get_logger

logger = get_logger("algebra.convolution")

CONVOLUTION_BOUND = "‖φ*ψ‖_m ≤ C^m·‖φ‖_{dm}·‖ψ‖_{dm}, norms taken with 1+σ"


@dataclass(frozen=True)
class SeminormValue:
    """
    ‖φ‖_m, with the exact value when both φ and σ are rational.

    Attributes:
        index (int): m
        log_value (float): log ‖φ‖_m, -inf for φ = 0
        exact (Fraction): ‖φ‖_m, or None in float mode
    """
    index: int
    log_value: float
    exact: Optional[Fraction] = None

    @property
    def value(self) -> float:
        if self.exact is not None:
            return float(self.exact)
        return math.exp(self.log_value) if self.log_value < 709.0 else math.inf


def convolve(phi: WeightedFunction, psi: WeightedFunction) -> WeightedFunction:
    """
    φ * ψ, exactly when both are exact.

    Args:
        phi (WeightedFunction): Left factor
        psi (WeightedFunction): Right factor, on the same group

    Returns:
        WeightedFunction: Supported in supp φ · supp ψ; keeps φ's scale
    """
    if phi.group != psi.group:
        raise GroupMismatchError(f"Cannot convolve functions on {phi.group.spec} and {psi.group.spec}")
    group = phi.group
    out: Dict[Element, Coefficient] = {}
    for h, a in tqdm(phi.terms, disable=not config.PROGRESS, desc="convolve"):
        for k, b in psi.terms:
            g = group.multiply(h, k)
            out[g] = out.get(g, Fraction(0)) + a * b
    return WeightedFunction._from_map(group, out, phi.scale or psi.scale)


def convolve_all(functions: Sequence[WeightedFunction]) -> WeightedFunction:
    """φ₁ * φ₂ * ⋯ * φₙ, left to right."""
    if not functions:
        raise DomainError("Nothing to convolve")
    result = functions[0]
    for f in functions[1:]:
        result = convolve(result, f)
    return result


def _scale_for(phi: WeightedFunction, scale: Optional[Scale]) -> Scale:
    scale = scale or phi.scale
    if scale is None:
        raise DomainError("Seminorms need a scale; attach one to the function or pass it")
    if scale.group != phi.group:
        raise GroupMismatchError(f"Scale on {scale.group.spec} used for a function on {phi.group.spec}")
    return scale


def seminorm(phi: WeightedFunction, m: int, scale: Optional[Scale] = None) -> SeminormValue:
    """
    ‖φ‖_m = Σ_g σ(g)^m |φ(g)|.

    Args:
        phi (WeightedFunction): The function
        m (int): Index m ≥ 0
        scale (Scale): σ, the function's own scale by default

    Returns:
        SeminormValue: log value, plus the exact value when available
    """
    if m < 0:
        raise DomainError(f"Seminorm index must be non-negative, got {m}")
    sigma = _scale_for(phi, scale)
    exact_ok = phi.exact and sigma.exact
    total = Fraction(0)
    logs = []
    for g, c in phi.terms:
        if exact_ok:
            total += sigma.exact_value(g) ** m * abs(c)
        else:
            logs.append(scaled(m, sigma.log_value(g)) + log_of(abs(c)))
    if exact_ok:
        return SeminormValue(index=m, log_value=log_of(total), exact=total)
    return SeminormValue(index=m, log_value=log_sum(logs))


def involution(phi: WeightedFunction) -> WeightedFunction:
    """
    φ*(g) = conj φ(g⁻¹); coefficients are real, so conjugation is the identity.

    Args:
        phi (WeightedFunction): Function on a discrete group

    Returns:
        WeightedFunction: φ*, with the same scale
    """
    group = phi.group
    if not group.discrete:
        raise UnsupportedOperationError(f"Involution without a modular function needs a discrete group, not {group.spec}")
    return WeightedFunction._from_map(group, {group.inverse(g): c for g, c in phi.terms}, phi.scale)


def _leq(lhs: SeminormValue, rhs_exact: Optional[Fraction], rhs_log: float) -> bool:
    if lhs.exact is not None and rhs_exact is not None:
        return lhs.exact <= rhs_exact
    return lhs.log_value <= rhs_log + 1e-9 * max(1.0, abs(rhs_log))


def conv_bound_check(phi: WeightedFunction, psi: WeightedFunction, m: int,
                     subpoly_cert: Tuple[float, int], scale: Optional[Scale] = None) -> ProbeReport:
    """
    Check ‖φ*ψ‖_m ≤ C^m‖φ‖_{dm}‖ψ‖_{dm} for a sub-polynomial certificate (C, d).

    The certificate σ(gh) ≤ C(1+σ(g))^d(1+σ(h))^d bounds the left side by
    the right side with norms taken for 1+σ.

    Args:
        phi (WeightedFunction): Left factor
        psi (WeightedFunction): Right factor
        m (int): Seminorm index
        subpoly_cert (Tuple[float, int]): (C, d) from sub_polynomial_probe
        scale (Scale): σ, φ's scale by default

    Returns:
        ProbeReport: holds-on-evidence or violated, with both sides
    """
    sigma = _scale_for(phi, scale)
    c, d = subpoly_cert
    shifted = sigma.one_plus()
    lhs = seminorm(convolve(phi, psi), m, sigma)
    left = seminorm(phi, d * m, shifted)
    right = seminorm(psi, d * m, shifted)
    c_exact = Fraction(c) if not isinstance(c, float) or float(c).is_integer() else None
    rhs_exact = None
    if c_exact is not None and left.exact is not None and right.exact is not None:
        rhs_exact = c_exact ** m * left.exact * right.exact
    rhs_log = scaled(m, math.log(c)) + left.log_value + right.log_value
    holds = _leq(lhs, rhs_exact, rhs_log)
    constants = {"C": c, "d": d, "m": m}
    sides = {"lhs_log": finite_or_none(lhs.log_value), "rhs_log": finite_or_none(rhs_log)}
    if lhs.exact is not None and rhs_exact is not None:
        sides.update({"lhs": str(lhs.exact), "rhs": str(rhs_exact)})
    evidence = {"group": phi.group.spec, "scale": sigma.name, "support_sizes": [len(phi), len(psi)], **sides}
    if holds:
        return ProbeReport(probe="conv-bound", condition=CONVOLUTION_BOUND, verdict=Verdict.HOLDS,
                           constants=constants, evidence=evidence)
    logger.info(f"Convolution bound fails for (C, d) = ({c}, {d}) at m = {m}")
    return ProbeReport(probe="conv-bound", condition=CONVOLUTION_BOUND, verdict=Verdict.VIOLATED,
                       constants=constants, witness=sides, evidence=evidence)


def delta_power_ratio(scale: Scale, chain: Sequence[Element], m: int, k: int) -> float:
    """
    log of ‖δ_{g₁} * ⋯ * δ_{gₙ}‖_m / (σ(g₁)⋯σ(gₙ))^k.

    The numerator is computed through convolve and seminorm, so it is
    σ(g₁⋯gₙ)^m only if the algebra reproduces it.

    Args:
        scale (Scale): σ
        chain (Sequence[Element]): g₁, …, gₙ
        m (int): Seminorm index of the product
        k (int): Exponent on each factor

    Returns:
        float: The log ratio
    """
    if not chain:
        raise DomainError("delta_power_ratio needs a non-empty chain")
    group = scale.group
    product = convolve_all([WeightedFunction.delta(group, g, scale=scale) for g in chain])
    numerator = seminorm(product, m).log_value
    denominator = sum(scaled(k, scale.log_value(g)) for g in chain)
    if numerator == NEG_INF:
        return NEG_INF
    return numerator - denominator
