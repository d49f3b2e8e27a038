"""
Axiom checks for gauges and weights, gauge normalization and the
exponential correspondence between gauges and weights.
"""
import math
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Union

from groups.ball import ShellTable
from groups.elements import Element
from scales.report import ProbeReport, Verdict
from scales.scale import GAUGE, WEIGHT, Scale
from utils.errors import DomainError, ScaleNotFoundError
from utils.logdomain import NEG_INF, finite_or_none, log_add, log_of
from utils.logger import get_logger

logger = get_logger("scales.axioms")

_REL_TOL = 1e-9

Domain = Union[ShellTable, Sequence[Element]]

GAUGE_CONDITION = "τ(e) = 0, τ(g⁻¹) = τ(g), τ(gh) ≤ K(τ(g) + τ(h))"
WEIGHT_CONDITION = "ω(e) = 1, ω(g⁻¹) = ω(g), ω(gh) ≤ ω(g)ω(h)"


def _domain_elements(domain: Domain):
    if isinstance(domain, ShellTable):
        return domain.ball(), domain.ball(domain.radius // 2), {"radius": domain.radius, "truncated": domain.truncated}
    elements = list(domain)
    return elements, elements, {"samples": len(elements)}


def _close(a: float, b: float) -> bool:
    if a == b:
        return True
    if not (math.isfinite(a) and math.isfinite(b)):
        return False
    return abs(a - b) <= _REL_TOL * max(1.0, abs(a), abs(b))


def _leq(a: float, b: float) -> bool:
    return a <= b or _close(a, b)


class _Evaluator:
    """Evaluates a scale exactly when it can, recording which elements fall outside its domain."""

    def __init__(self, scale: Scale):
        self.scale = scale
        self.skipped = 0

    def get(self, g: Element):
        try:
            exact = self.scale.exact_value(g)
            return exact if exact is not None else self.scale.log_value(g)
        except ScaleNotFoundError:
            self.skipped += 1
            return None

    def log(self, value) -> float:
        return log_of(value) if isinstance(value, Fraction) else value


def _equal(ev: _Evaluator, x, y) -> bool:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x == y
    return _close(ev.log(x), ev.log(y))


def check_axioms(scale: Scale, kind: str, domain: Domain, constant: float = 1) -> ProbeReport:
    """
    Check the gauge or weight axioms on a domain.

    Gauges: τ(e) = 0, symmetry, and subadditivity τ(gh) ≤ K(τ(g) + τ(h)) with
    K = constant (K > 1 checks a near-gauge). Weights: ω(e) = 1, symmetry,
    submultiplicativity. Pairs come from the half-radius ball when the domain
    is a shell table, so every product stays inside it.

    Args:
        scale (Scale): Scale to check
        kind (str): "gauge" or "weight"
        domain: ShellTable or explicit list of elements
        constant (float): Subadditivity constant K for gauges

    Returns:
        ProbeReport: holds-on-evidence, or violated with the first failing axiom
    """
    if kind not in (GAUGE, WEIGHT):
        raise DomainError(f"kind must be gauge or weight, got {kind!r}")
    group = scale.group
    ev = _Evaluator(scale)
    elements, pool, evidence = _domain_elements(domain)
    condition = GAUGE_CONDITION if kind == GAUGE else WEIGHT_CONDITION
    fmt = group.format_element

    def violated(witness: Dict[str, Any]) -> ProbeReport:
        logger.info(f"{scale.name} fails {witness['axiom']} as a {kind}")
        return ProbeReport(probe="check-axioms", condition=condition, verdict=Verdict.VIOLATED,
                           constants={"K": constant} if kind == GAUGE else {},
                           witness=witness, evidence=evidence)

    e_value = ev.get(group.identity())
    if e_value is not None:
        target_ok = (e_value == 0 if isinstance(e_value, Fraction) else ev.log(e_value) == NEG_INF) \
            if kind == GAUGE else _close(ev.log(e_value), 0.0)
        if not target_ok:
            return violated({"axiom": "identity", "element": fmt(group.identity()),
                             "log_value": finite_or_none(ev.log(e_value))})

    for g in elements:
        x = ev.get(g)
        y = ev.get(group.inverse(g))
        if x is None or y is None:
            continue
        if not _equal(ev, x, y):
            return violated({"axiom": "symmetry", "element": fmt(g),
                             "log_value": finite_or_none(ev.log(x)),
                             "log_value_inverse": finite_or_none(ev.log(y))})

    pairs = 0
    log_k = math.log(constant)
    for g in pool:
        x = ev.get(g)
        if x is None:
            continue
        for h in pool:
            y = ev.get(h)
            z = ev.get(group.multiply(g, h)) if y is not None else None
            if z is None:
                continue
            pairs += 1
            if kind == GAUGE:
                if isinstance(x, Fraction) and isinstance(y, Fraction) and isinstance(z, Fraction):
                    ok = z <= Fraction(constant) * (x + y)
                else:
                    ok = _leq(ev.log(z), log_k + log_add(ev.log(x), ev.log(y)))
                axiom = "subadditivity"
            else:
                if isinstance(x, Fraction) and isinstance(y, Fraction) and isinstance(z, Fraction):
                    ok = z <= x * y
                else:
                    ok = _leq(ev.log(z), ev.log(x) + ev.log(y))
                axiom = "submultiplicativity"
            if not ok:
                return violated({"axiom": axiom, "g": fmt(g), "h": fmt(h),
                                 "log_value_gh": finite_or_none(ev.log(z)),
                                 "log_value_g": finite_or_none(ev.log(x)),
                                 "log_value_h": finite_or_none(ev.log(y))})

    evidence.update({"elements": len(elements), "pairs": pairs, "skipped": ev.skipped})
    return ProbeReport(probe="check-axioms", condition=condition, verdict=Verdict.HOLDS,
                       constants={"K": constant} if kind == GAUGE else {}, evidence=evidence)


def normalize_gauge(scale: Scale) -> Scale:
    """
    Integer-valued gauge equivalent to τ.

    τ'(e) = 0, τ'(g) = max(1, ⌈τ(g)⌉) otherwise, so τ' vanishes only at e and
    τ ≤ τ' ≤ τ + 1 away from the zero set of τ.

    Args:
        scale (Scale): A gauge

    Returns:
        Scale: The normalized gauge
    """
    group = scale.group
    identity = group.identity()

    def ceil_value(g: Element) -> Fraction:
        if group.equals(g, identity):
            return Fraction(0)
        exact = scale.exact_value(g)
        if exact is not None:
            return Fraction(max(1, math.ceil(exact)))
        lv = scale.log_value(g)
        if lv == NEG_INF:
            return Fraction(1)
        v = math.exp(lv)
        return Fraction(max(1, math.ceil(v - 1e-9 * max(1.0, v))))

    return Scale(name=f"normalized({scale.name})", kind=GAUGE, group=group,
                 log_fn=lambda g: log_of(ceil_value(g)), exact_fn=ceil_value)


def exp_bijection(scale: Scale, direction: str, domain: Optional[Sequence[Element]] = None) -> Scale:
    """
    Move between gauges and weights: ω = e^τ, τ = log ω.

    Args:
        scale (Scale): Source gauge or weight
        direction (str): "gauge_to_weight" or "weight_to_gauge"
        domain: Elements to validate eagerly; ω < 1 anywhere is a domain error

    Returns:
        Scale: The image scale
    """
    if direction == "gauge_to_weight":
        if scale.kind != GAUGE:
            raise DomainError(f"gauge_to_weight needs a gauge, {scale.name} is a {scale.kind}")

        def log_weight(g: Element) -> float:
            lv = scale.log_value(g)
            return 0.0 if lv == NEG_INF else math.exp(lv)
        return Scale(name=f"exp({scale.name})", kind=WEIGHT, group=scale.group, log_fn=log_weight)

    if direction == "weight_to_gauge":
        if scale.kind != WEIGHT:
            raise DomainError(f"weight_to_gauge needs a weight, {scale.name} is a {scale.kind}")

        def log_gauge(g: Element) -> float:
            lv = scale.log_value(g)
            if lv < 0:
                raise DomainError(f"{scale.name} is below 1 at {scale.group.format_element(g)}")
            return NEG_INF if lv == 0 else math.log(lv)

        for g in domain or []:
            log_gauge(g)
        return Scale(name=f"log({scale.name})", kind=GAUGE, group=scale.group, log_fn=log_gauge)

    raise DomainError(f"Unknown direction {direction!r}")
