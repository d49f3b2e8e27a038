"""
The integrability condition Σ_g σ(g)^{-p} < ∞ on a discrete group, and the
embedding estimate it implies.

Finite sums never decide convergence by themselves. A sum is reported as
converges-certified only with an explicit tail bound:

    geometric   shell terms t_n with t_{n+1}/t_n ≤ ρ < 1 over the upper half
                of the ball; tail ≤ t_R ρ/(1 − ρ)
    integral    |S_n| ≤ A n^{d-1} and σ(g) ≥ c(1 + τ(g)) on the ball, p > d;
                tail ≤ A c^{-p} R^{d-p}/(p − d)
"""
import math
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field
from tqdm import tqdm

import config
from algebra.functions import WeightedFunction
from groups.ball import ShellTable
from growth.growth import GrowthModel, GrowthReport, growth_classify, growth_report
from scales.report import ProbeReport, Verdict
from scales.scale import Scale
from utils.errors import DomainError, GroupMismatchError
from utils.logdomain import NEG_INF, finite_or_none, log_add, log_of, log_sum, safe_exp
from utils.logger import get_logger

logger = get_logger("growth.integrability")

HOLDER_EMBEDDING = "‖σ^m φ‖_r ≤ C^{1/r}·‖σ^{m+p} φ‖_∞"
GROWTH_CONSISTENCY = "Σ σ^{-p} < ∞ forces log|S_n| to grow at most p times as fast as log σ"

_MIN_TAIL_RATIOS = 3
_RATIO_EPS = 1e-9
# terms decaying no faster than 1/n compare with the harmonic series
_HARMONIC_SLOPE = -1.0
_HARMONIC_SLACK = 1e-2


class IntegrabilityVerdict(str, Enum):
    CONVERGES = "converges-certified"
    DIVERGES = "diverges-evidence"
    INCONCLUSIVE = "inconclusive"


class IntegrabilitySum(BaseModel):
    """
    Σ_{g ∈ B_R} σ(g)^{-p}, shell by shell.

    Rows carry n, |S_n|, the log shell term, the log partial sum and the
    largest log σ on the shell. `bound` is the partial sum plus the certified
    tail, the constant C of the embedding estimate.
    """
    group: str
    scale: str
    p: float
    radius: int
    truncated: bool = False
    rows: List[Dict[str, Any]] = Field(default_factory=list)
    log_partial_sum: float
    partial_sum: Optional[float] = None
    verdict: IntegrabilityVerdict
    certificate: Optional[Dict[str, Any]] = None
    tail_bound: Optional[float] = None
    bound: Optional[float] = None
    notes: List[str] = Field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.verdict == IntegrabilityVerdict.CONVERGES


def _shell_logs(scale: Scale, table: ShellTable, p: float):
    terms, max_scale, min_linear = [], [], math.inf
    for shell in tqdm(table.shells, disable=not config.PROGRESS, desc="integrability"):
        logs = []
        top = NEG_INF
        for g in shell.elements:
            log_sigma = scale.log_value(g)
            if log_sigma == NEG_INF:
                raise DomainError(f"{scale.name} vanishes at {table.group.format_element(g)}; "
                                  f"σ^(-p) needs σ > 0, try 1+σ")
            logs.append(-p * log_sigma)
            top = max(top, log_sigma)
            min_linear = min(min_linear, log_sigma - math.log1p(shell.n))
        terms.append(log_sum(logs))
        max_scale.append(top)
    return terms, max_scale, min_linear


def _geometric_certificate(terms: List[float], radius: int) -> Optional[Dict[str, Any]]:
    start = max(1, radius // 2)
    window = terms[start:radius + 1]
    if len(window) < _MIN_TAIL_RATIOS + 1:
        return None
    ratios = np.diff(np.asarray(window))
    if np.any(np.diff(ratios) > _RATIO_EPS):
        return None
    log_rho = float(ratios.max())
    if log_rho >= 0:
        return None
    rho = math.exp(log_rho)
    log_tail = terms[radius] + log_rho - math.log1p(-rho)
    return {"kind": "geometric", "ratio": rho, "log_ratio": log_rho, "window": [start, radius],
            "log_tail_bound": log_tail}


def _integral_certificate(table: ShellTable, p: float, min_linear: float) -> Optional[Dict[str, Any]]:
    report = growth_classify(growth_report(table))
    if report.model != GrowthModel.POLYNOMIAL or report.degree is None or p <= report.degree:
        return None
    d, radius = report.degree, table.radius
    if radius < 1:
        return None
    log_A = max(math.log(table.sphere_sizes[n]) - (d - 1) * math.log(n) for n in range(1, radius + 1))
    log_tail = log_A - p * min_linear + (d - p) * math.log(radius) - math.log(p - d)
    return {"kind": "integral", "degree": d, "A": safe_exp(log_A), "c": safe_exp(min_linear),
            "log_tail_bound": log_tail}


def integrability_sum(scale: Scale, table: ShellTable, p: float) -> IntegrabilitySum:
    """
    Sum σ^{-p} over an enumerated ball and try to certify the tail.

    Args:
        scale (Scale): σ > 0 on the ball
        table (ShellTable): Enumerated ball of a discrete group
        p (float): Exponent p > 0

    Returns:
        IntegrabilitySum: Partial sums by shell and a verdict
    """
    if scale.group != table.group:
        raise GroupMismatchError(f"Scale on {scale.group.spec} summed over a ball of {table.group.spec}")
    if p <= 0:
        raise DomainError(f"Integrability exponent must be positive, got {p}")

    terms, max_scale, min_linear = _shell_logs(scale, table, p)
    rows, partial = [], NEG_INF
    for n, (term, top) in enumerate(zip(terms, max_scale)):
        partial = log_add(partial, term)
        rows.append({"n": n, "shell_size": table.shells[n].size, "log_term": term,
                     "log_partial_sum": partial, "partial_sum": safe_exp(partial),
                     "log_max_scale": top})

    notes: List[str] = []
    certificate = _geometric_certificate(terms, table.radius)
    if certificate is None:
        certificate = _integral_certificate(table, p, min_linear)
        if certificate is not None:
            notes.append("integral tail assumes the shell and scale bounds seen on the ball persist")

    if certificate is not None:
        verdict = IntegrabilityVerdict.CONVERGES
    elif table.truncated:
        verdict = IntegrabilityVerdict.INCONCLUSIVE
        notes.append("ball truncated and no tail certificate")
    elif _harmonic_or_worse(terms, table.radius):
        verdict = IntegrabilityVerdict.DIVERGES
        notes.append("shell terms decay no faster than 1/n")
    else:
        verdict = IntegrabilityVerdict.INCONCLUSIVE
        notes.append("no tail certificate")

    tail_bound = bound = None
    if certificate is not None:
        tail_bound = safe_exp(certificate["log_tail_bound"])
        bound = safe_exp(log_add(partial, certificate["log_tail_bound"]))
    result = IntegrabilitySum(
        group=table.group.spec, scale=scale.name, p=p, radius=table.radius, truncated=table.truncated,
        rows=rows, log_partial_sum=partial, partial_sum=safe_exp(partial), verdict=verdict,
        certificate=certificate, tail_bound=tail_bound, bound=bound, notes=notes,
    )
    logger.info(f"Σ {scale.name}^-{p} over radius {table.radius} of {table.group.spec}: {verdict.value}")
    return result


def _harmonic_or_worse(terms: List[float], radius: int) -> bool:
    start = max(1, radius // 2)
    if radius - start + 1 < _MIN_TAIL_RATIOS + 1:
        return False
    n = np.arange(start, radius + 1, dtype=float)
    slope, _ = np.polyfit(np.log(n), np.asarray(terms[start:radius + 1]), 1)
    return bool(slope >= _HARMONIC_SLOPE - _HARMONIC_SLACK)


def holder_embedding_check(phi: WeightedFunction, m: int, r: float, p: float, C: Optional[float],
                           scale: Optional[Scale] = None) -> ProbeReport:
    """
    Check ‖σ^m φ‖_r ≤ C^{1/r}‖σ^{m+p} φ‖_∞ on a finitely supported φ.

    With C ≥ Σ σ^{-p} and σ ≥ 1 this always holds; C normally comes from a
    certified integrability sum at exponent p.

    Args:
        phi (WeightedFunction): Finitely supported function
        m (int): Power of σ on the left
        r (float): r ≥ 1
        p (float): Integrability exponent
        C (float): Certified value of Σ σ^{-p}, None when there is no certificate
        scale (Scale): σ, φ's own scale by default

    Returns:
        ProbeReport: holds-on-evidence, violated, or inconclusive without C
    """
    sigma = scale or phi.scale
    if sigma is None:
        raise DomainError("holder_embedding_check needs a scale")
    if sigma.group != phi.group:
        raise GroupMismatchError(f"Scale on {sigma.group.spec} used for a function on {phi.group.spec}")
    if r < 1:
        raise DomainError(f"r must be at least 1, got {r}")
    evidence = {"group": phi.group.spec, "scale": sigma.name, "m": m, "r": r, "p": p, "support": len(phi)}
    if C is None:
        return ProbeReport(probe="holder-check", condition=HOLDER_EMBEDDING, verdict=Verdict.INCONCLUSIVE,
                           evidence=evidence, notes=["no certified integrability constant"])

    notes = []
    lr, sup, below_one = [], NEG_INF, 0
    for g, c in phi.terms:
        log_sigma = sigma.log_value(g)
        below_one += log_sigma < 0
        log_c = log_of(abs(c))
        lr.append(r * (m * log_sigma + log_c))
        sup = max(sup, (m + p) * log_sigma + log_c)
    if below_one:
        notes.append(f"σ < 1 at {below_one} support points, the estimate may fail there")
    lhs = log_sum(lr) / r
    rhs = log_of(C) / r + sup
    sides = {"lhs_log": finite_or_none(lhs), "rhs_log": finite_or_none(rhs)}
    evidence.update(sides)
    constants = {"C": C, "m": m, "r": r, "p": p}
    if lhs <= rhs + 1e-12 * max(1.0, abs(rhs)):
        return ProbeReport(probe="holder-check", condition=HOLDER_EMBEDDING, verdict=Verdict.HOLDS,
                           constants=constants, evidence=evidence, notes=notes)
    logger.info(f"Embedding estimate fails for C = {C}")
    return ProbeReport(probe="holder-check", condition=HOLDER_EMBEDDING, verdict=Verdict.VIOLATED,
                       constants=constants, witness=sides, evidence=evidence, notes=notes)


def growth_consistency_check(growth: GrowthReport, integrability: IntegrabilitySum,
                             tol: float = 1e-6) -> ProbeReport:
    """
    Cross-check a certified integrability sum against the growth fit.

    If Σ σ^{-p} converges the shell terms |S_n| e^{-p max log σ} must vanish,
    so an exponential growth rate can be at most p times the per-shell rate
    of log σ. Polynomial or undetermined growth is always consistent.

    Args:
        growth (GrowthReport): Output of growth_classify on the same group
        integrability (IntegrabilitySum): Output of integrability_sum
        tol (float): Slack on the rate comparison

    Returns:
        ProbeReport: holds-on-evidence, violated, or inconclusive when nothing is certified
    """
    if growth.group != integrability.group:
        raise GroupMismatchError(f"Growth of {growth.group} compared with a sum over {integrability.group}")
    evidence = {"group": growth.group, "scale": integrability.scale, "p": integrability.p,
                "model": growth.model.value, "rate": growth.rate}
    if not integrability.certified:
        return ProbeReport(probe="growth-consistency", condition=GROWTH_CONSISTENCY, verdict=Verdict.INCONCLUSIVE,
                           evidence=evidence, notes=["integrability not certified"])
    if growth.model != GrowthModel.EXPONENTIAL:
        return ProbeReport(probe="growth-consistency", condition=GROWTH_CONSISTENCY, verdict=Verdict.HOLDS,
                           evidence=evidence)

    rows = integrability.rows[max(1, integrability.radius // 2):]
    if len(rows) < 2:
        return ProbeReport(probe="growth-consistency", condition=GROWTH_CONSISTENCY, verdict=Verdict.INCONCLUSIVE,
                           evidence=evidence, notes=["too few shells"])
    n = np.array([row["n"] for row in rows], dtype=float)
    scale_rate = float(np.polyfit(n, np.array([row["log_max_scale"] for row in rows]), 1)[0])
    allowed = integrability.p * scale_rate
    evidence.update({"scale_rate": scale_rate, "allowed_rate": allowed})
    if growth.rate <= allowed + tol:
        return ProbeReport(probe="growth-consistency", condition=GROWTH_CONSISTENCY, verdict=Verdict.HOLDS,
                           constants={"rate": growth.rate, "allowed_rate": allowed}, evidence=evidence)
    return ProbeReport(probe="growth-consistency", condition=GROWTH_CONSISTENCY, verdict=Verdict.VIOLATED,
                       witness={"rate": growth.rate, "allowed_rate": allowed}, evidence=evidence)
