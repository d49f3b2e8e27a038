"""
Probes on the adjoint representation: bounding Ad, Type R, and the entry
bound for integer unipotent groups.
"""
import math
from collections import defaultdict
from typing import Dict, List, Optional

import numpy as np
from scipy.optimize import linprog

import config
from adjoint.matrices import ad_operator_norm, adjoint_rep
from groups.ball import ShellTable
from groups.kinds import GroupSpec, UnipotentInteger
from groups.sampling import SamplerSpec, draw
from scales.fitting import EvidenceItem, fit_exponent
from scales.report import ProbeReport, Verdict, report_from_fit
from scales.scale import Scale
from utils.errors import DomainError, NumericRangeError, ScaleNotFoundError
from utils.logdomain import log_of
from utils.logger import get_logger

logger = get_logger("adjoint.probes")

BOUNDS_AD = "‖Ad_g‖ ≤ C·σ(g)^p + D"
TYPE_R = "every eigenvalue of Ad_g has modulus 1"
UNIPOTENT_BOUND = "‖g‖_∞ ≤ P(τ(g)) with deg P ≤ q"

MIN_AD_SAMPLES = 50


def _sampler_evidence(sampler: SamplerSpec) -> Dict:
    return {"group": sampler.group.spec, "samples": sampler.samples, "seed": sampler.seed,
            "sampler_levels": sampler.levels}


def bounds_ad_probe(scale: Scale, sampler: SamplerSpec, p_max: Optional[int] = None) -> ProbeReport:
    """
    Probe whether σ bounds Ad: ‖Ad_g‖ ≤ C·σ(g)^p + D.

    Args:
        scale (Scale): Scale on a matrix group
        sampler (SamplerSpec): Where the evidence comes from; levels are sampling magnitudes
        p_max (int): Largest exponent tried

    Returns:
        ProbeReport: Constants (p, C, D), a growth witness along a ray, or inconclusive below 50 samples
    """
    group = scale.group
    if sampler.group != group:
        raise DomainError(f"Sampler draws from {sampler.group.spec}, scale lives on {group.spec}")
    evidence = _sampler_evidence(sampler)
    evidence["scale"] = scale.name
    if sampler.samples < MIN_AD_SAMPLES:
        logger.warning(f"bounds-ad needs {MIN_AD_SAMPLES} samples, got {sampler.samples}")
        return ProbeReport(probe="bounds-ad", condition=BOUNDS_AD, verdict=Verdict.INCONCLUSIVE,
                           evidence=evidence, notes=[f"fewer than {MIN_AD_SAMPLES} samples"])
    p_max = config.MAX_EXPONENT if p_max is None else p_max

    by_level: Dict[int, List[EvidenceItem]] = defaultdict(list)
    skipped = 0
    for level, g in draw(sampler):
        try:
            norm = ad_operator_norm(group, g)
            item = EvidenceItem(math.log(norm), scale.log_value(g), tag=group.format_element(g))
        except (NumericRangeError, ScaleNotFoundError):
            skipped += 1
            continue
        by_level[level].append(item)
    levels = [by_level[j] for j in sorted(by_level)]
    evidence["skipped"] = skipped
    fit = fit_exponent(levels, range(0, p_max + 1))
    return report_from_fit(fit, "bounds-ad", BOUNDS_AD, "p", evidence)


def type_r_probe(group: GroupSpec, sampler: SamplerSpec, tol: Optional[float] = None) -> ProbeReport:
    """
    Check that every sampled Ad_g has all eigenvalues on the unit circle.

    Samples are examined in draw order (anchors first); the first one with an
    eigenvalue modulus further than tol from 1 is the witness.

    Args:
        group (GroupSpec): A supported matrix group
        sampler (SamplerSpec): Samples to examine
        tol (float): Absolute tolerance on the modulus, config.EIG_TOL by default

    Returns:
        ProbeReport: holds-on-evidence, or violated with the element and eigenvalue
    """
    tol = config.EIG_TOL if tol is None else tol
    rep = adjoint_rep(group)
    evidence = _sampler_evidence(sampler)
    evidence["basis"] = list(rep.labels)
    examined, skipped = 0, 0
    for level, g in draw(sampler):
        m = rep(g)
        if not np.all(np.isfinite(m)):
            skipped += 1
            continue
        try:
            eigenvalues = np.linalg.eigvals(m)
        except np.linalg.LinAlgError as e:
            raise NumericRangeError(f"Eigenvalue solver failed at {group.format_element(g)}: {e}")
        examined += 1
        deviation = np.abs(np.abs(eigenvalues) - 1.0)
        worst = int(np.argmax(deviation))
        if deviation[worst] > tol:
            lam = complex(eigenvalues[worst])
            logger.info(f"{group.spec} is not Type R: |λ| = {abs(lam):.6g} at {group.format_element(g)}")
            evidence.update({"examined": examined, "skipped": skipped})
            return ProbeReport(
                probe="type-r", condition=TYPE_R, verdict=Verdict.VIOLATED,
                constants={"tol": tol},
                witness={"element": group.format_element(g), "level": level,
                         "eigenvalue": [lam.real, lam.imag], "modulus": abs(lam)},
                evidence=evidence,
            )
    evidence.update({"examined": examined, "skipped": skipped})
    return ProbeReport(probe="type-r", condition=TYPE_R, verdict=Verdict.HOLDS, constants={"tol": tol},
                       evidence=evidence)


def _max_entry(group: UnipotentInteger, g) -> int:
    entries = group.upper_entries(g)
    return max(abs(x) for x in entries) if entries else 0


def _dominating_polynomial(ns: np.ndarray, maxima: np.ndarray, degree: int) -> np.ndarray:
    """Least Σ P(n) over polynomials with non-negative coefficients and P(n) ≥ max entry."""
    vander = np.vander(ns, degree + 1, increasing=True)
    result = linprog(c=vander.sum(axis=0), A_ub=-vander, b_ub=-maxima,
                     bounds=[(0, None)] * (degree + 1), method="highs")
    if not result.success:
        raise NumericRangeError(f"Polynomial fit failed: {result.message}")
    coefficients = result.x
    # lift the constant term so the bound holds exactly despite solver tolerance
    slack = float(np.max(maxima - vander @ coefficients))
    if slack > 0:
        coefficients[0] += slack
    return coefficients


def unipotent_norm_bound(q: int, table: ShellTable, degree: Optional[int] = None) -> ProbeReport:
    """
    Bound the entries of g in unip:q by a polynomial in its word length.

    The largest off-diagonal entry is collected per shell; its growth
    exponent against 1 + n is fitted, and a polynomial P of the given degree
    with non-negative coefficients is fitted above the shell maxima.

    Args:
        q (int): Matrix size
        table (ShellTable): Ball of unip:q for the standard generators
        degree (int): Degree of P, q by default

    Returns:
        ProbeReport: holds with the coefficients of P (constant term first), violated when
            entries outgrow degree `degree`, inconclusive on a truncated table
    """
    degree = q if degree is None else degree
    group = table.group
    if not isinstance(group, UnipotentInteger) or group.q != q:
        raise DomainError(f"unipotent_norm_bound needs a ball of unip:{q}, got {group.spec}")
    if not table.standard:
        raise DomainError("unipotent_norm_bound needs the standard generating set")
    evidence = {"group": group.spec, "radius": table.radius, "truncated": table.truncated}
    if table.truncated:
        return ProbeReport(probe="unipotent-bound", condition=UNIPOTENT_BOUND, verdict=Verdict.INCONCLUSIVE,
                           evidence=evidence, notes=["ball truncated by the cap"])

    maxima = np.array([max(_max_entry(group, g) for g in shell.elements) for shell in table.shells], dtype=float)
    ns = np.arange(len(maxima), dtype=float)
    levels = [[EvidenceItem(log_of(_max_entry(group, g)), math.log1p(shell.n), tag=group.format_element(g))
               for g in shell.elements] for shell in table.shells[1:]]
    fit = fit_exponent(levels, range(0, degree + 1))
    evidence["max_entry_by_shell"] = maxima.astype(int).tolist()
    report = report_from_fit(fit, "unipotent-bound", UNIPOTENT_BOUND, "k", evidence)
    if report.holds:
        coefficients = _dominating_polynomial(ns, maxima, degree)
        report.constants["degree"] = degree
        report.constants["coefficients"] = coefficients.tolist()
    return report
