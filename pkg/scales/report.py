"""
Probe reports shared by every checker in gaugelab.
"""
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from scales.fitting import ExponentFit
from utils.logdomain import finite_or_none, safe_exp


class Verdict(str, Enum):
    """Outcome of a probe."""
    HOLDS = "holds-on-evidence"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"


class ProbeReport(BaseModel):
    """
    What a probe found.

    A violated verdict always carries a witness that re-evaluates to a strict
    violation; holds-on-evidence always records the domain it looked at.
    """
    model_config = ConfigDict(use_enum_values=False)

    probe: str
    condition: str
    verdict: Verdict
    constants: Dict[str, Any] = Field(default_factory=dict)
    witness: Optional[Dict[str, Any]] = None
    evidence: Dict[str, Any] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.verdict == Verdict.HOLDS

    @property
    def violated(self) -> bool:
        return self.verdict == Verdict.VIOLATED


def fit_constants(fit: ExponentFit, exponent_name: str) -> Dict[str, Any]:
    """Constants of a successful fit, with log-domain companions for huge values."""
    constants: Dict[str, Any] = {
        exponent_name: fit.exponent,
        "C": safe_exp(fit.log_C),
        "log_C": finite_or_none(fit.log_C),
    }
    if fit.with_offset:
        constants["D"] = safe_exp(fit.log_D) if fit.log_D is not None else 0.0
        constants["log_D"] = finite_or_none(fit.log_D)
    return constants


def report_from_fit(fit: ExponentFit, probe: str, condition: str, exponent_name: str,
                    evidence: Dict[str, Any], notes: Optional[List[str]] = None) -> ProbeReport:
    """
    Turn an exponent fit into a probe report.

    Args:
        fit (ExponentFit): Result of fit_exponent
        probe (str): Probe name
        condition (str): The inequality being probed
        exponent_name (str): Name of the fitted exponent (m, d, l, p, k)
        evidence (dict): Domain description (radius, samples, seed...)
        notes (list): Extra remarks

    Returns:
        ProbeReport: The report
    """
    evidence = dict(evidence)
    evidence["levels"] = fit.levels
    evidence["required_log_C_by_level"] = [finite_or_none(v) for v in fit.required]
    if fit.status == "fit":
        return ProbeReport(probe=probe, condition=condition, verdict=Verdict.HOLDS,
                           constants=fit_constants(fit, exponent_name), evidence=evidence,
                           notes=list(notes or []))
    if fit.status == "growth":
        return ProbeReport(probe=probe, condition=condition, verdict=Verdict.VIOLATED,
                           witness=fit.witness, evidence=evidence, notes=list(notes or []))
    reason = fit.reason or "evidence neither fits nor grows"
    return ProbeReport(probe=probe, condition=condition, verdict=Verdict.INCONCLUSIVE,
                       witness=fit.witness, evidence=evidence, notes=list(notes or []) + [reason])
