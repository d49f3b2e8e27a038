"""
Scales, gauges and weights on groups, and the probes that compare them.
"""
from scales.axioms import check_axioms, exp_bijection, normalize_gauge
from scales.fitting import EvidenceItem, ExponentFit, fit_exponent
from scales.gspace import (
    GSpaceSpec,
    InducedScaleValue,
    gspace_check,
    gspace_from_name,
    induced_scale_eval,
    uniform_translation_probe,
    validate_action,
)
from scales.probes import (
    dominates_probe,
    m_sub_polynomial_probe,
    strong_dominates_probe,
    sub_polynomial_probe,
    translation_equiv_probe,
)
from scales.report import ProbeReport, Verdict
from scales.scale import Scale, eval_scale, parse_scale

__all__ = [
    "EvidenceItem",
    "ExponentFit",
    "GSpaceSpec",
    "InducedScaleValue",
    "ProbeReport",
    "Scale",
    "Verdict",
    "check_axioms",
    "dominates_probe",
    "eval_scale",
    "exp_bijection",
    "fit_exponent",
    "gspace_check",
    "gspace_from_name",
    "induced_scale_eval",
    "m_sub_polynomial_probe",
    "normalize_gauge",
    "parse_scale",
    "strong_dominates_probe",
    "sub_polynomial_probe",
    "translation_equiv_probe",
    "uniform_translation_probe",
    "validate_action",
]
