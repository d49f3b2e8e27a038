"""
Growth of balls and the integrability condition.
"""
from growth.growth import GrowthModel, GrowthReport, growth_classify, growth_report, growth_table
from growth.integrability import (
    IntegrabilitySum,
    IntegrabilityVerdict,
    growth_consistency_check,
    holder_embedding_check,
    integrability_sum,
)

__all__ = [
    "GrowthModel",
    "GrowthReport",
    "IntegrabilitySum",
    "IntegrabilityVerdict",
    "growth_classify",
    "growth_consistency_check",
    "growth_report",
    "growth_table",
    "holder_embedding_check",
    "integrability_sum",
]
