"""
The weighted ℓ¹ algebra of a discrete group and its worked examples.
"""
from algebra.convolution import (
    SeminormValue,
    conv_bound_check,
    convolve,
    convolve_all,
    delta_power_ratio,
    involution,
    seminorm,
)
from algebra.demos import (
    DivergenceTable,
    TemperedDemo,
    divergence_partial_sums,
    strong_tempered_comparison,
    strong_tempered_failure,
    tempered_action_demo,
)
from algebra.functions import WeightedFunction
from algebra.mconvex import mconvexity_probe

__all__ = [
    "DivergenceTable",
    "SeminormValue",
    "TemperedDemo",
    "WeightedFunction",
    "conv_bound_check",
    "convolve",
    "convolve_all",
    "delta_power_ratio",
    "divergence_partial_sums",
    "involution",
    "mconvexity_probe",
    "seminorm",
    "strong_tempered_comparison",
    "strong_tempered_failure",
    "tempered_action_demo",
]
