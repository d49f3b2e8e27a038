"""
Convolution powers of a bump on R^N, by grid quadrature.
"""
from euclid.grid import GridFunction, WeightSpec, bump_eval, grid_convolve, max_norm
from euclid.powers import conv_power_bound_check, log_norm_bound, log_root_bound, shifted_bump

__all__ = [
    "GridFunction",
    "WeightSpec",
    "bump_eval",
    "conv_power_bound_check",
    "grid_convolve",
    "log_norm_bound",
    "log_root_bound",
    "max_norm",
    "shifted_bump",
]
