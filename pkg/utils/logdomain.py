"""
Log-domain arithmetic helpers.

Scale values routinely overflow a double (e^{|n|^{|n|}}), so every value is
carried as its natural logarithm. Zero is represented by -inf.
"""
import math
from fractions import Fraction
from typing import Iterable, Optional, Union

import numpy as np
from scipy.special import logsumexp

NEG_INF = -math.inf

Number = Union[int, float, Fraction]


def log_of(value: Number) -> float:
    """
    Natural logarithm of a non-negative number, exact-friendly.

    Fractions and big integers are handled without converting to float first,
    so log_of(10**400) is finite.

    Args:
        value: Non-negative int, float or Fraction

    Returns:
        float: log(value), -inf for zero
    """
    if value == 0:
        return NEG_INF
    if value < 0:
        raise ValueError(f"log of negative value {value}")
    if isinstance(value, Fraction):
        return math.log(value.numerator) - math.log(value.denominator)
    return math.log(value)


def log_sum(values: Iterable[float]) -> float:
    """log(sum(exp(v))) over an iterable of log values; -inf when empty."""
    arr = np.fromiter(values, dtype=float)
    if arr.size == 0 or np.all(arr == NEG_INF):
        return NEG_INF
    return float(logsumexp(arr))


def log_add(a: float, b: float) -> float:
    """log(e^a + e^b)."""
    return float(np.logaddexp(a, b))


def log_one_plus(a: float) -> float:
    """log(1 + e^a), the log of 1 + σ given log σ."""
    return float(np.logaddexp(0.0, a))


def log_sub(a: float, b: float) -> Optional[float]:
    """
    log(e^a - e^b) for a > b.

    Returns:
        Optional[float]: None when the difference is not positive
    """
    if b == NEG_INF:
        return a
    if a <= b:
        return None
    return a + math.log(-math.expm1(b - a))


def scaled(exponent: float, log_value: float) -> float:
    """exponent * log_value with 0 * (-inf) read as 0, i.e. σ^0 = 1 even where σ = 0."""
    if exponent == 0:
        return 0.0
    return exponent * log_value


def safe_exp(log_value: Optional[float]) -> Optional[float]:
    """exp of a log value when it fits in a double, else None."""
    if log_value is None:
        return None
    if log_value == NEG_INF:
        return 0.0
    if log_value > 709.0:
        return None
    return math.exp(log_value)


def finite_or_none(value: Optional[float]) -> Optional[float]:
    """Drop infinities and NaN so values serialize as JSON."""
    if value is None or not math.isfinite(value):
        return None
    return float(value)
