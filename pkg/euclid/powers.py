"""
Lower bounds for weighted norms of convolution powers of a shifted bump.

For ψ₁ = ψ(· − u), u the first unit vector, and δ_k(x) = e^{|x|^k},

    ∫ δ_k |ψ₁^{*n}| ≥ e^{(n−1)^k} / n^{nN}

so the n-th roots of the norms grow without bound and the weighted algebra
is not m-convex. The check evaluates ψ₁^{*j}, j = 1..n, at spacings h and 2h;
their difference is the quadrature error budget subtracted before comparing.
"""
import math
from typing import Any, Dict, List

import numpy as np

from euclid.grid import GridFunction, WeightSpec, bump_eval, grid_convolve
from scales.report import ProbeReport, Verdict
from utils.errors import DomainError
from utils.logdomain import finite_or_none, log_add, log_sub
from utils.logger import get_logger

logger = get_logger("euclid.powers")

CONV_POWER_BOUND = "∫ δ_k |ψ₁^{*n}| ≥ e^{(n−1)^k} / n^{nN}"


def shifted_bump(N: int, h: float) -> GridFunction:
    """ψ₁ = ψ(· − u) sampled on its support box [u − 2, u + 2]."""
    if N < 1:
        raise DomainError(f"Dimension must be at least 1, got {N}")
    u = np.zeros(N)
    u[0] = 1.0
    return GridFunction.sample(lambda x: bump_eval(x - u), h, list(u - 2.0), list(u + 2.0))


def _power_logs(n: int, N: int, h: float, weight: WeightSpec) -> List[float]:
    psi = shifted_bump(N, h)
    power = psi
    logs = [power.log_weighted_norm(weight)]
    for _ in range(2, n + 1):
        power = grid_convolve(power, psi)
        logs.append(power.log_weighted_norm(weight))
    return logs


def log_norm_bound(j: int, k: int, N: int) -> float:
    """log of e^{(j−1)^k} / j^{jN}."""
    return float((j - 1) ** k) - j * N * math.log(j)


def log_root_bound(j: int, k: int, N: int) -> float:
    """log of e^{(j−1)^{k−1}} / j^N, the growing root sequence."""
    return float((j - 1) ** (k - 1)) - N * math.log(j)


def conv_power_bound_check(n: int, k: int, N: int, h: float) -> ProbeReport:
    """
    Compare ∫δ_k|ψ₁^{*j}| with e^{(j−1)^k}/j^{jN} for j = 1..n.

    Each norm is computed at spacing h and 2h; the difference is the error
    budget. A level holds when the norm minus the budget exceeds the bound,
    is violated when the norm plus the budget stays below it, and is
    inconclusive otherwise.

    Args:
        n (int): Largest convolution power, n ≥ 1
        k (int): Weight exponent, k ≥ 2
        N (int): Dimension
        h (float): Grid spacing

    Returns:
        ProbeReport: One row per power with norms, budget, bounds and roots
    """
    if n < 1:
        raise DomainError(f"Convolution power must be at least 1, got {n}")
    if not h > 0:
        raise DomainError(f"Grid spacing must be positive, got {h}")
    weight = WeightSpec(k)
    fine = _power_logs(n, N, h, weight)
    coarse = _power_logs(n, N, 2 * h, weight)

    rows: List[Dict[str, Any]] = []
    statuses = []
    for j, (log_norm, log_coarse) in enumerate(zip(fine, coarse), start=1):
        log_budget = log_sub(max(log_norm, log_coarse), min(log_norm, log_coarse))
        log_bound = log_norm_bound(j, k, N)
        lower = log_norm if log_budget is None else log_sub(log_norm, log_budget)
        upper = log_norm if log_budget is None else log_add(log_norm, log_budget)
        if lower is not None and lower > log_bound:
            status = Verdict.HOLDS
        elif upper < log_bound:
            status = Verdict.VIOLATED
        else:
            status = Verdict.INCONCLUSIVE
        statuses.append(status)
        rows.append({
            "n": j,
            "log_norm": log_norm,
            "log_error_budget": finite_or_none(log_budget),
            "log_bound": log_bound,
            "log_root": log_norm / j,
            "log_root_bound": log_root_bound(j, k, N),
            "status": status.value,
        })
        logger.debug(f"power {j}: log norm {log_norm:.6g}, log bound {log_bound:.6g}, {status.value}")

    root_bounds = [r["log_root_bound"] for r in rows]
    evidence = {
        "k": k, "N": N, "h": h, "reference_h": 2 * h, "rows": rows,
        "root_bounds_increasing": all(b > a for a, b in zip(root_bounds, root_bounds[1:])),
    }
    constants = {"n": n, "k": k, "N": N}
    if Verdict.VIOLATED in statuses:
        witness = next(r for r in rows if r["status"] == Verdict.VIOLATED.value)
        return ProbeReport(probe="conv-power", condition=CONV_POWER_BOUND, verdict=Verdict.VIOLATED,
                           constants=constants, witness=witness, evidence=evidence)
    if Verdict.INCONCLUSIVE in statuses:
        logger.warning(f"Quadrature error budget at h = {h} swamps the margin; try a finer grid")
        return ProbeReport(probe="conv-power", condition=CONV_POWER_BOUND, verdict=Verdict.INCONCLUSIVE,
                           constants=constants, evidence=evidence,
                           notes=[f"error budget exceeds the margin at spacing {h}, use a finer grid"])
    return ProbeReport(probe="conv-power", condition=CONV_POWER_BOUND, verdict=Verdict.HOLDS,
                       constants=constants, evidence=evidence)
