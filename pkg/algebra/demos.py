"""
Worked counterexamples: convolutions that diverge, and a tempered action
that is not strongly tempered.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np

from algebra.convolution import convolve_all, seminorm
from algebra.functions import WeightedFunction
from groups.kinds import PositiveRationalSequences, RationalSequences
from scales.scale import parse_scale
from utils.errors import DomainError, NumericRangeError
from utils.logdomain import log_of
from utils.logger import get_logger

logger = get_logger("algebra.demos")

INVERSE_SQRT = "inverse-sqrt"
SUPEREXP_SQUARE = "superexp-square"
DIVERGENCE_CASES = (INVERSE_SQRT, SUPEREXP_SQUARE)

_CHECKPOINTS = 20


@dataclass
class DivergenceTable:
    """
    Partial sums of a divergent convolution, truncated at M.

    Rows carry m and the partial sum up to m; for superexp-square the sum
    is kept in the log domain.
    """
    case: str
    M: int
    rows: List[Dict[str, Any]] = field(default_factory=list)
    monotone: bool = True

    def to_dict(self) -> dict:
        return {"case": self.case, "M": self.M, "monotone": self.monotone, "rows": self.rows}


def _checkpoints(M: int) -> np.ndarray:
    points = np.unique(np.geomspace(1, max(M, 1), num=min(max(M, 1), _CHECKPOINTS)).astype(int))
    points = points[points <= M]
    return np.unique(np.concatenate(([0], points, [M])))


def divergence_partial_sums(case: str, M: int) -> DivergenceTable:
    """
    Partial sums of the two standard divergent convolutions on Z.

    inverse-sqrt: ψ(n) = (1+|n|)^{-1/2} is in ℓ² but (ψ*ψ)(0) = Σ 1/(1+|m|)
    diverges; the partial sum over |m| ≤ M is 2H_{M+1} − 1.

    superexp-square: with σ(n) = e^{|n|^{|n|}} the minorant of ‖φ*φ‖ has
    terms e^{(2m)^m − 2}, 0 < m ≤ M, summed in the log domain.

    Args:
        case (str): "inverse-sqrt" or "superexp-square"
        M (int): Truncation, M ≥ 0 (M ≥ 1 for superexp-square)

    Returns:
        DivergenceTable: Rows at log-spaced checkpoints for inverse-sqrt, every m for superexp-square
    """
    if case == INVERSE_SQRT:
        if M < 0:
            raise DomainError(f"Truncation must be non-negative, got {M}")
        terms = np.concatenate(([1.0], 2.0 / (2.0 + np.arange(M, dtype=float))))
        sums = np.cumsum(terms)
        rows = [{"m": int(m), "partial_sum": float(sums[m])} for m in _checkpoints(M)]
        monotone = bool(np.all(np.diff(sums) > 0))
        return DivergenceTable(case=case, M=M, rows=rows, monotone=monotone)

    if case == SUPEREXP_SQUARE:
        if M < 1:
            raise DomainError(f"superexp-square needs M ≥ 1, got {M}")
        rows = []
        log_partial = -math.inf
        for m in range(1, M + 1):
            if m * math.log(2 * m) > 709.0:
                raise NumericRangeError(f"(2m)^m leaves the floating point range at m = {m}")
            log_term = float((2 * m) ** m - 2)
            log_partial = float(np.logaddexp(log_partial, log_term))
            rows.append({"m": m, "log_term": log_term, "log_partial_sum": log_partial})
        monotone = all(b["log_partial_sum"] > a["log_partial_sum"] for a, b in zip(rows, rows[1:]))
        return DivergenceTable(case=case, M=M, rows=rows, monotone=monotone)

    raise DomainError(f"Unknown divergence case {case!r}, expected one of {', '.join(DIVERGENCE_CASES)}")


@dataclass
class TemperedDemo:
    """
    Outcome of the tempered-action example on Q^∞.

    Attributes:
        q (Fraction): The rational q > 1
        n (int): Number of delta factors
        norm (Fraction): ‖α_{q₁}(δ_{e₁}) * ⋯ * α_{qₙ}(δ_{eₙ})‖₁
        expected (Fraction): (1 + q)^n
        action_bounds (list): ‖α_{qᵢ}(δ_{eᵢ})‖₁ against γ(qᵢ)‖δ_{eᵢ}‖₁
    """
    q: Fraction
    n: int
    norm: Fraction
    expected: Fraction
    action_bounds: List[Dict[str, str]] = field(default_factory=list)

    @property
    def norm_matches(self) -> bool:
        return self.norm == self.expected

    @property
    def action_bound_holds(self) -> bool:
        return all(Fraction(b["lhs"]) <= Fraction(b["rhs"]) for b in self.action_bounds)

    def to_dict(self) -> dict:
        return {"q": str(self.q), "n": self.n, "norm": str(self.norm), "expected": str(self.expected),
                "norm_matches": self.norm_matches, "action_bound_holds": self.action_bound_holds,
                "action_bounds": self.action_bounds}


def _act(q_vec, phi: WeightedFunction) -> WeightedFunction:
    """α_q(φ): moves the mass of φ at r to the entrywise product q·r."""
    group = phi.group
    scale = dict(q_vec.payload)
    return WeightedFunction.from_items(
        group, [([(i, scale.get(i, Fraction(1)) * r) for i, r in g.payload], c) for g, c in phi.terms],
        phi.scale,
    )


def tempered_action_demo(q, n: int) -> TemperedDemo:
    """
    Build α_{q₁}(δ_{e₁}) * ⋯ * α_{qₙ}(δ_{eₙ}) in ℓ¹(Q^∞, ω) and take its norm.

    Here ω(r) = ∏(1 + |rᵢ|), qᵢ is q in slot i and 1 elsewhere, and G acts by
    entrywise multiplication. The product is δ_{(q,…,q)} with norm (1+q)^n.
    Each factor is also checked against ‖α_q(φ)‖₁ ≤ γ(q)‖φ‖₁ with
    γ(q) = ∏ max(qᵢ, 1/qᵢ).

    Args:
        q: Rational q > 1
        n (int): n ≥ 1

    Returns:
        TemperedDemo: Exact norm and the action bound checks
    """
    q = Fraction(q)
    if q <= 1:
        raise DomainError(f"q must exceed 1, got {q}")
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    space, acting = RationalSequences(), PositiveRationalSequences()
    omega = parse_scale("qinf_omega", space)
    gamma = parse_scale("qinf_gamma", acting)
    factors, bounds = [], []
    for i in range(1, n + 1):
        delta = WeightedFunction.delta(space, space.canonical_form([(i, 1)]), scale=omega)
        q_i = acting.canonical_form([(i, q)])
        moved = _act(q_i, delta)
        lhs = seminorm(moved, 1).exact
        rhs = gamma.exact_value(q_i) * seminorm(delta, 1).exact
        bounds.append({"slot": str(i), "lhs": str(lhs), "rhs": str(rhs)})
        factors.append(moved)
    norm = seminorm(convolve_all(factors), 1).exact
    demo = TemperedDemo(q=q, n=n, norm=norm, expected=(1 + q) ** n, action_bounds=bounds)
    logger.debug(f"tempered demo q={q}, n={n}: norm {norm}")
    return demo


def strong_tempered_comparison(q, n: int, d: int, C) -> Dict[str, Any]:
    """
    Compare (1+q)^n with q^d 2^n C^n, the most a strongly tempered action allows.

    Returns:
        dict: Both sides as exact text, their logs, and whether the bound fails
    """
    q, C = Fraction(q), Fraction(C)
    lhs = (1 + q) ** n
    rhs = q ** d * 2 ** n * C ** n
    return {"q": str(q), "n": n, "d": d, "C": str(C), "lhs": str(lhs), "rhs": str(rhs),
            "lhs_log": log_of(lhs), "rhs_log": log_of(rhs), "fails": lhs > rhs}


def strong_tempered_failure(n: int, d: int, C, q_max: int = 10 ** 4) -> Optional[Dict[str, Any]]:
    """
    Smallest integer q ≥ 2 with (1+q)^n > q^d 2^n C^n.

    Exists when n > d; None when no q up to q_max fails.
    """
    for q in range(2, q_max + 1):
        row = strong_tempered_comparison(q, n, d, C)
        if row["fails"]:
            return row
    return None
