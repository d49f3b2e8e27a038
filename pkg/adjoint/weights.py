"""
Explicit weights on SL(2, R) and on the ax+b group.
"""
import math
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from groups.elements import Element
from groups.kinds import AffineGroup, SpecialLinear2, format_number
from utils.errors import CanonicalFormError, GroupMismatchError, NumericRangeError
from utils.logdomain import log_sum
from utils.logger import get_logger

logger = get_logger("adjoint.weights")

E = math.e
_RECONSTRUCTION_TOL = 1e-9


def sl2_scales(g: Element) -> Tuple[float, float]:
    """
    σ(g) = max |log sᵢ(g)| and θ(g) = max(‖g‖, ‖g⁻¹‖) for g in SL(2, R).

    With det g = 1 the singular values are s and 1/s, so e^σ = θ.

    Args:
        g (Element): Element of sl2

    Returns:
        Tuple[float, float]: (sigma, theta)
    """
    if g.kind != SpecialLinear2.kind:
        raise GroupMismatchError(f"sl2_scales needs an sl2 element, got {g.kind}")
    s = np.linalg.svd(SpecialLinear2().matrix(g), compute_uv=False)
    if s[-1] <= 0:
        raise CanonicalFormError("Singular matrix")
    sigma = max(abs(math.log(s[0])), abs(math.log(s[-1])))
    theta = max(float(s[0]), 1.0 / float(s[-1]))
    return sigma, theta


def axb_log_omega(a: float, b: float) -> float:
    """log ω(a, b) with ω = e^{|a|} + |e^{-a}b| + |b| + 1."""
    lb = math.log(abs(b)) if b != 0 else -math.inf
    return log_sum([abs(a), lb - a, lb, 0.0])


@dataclass
class AxbCertificate:
    """
    A word for g = (a, b) in the ax+b group and the bound it proves.

    The letters all lie in the compact set {(s, t) : |s| ≤ 1, |t| ≤ 1}.

    Attributes:
        n_total (int): Word-length bound ⌈|a|⌉ + 2n
        n (int): Number of translation steps
        gamma (float): Step size of the translation part, in (1/e, 1]
        a_steps (int): Number of pure dilation letters
        word (list): The letters (s, t), left to right
        reconstruction_error (float): Distance from the product of the word to g
        log_lhs (float): log e^{|a| + 2n}
        log_rhs (float): log (e(e-1))² ω(g)²
    """
    g: Tuple[float, float]
    n_total: int
    n: int
    gamma: float
    a_steps: int
    word: List[Tuple[float, float]] = field(default_factory=list)
    reconstruction_error: float = 0.0
    log_lhs: float = 0.0
    log_rhs: float = 0.0
    gap_step: bool = False

    @property
    def inequality_holds(self) -> bool:
        return self.log_lhs <= self.log_rhs

    @property
    def reconstructed(self) -> bool:
        return self.reconstruction_error <= _RECONSTRUCTION_TOL * max(1.0, abs(self.g[1]))

    def to_dict(self) -> dict:
        return {
            "g": [format_number(x) for x in self.g],
            "n_total": self.n_total,
            "n": self.n,
            "gamma": self.gamma,
            "a_steps": self.a_steps,
            "letters": len(self.word),
            "gap_step": self.gap_step,
            "reconstruction_error": self.reconstruction_error,
            "log_lhs": self.log_lhs,
            "log_rhs": self.log_rhs,
            "inequality_holds": self.inequality_holds,
        }


def _geometric(n: int) -> float:
    """1 + e + ... + e^{n-1}."""
    return math.expm1(n) / (E - 1)


def _translation_steps(y: float) -> int:
    """Smallest n with 1 + e + ... + e^{n-1} ≥ y."""
    if y <= 0:
        return 0
    n = max(1, math.ceil(math.log(y * (E - 1) + 1)))
    while n > 1 and _geometric(n - 1) >= y:
        n -= 1
    while _geometric(n) < y:
        n += 1
    return n


def _translation_word(y: float, sign: float) -> Tuple[List[Tuple[float, float]], int, float, bool]:
    """
    Letters whose product is the pure translation (0, sign·y).

    (1, γ)^n (−1, 0)^n = (0, γ(1 + e + ... + e^{n-1})). When y is too close
    to the previous geometric sum for γ to stay above 1/e, use γ = 1 on
    n − 1 steps and finish with the single letter (0, y − S_{n-1}).
    """
    n = _translation_steps(y)
    if n == 0:
        return [], 0, 0.0, False
    full = _geometric(n)
    if y > full / E:
        gamma = y / full
        return [(1.0, sign * gamma)] * n + [(-1.0, 0.0)] * n, n, gamma, False
    rest = y - _geometric(n - 1)
    word = [(1.0, sign)] * (n - 1) + [(-1.0, 0.0)] * (n - 1) + [(0.0, sign * rest)]
    return word, n, 1.0, True


def axb_decompose(g: Tuple[float, float]) -> AxbCertificate:
    """
    Write g = (a, b) as a word of bounded letters and bound its word length.

    For a ≥ 0, g = (a, 0)·(0, e^{-a}b); for a < 0, g = (0, b)·(a, 0). The
    translation part uses the smaller of |b| and |e^{-a}b|, the dilation
    part ⌈|a|⌉ letters (a/k, 0). The word length is at most ⌈|a|⌉ + 2n and
    e^{|a| + 2n} ≤ (e(e-1))² ω(g)².

    Args:
        g (Tuple[float, float]): (a, b)

    Returns:
        AxbCertificate: Bound, word and the checked inequality
    """
    a, b = float(g[0]), float(g[1])
    group = AffineGroup()
    try:
        x = math.exp(-a) * b
    except OverflowError:
        raise NumericRangeError(f"e^{-a} overflows")
    translate_first = a < 0
    y = abs(b) if translate_first else abs(x)
    sign = math.copysign(1.0, b)
    translation, n, gamma, gap = _translation_word(y, sign)

    a_steps = math.ceil(abs(a))
    dilation = [(a / a_steps, 0.0)] * a_steps if a_steps else []
    word = translation + dilation if translate_first else dilation + translation

    product = group.product(group.canonical_form(letter) for letter in word)
    target = group.canonical_form((a, b))
    error = max(abs(p - t) for p, t in zip(product.payload, target.payload))

    cert = AxbCertificate(
        g=(a, b), n_total=a_steps + 2 * n, n=n, gamma=gamma, a_steps=a_steps, word=word,
        reconstruction_error=error, log_lhs=abs(a) + 2 * n,
        log_rhs=2 * (1 + math.log(E - 1)) + 2 * axb_log_omega(a, b), gap_step=gap,
    )
    logger.debug(f"axb_decompose({a}, {b}): n={n}, bound {cert.n_total}, error {error:.3g}")
    return cert
