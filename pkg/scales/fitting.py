"""
Constant fitting shared by every probe.

Probes compare two quantities of the shape

    lhs <= C * rhs^e (+ D)

for an unknown exponent e. Evidence arrives in levels (ball shells, chain
lengths, sampling magnitudes). For a candidate e every item requires
log C >= (log lhs - e * log rhs) / weight; the per-level maximum of that is
the required constant of the level.

An exponent is accepted when the required constant stops growing: the last
VIOLATION_RUN increments are not all strictly positive, or they are but the
rise is small next to the rise of the base (a bounded sequence creeping up
to its limit). The smallest accepted exponent wins, then the least
constant. When every exponent keeps growing over at least VIOLATION_RUN + 1
levels, the constants fitted on the earlier levels are re-checked against
the worst item of the last level; a strict failure there is a violation
witness.
"""
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence

import config
from utils.logdomain import NEG_INF, finite_or_none, log_add, log_sub, scaled

_EPS = 1e-12


@dataclass(frozen=True)
class EvidenceItem:
    """
    One comparison.

    Attributes:
        lhs (float): log of the dominated side
        rhs (float): log of the base the exponent applies to
        weight (float): Divisor of the log ratio (chain length for n-th roots)
        tag (Any): Witness payload reported on violation
    """
    lhs: float
    rhs: float
    weight: float = 1.0
    tag: Any = None


@dataclass
class ExponentFit:
    """Outcome of fit_exponent."""
    status: str  # "fit", "growth" or "undecided"
    exponent: Optional[int] = None
    log_C: Optional[float] = None
    log_D: Optional[float] = None
    with_offset: bool = True
    required: List[float] = field(default_factory=list)
    witness: Optional[Dict[str, Any]] = None
    levels: int = 0
    reason: Optional[str] = None


def required_log_constant(item: EvidenceItem, exponent: float) -> float:
    """log C needed by a single item; +inf when the base vanishes but lhs does not."""
    if item.lhs == NEG_INF:
        return NEG_INF
    base = scaled(exponent, item.rhs)
    if base == NEG_INF:
        return math.inf
    return (item.lhs - base) / item.weight


def _level_requirements(levels: Sequence[Sequence[EvidenceItem]], exponent: float):
    """Per-level required log C, the scaled base e*rhs/weight of the item attaining it, and whether any item is unbounded."""
    required, bases, unbounded = [], [], False
    for items in levels:
        best, base = NEG_INF, NEG_INF
        for item in items:
            v = required_log_constant(item, exponent)
            if v == math.inf:
                unbounded = True
            elif v > best:
                best, base = v, scaled(exponent, item.rhs) / item.weight
        required.append(best)
        bases.append(base)
    return required, bases, unbounded


def _finite_or_floor(value: float) -> float:
    return value if value != math.inf else NEG_INF


def _increasing(values: Sequence[float]) -> bool:
    return len(values) >= 2 and all(b > a + _EPS * max(1.0, abs(a)) for a, b in zip(values, values[1:]))


def _tail_growth(required: Sequence[float], bases: Sequence[float], run: int) -> bool:
    """
    Strict increase over the last run levels, steep enough against the base.

    A required constant that creeps up towards a limit is bounded; one that
    rises by at least GROWTH_SLOPE times the rise of e*log(base) is not; with
    e = 0 the base is constant and any strict increase is growth.
    """
    pairs = [(v, b) for v, b in zip(required, bases) if math.isfinite(v)]
    window = pairs[-(run + 1):]
    if not _increasing([v for v, _ in window]):
        return False
    rise = window[-1][0] - window[0][0]
    first, last = window[0][1], window[-1][1]
    if not (math.isfinite(first) and math.isfinite(last)):
        return True
    base_rise = last - first
    return base_rise <= 0 or rise >= config.GROWTH_SLOPE * base_rise


def _log_offset(levels: Sequence[Sequence[EvidenceItem]], exponent: float, log_C: float) -> Optional[float]:
    """log of max(lhs - C * rhs^e, 0) over every item; None when no item needs an offset."""
    worst: Optional[float] = None
    for items in levels:
        for item in items:
            if item.lhs == NEG_INF:
                continue
            residual = log_sub(item.lhs, log_C + scaled(exponent, item.rhs))
            if residual is not None and (worst is None or residual > worst):
                worst = residual
    return worst


def fit_exponent(levels: Sequence[Sequence[EvidenceItem]], exponents: Iterable[int],
                 with_offset: bool = True, run: Optional[int] = None, min_levels: int = 3) -> ExponentFit:
    """
    Fit the smallest exponent and least constants to levelled evidence.

    Args:
        levels: Evidence items grouped by level, in increasing order
        exponents: Candidate exponents, tried in order
        with_offset (bool): Allow an additive constant D
        run (int): Consecutive increases that count as growth, config.VIOLATION_RUN by default
        min_levels (int): Fewer non-empty levels than this is inconclusive

    Returns:
        ExponentFit: Fitted constants, or a growth witness, or undecided
    """
    run = config.VIOLATION_RUN if run is None else run
    levels = [list(items) for items in levels if items]
    candidates = list(exponents)
    if len(levels) < min_levels:
        return ExponentFit("undecided", with_offset=with_offset, levels=len(levels),
                           reason=f"only {len(levels)} levels of evidence")
    if any(i.weight != 1.0 for items in levels for i in items) and with_offset:
        raise ValueError("Offsets are only defined for unweighted evidence")

    effective_run = min(run, len(levels) - 1)
    last_required: List[float] = []
    for e in candidates:
        required, bases, unbounded = _level_requirements(levels, e)
        last_required = required
        if unbounded and not with_offset:
            continue
        if _tail_growth(required, bases, effective_run):
            continue
        finite = [v for v in required if math.isfinite(v)]
        if with_offset:
            tail = [v for v in required[len(required) // 2:] if math.isfinite(v)]
            log_C = max([0.0] + tail)
            log_D = _log_offset(levels, e, log_C)
        else:
            log_C = max([0.0] + finite)
            log_D = None
        return ExponentFit("fit", exponent=e, log_C=log_C, log_D=log_D, with_offset=with_offset,
                           required=required, levels=len(levels))

    if not candidates:
        return ExponentFit("undecided", with_offset=with_offset, levels=len(levels), reason="no exponents to try")
    if len(levels) < run + 1:
        return ExponentFit("undecided", with_offset=with_offset, required=last_required, levels=len(levels),
                           reason=f"growth seen over fewer than {run + 1} levels")
    return _growth_witness(levels, candidates[-1], last_required, with_offset)


def _growth_witness(levels, exponent, required, with_offset) -> ExponentFit:
    last = max(j for j, v in enumerate(required) if math.isfinite(v))
    prefix = [v for v in required[:last] if math.isfinite(v)]
    log_C = max(prefix) if prefix else NEG_INF
    log_D = _log_offset(levels[:last], exponent, log_C) if with_offset else None
    worst = max(levels[last], key=lambda i: _finite_or_floor(required_log_constant(i, exponent)))

    bound = worst.weight * log_C + scaled(exponent, worst.rhs)
    if log_D is not None:
        bound = log_add(bound, log_D)
    strict = worst.lhs > bound + _EPS * max(1.0, abs(bound))
    witness = {
        "exponent": exponent,
        "level": last,
        "item": worst.tag,
        "lhs_log": finite_or_none(worst.lhs),
        "bound_log": finite_or_none(bound),
        "prefix_log_C": finite_or_none(log_C),
        "prefix_log_D": finite_or_none(log_D),
        "required_log_C_tail": [finite_or_none(v) for v in required[-(config.VIOLATION_RUN + 1):]],
    }
    if not strict:
        return ExponentFit("undecided", with_offset=with_offset, required=required, witness=witness,
                           levels=len(levels), reason="growth without a strictly violating element")
    return ExponentFit("growth", with_offset=with_offset, required=required, witness=witness, levels=len(levels))
