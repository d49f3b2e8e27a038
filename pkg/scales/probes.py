"""
Domination, translation and growth-condition probes for scales.
"""
import itertools
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

import config
from groups.ball import ShellTable
from groups.elements import Element, GeneratingSet
from groups.kinds import GroupSpec
from scales.fitting import EvidenceItem, fit_exponent
from scales.report import ProbeReport, Verdict, report_from_fit
from scales.scale import Scale
from utils.errors import DomainError, GroupMismatchError, ScaleNotFoundError
from utils.logdomain import log_one_plus
from utils.logger import get_logger

logger = get_logger("scales.probes")

DOMINATES = "σ₁(g) ≤ C·σ₂(g)^m + D"
STRONG_DOMINATES = "τ₁(g) ≤ C·τ₂(g) + D"
TRANSLATION = "σ(g⁻¹h) ≤ C·σ(h)^d + D for every shift g"
SUB_POLYNOMIAL = "σ(gh) ≤ C·(1+σ(g))^d·(1+σ(h))^d"
M_SUB_POLYNOMIAL = "σ(g₁⋯gₙ) ≤ Cⁿ·σ(g₁)^l⋯σ(gₙ)^l"


def _same_group(a: Scale, b: Scale) -> None:
    if a.group != b.group:
        raise GroupMismatchError(f"Scales on {a.group.spec} and {b.group.spec} cannot be compared")


def _table_evidence(domain: ShellTable) -> Dict:
    return {"group": domain.group.spec, "radius": domain.radius, "truncated": domain.truncated,
            "elements": domain.ball_sizes[-1]}


def _shell_levels(lhs: Scale, rhs: Scale, domain: ShellTable) -> List[List[EvidenceItem]]:
    fmt = domain.group.format_element
    return [[EvidenceItem(lhs.log_value(g), rhs.log_value(g), tag=fmt(g)) for g in shell.elements]
            for shell in domain.shells]


def dominates_probe(sigma1: Scale, sigma2: Scale, domain: ShellTable,
                    m_max: Optional[int] = None) -> ProbeReport:
    """
    Probe σ₁ ≼ σ₂: σ₁ ≤ C·σ₂^m + D with the smallest m, then least C.

    Args:
        sigma1 (Scale): Dominated scale
        sigma2 (Scale): Dominating scale
        domain (ShellTable): Ball the evidence comes from, one level per shell
        m_max (int): Largest exponent tried

    Returns:
        ProbeReport: Constants (m, C, D), or a growth witness
    """
    _same_group(sigma1, sigma2)
    m_max = config.MAX_EXPONENT if m_max is None else m_max
    fit = fit_exponent(_shell_levels(sigma1, sigma2, domain), range(0, m_max + 1))
    logger.debug(f"dominates {sigma1.name} <= {sigma2.name}: {fit.status}")
    return report_from_fit(fit, "dominates", DOMINATES, "m", _table_evidence(domain))


def strong_dominates_probe(tau1: Scale, tau2: Scale, domain: ShellTable) -> ProbeReport:
    """
    Probe τ₁ ≤ C·τ₂ + D.

    Args:
        tau1 (Scale): Dominated gauge
        tau2 (Scale): Dominating gauge
        domain (ShellTable): Ball the evidence comes from

    Returns:
        ProbeReport: Constants (C, D), or a growth witness
    """
    _same_group(tau1, tau2)
    fit = fit_exponent(_shell_levels(tau1, tau2, domain), [1])
    return report_from_fit(fit, "strong-dominates", STRONG_DOMINATES, "m", _table_evidence(domain))


def translation_equiv_probe(scale: Scale, shifts: Sequence[Element], domain: ShellTable,
                            m_max: Optional[int] = None) -> ProbeReport:
    """
    Probe σ_g ≼ σ for each shift g, where σ_g(h) = σ(g⁻¹h).

    Points where σ(g⁻¹h) cannot be evaluated (outside the ball) are skipped.
    The reported constants are the worst over the shifts: largest d, then C.

    Args:
        scale (Scale): The scale
        shifts (Sequence[Element]): Shifts g
        domain (ShellTable): Ball the evidence comes from
        m_max (int): Largest exponent d tried

    Returns:
        ProbeReport: Worst (d, C, D), or the first shift that fails
    """
    if not shifts:
        raise DomainError("translation_equiv_probe needs at least one shift")
    m_max = config.MAX_EXPONENT if m_max is None else m_max
    group = scale.group
    fmt = group.format_element
    per_shift = []
    worst: Optional[ProbeReport] = None
    undecided: Optional[ProbeReport] = None

    for shift in shifts:
        shifted = scale.translate(shift)
        levels, skipped = [], 0
        for shell in domain.shells:
            items = []
            for h in shell.elements:
                try:
                    items.append(EvidenceItem(shifted.log_value(h), scale.log_value(h), tag=fmt(h)))
                except ScaleNotFoundError:
                    skipped += 1
            levels.append(items)
        evidence = _table_evidence(domain)
        evidence.update({"shift": fmt(shift), "skipped": skipped})
        fit = fit_exponent(levels, range(0, m_max + 1))
        report = report_from_fit(fit, "translation-equiv", TRANSLATION, "d", evidence)
        if report.verdict == Verdict.VIOLATED:
            report.witness = dict(report.witness or {}, shift=fmt(shift))
            return report
        if report.verdict == Verdict.INCONCLUSIVE:
            undecided = undecided or report
            continue
        per_shift.append({"shift": fmt(shift), **report.constants})
        if worst is None or (report.constants["d"], report.constants["log_C"] or 0.0) > \
                (worst.constants["d"], worst.constants["log_C"] or 0.0):
            worst = report

    if undecided is not None:
        return undecided
    worst.evidence["per_shift"] = per_shift
    worst.evidence["shift"] = [fmt(s) for s in shifts]
    return worst


def sub_polynomial_probe(scale: Scale, domain: ShellTable, d_max: Optional[int] = None) -> ProbeReport:
    """
    Probe σ(gh) ≤ C(1+σ(g))^d(1+σ(h))^d over all pairs in the half-radius ball.

    Evidence levels are max(τ(g), τ(h)).

    Args:
        scale (Scale): The scale
        domain (ShellTable): Ball of radius R; pairs come from B_{R/2}
        d_max (int): Largest exponent tried

    Returns:
        ProbeReport: Constants (d, C), or a growth witness pair
    """
    d_max = config.MAX_EXPONENT if d_max is None else d_max
    group = domain.group
    fmt = group.format_element
    half = domain.radius // 2
    pool = domain.ball(half)
    log_sigma = {g: scale.log_value(g) for g in pool}
    log_one_plus_sigma = {g: log_one_plus(v) for g, v in log_sigma.items()}
    levels: List[List[EvidenceItem]] = [[] for _ in range(half + 1)]
    for g in pool:
        for h in pool:
            level = max(domain.lengths[g], domain.lengths[h])
            levels[level].append(EvidenceItem(
                scale.log_value(group.multiply(g, h)),
                log_one_plus_sigma[g] + log_one_plus_sigma[h],
                tag={"g": fmt(g), "h": fmt(h)},
            ))
    fit = fit_exponent(levels, range(0, d_max + 1), with_offset=False)
    evidence = _table_evidence(domain)
    evidence.update({"pair_radius": half, "pairs": len(pool) ** 2})
    return report_from_fit(fit, "subpoly", SUB_POLYNOMIAL, "d", evidence)


def generator_chains(group: GroupSpec, generators: Optional[GeneratingSet], n_max: int,
                     samples: Optional[int] = None, seed: int = 0) -> Dict[int, List[Tuple[Element, ...]]]:
    """
    Chains g₁,…,gₙ of generators for n = 1..n_max.

    Every chain is listed while |U|^n stays within CHAIN_EXHAUSTIVE_LIMIT;
    beyond that `samples` random chains are drawn, always together with
    the constant chains (u, u, …, u).

    Args:
        group (GroupSpec): The group
        generators (GeneratingSet): Letters, the standard set when None
        n_max (int): Longest chain
        samples (int): Random chains per length once exhaustive listing stops
        seed (int): Seed for the random chains

    Returns:
        Dict[int, List[Tuple[Element, ...]]]: Chains by length
    """
    gens = list(generators if generators is not None else group.standard_generators())
    samples = config.CHAIN_SAMPLES if samples is None else samples
    if samples > config.MAX_SAMPLES:
        raise DomainError(f"samples must not exceed {config.MAX_SAMPLES}")
    rng = np.random.default_rng(seed)
    chains: Dict[int, List[Tuple[Element, ...]]] = {}
    for n in range(1, n_max + 1):
        if len(gens) ** n <= config.CHAIN_EXHAUSTIVE_LIMIT:
            chains[n] = [tuple(c) for c in itertools.product(gens, repeat=n)]
            continue
        picked = [tuple(gens[i] for i in row) for row in rng.integers(0, len(gens), size=(samples, n))]
        picked.extend(tuple([u] * n) for u in gens)
        chains[n] = picked
    return chains


def chain_levels(scale: Scale, group: GroupSpec, chains: Dict[int, List[Tuple[Element, ...]]],
                 product_log=None) -> Tuple[List[List[EvidenceItem]], int]:
    """
    Evidence for Cⁿ-type bounds: one level per chain length n.

    Each chain contributes (log σ(g₁⋯gₙ), Σ log σ(gᵢ)) normalized by n; each
    product p also enters alone as the one-element chain (p), which is what
    rules out small exponents for unbounded scales.

    Args:
        scale (Scale): The scale
        group (GroupSpec): The group
        chains: Chains by length
        product_log (Callable): chain -> log of the left side, log σ(product) by default

    Returns:
        Tuple[levels, skipped]: Evidence and the number of chains outside the scale's domain
    """
    fmt = group.format_element
    cache: Dict[Element, float] = {}

    def log_sigma(g: Element) -> float:
        if g not in cache:
            cache[g] = scale.log_value(g)
        return cache[g]

    levels, skipped = [], 0
    for n in sorted(chains):
        items, seen = [], set()
        for chain in chains[n]:
            try:
                product = group.product(chain)
                lhs = product_log(chain) if product_log is not None else log_sigma(product)
                rhs = sum(log_sigma(g) for g in chain)
                single = log_sigma(product)
            except ScaleNotFoundError:
                skipped += 1
                continue
            items.append(EvidenceItem(lhs, rhs, weight=float(n), tag=";".join(fmt(g) for g in chain)))
            if product not in seen:
                seen.add(product)
                items.append(EvidenceItem(single, single, tag=fmt(product)))
        levels.append(items)
    return levels, skipped


def m_sub_polynomial_probe(scale: Scale, chain_len_max: int, l_max: Optional[int] = None,
                           generators: Optional[GeneratingSet] = None, samples: Optional[int] = None,
                           seed: int = 0) -> ProbeReport:
    """
    Probe σ(g₁⋯gₙ) ≤ Cⁿ∏σ(gᵢ)^l over chains of generators.

    Args:
        scale (Scale): The scale
        chain_len_max (int): Longest chain n
        l_max (int): Largest exponent l tried
        generators (GeneratingSet): Letters, the standard set when None
        samples (int): Random chains per length beyond exhaustive listing
        seed (int): Seed for random chains

    Returns:
        ProbeReport: Constants (l, C), or the chain whose n-th root keeps growing
    """
    if chain_len_max < 1:
        raise DomainError("chain_len_max must be at least 1")
    l_max = config.MAX_EXPONENT if l_max is None else l_max
    group = scale.group
    chains = generator_chains(group, generators, chain_len_max, samples, seed)
    levels, skipped = chain_levels(scale, group, chains)
    fit = fit_exponent(levels, range(0, l_max + 1), with_offset=False)
    evidence = {"group": group.spec, "chain_len_max": chain_len_max, "seed": seed,
                "chains": sum(len(c) for c in chains.values()), "skipped": skipped}
    return report_from_fit(fit, "msubpoly", M_SUB_POLYNOMIAL, "l", evidence)
