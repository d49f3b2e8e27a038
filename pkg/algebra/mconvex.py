"""
m-convexity of the weighted algebra, probed through norms of products of
delta functions.
"""
from typing import Optional

import config
from algebra.convolution import convolve_all, seminorm
from algebra.functions import WeightedFunction
from groups.elements import GeneratingSet
from groups.kinds import GroupSpec
from scales.fitting import fit_exponent
from scales.probes import chain_levels, generator_chains
from scales.report import ProbeReport, Verdict, report_from_fit
from scales.scale import Scale
from utils.errors import DomainError, GroupMismatchError, ScaleNotFoundError
from utils.logger import get_logger

logger = get_logger("algebra.mconvex")

M_CONVEX = "(‖δ_{g₁}*⋯*δ_{gₙ}‖₁ / (σ(g₁)⋯σ(gₙ))^k)^{1/n} ≤ C"

MIN_CHAIN_LENGTH = 4


def mconvexity_probe(scale: Scale, group: GroupSpec, n_max: int, k_max: Optional[int] = None,
                     generators: Optional[GeneratingSet] = None, samples: Optional[int] = None,
                     seed: int = 0) -> ProbeReport:
    """
    Probe m-convexity of ℓ¹(G, σ) with m = 1.

    For chains of generators the n-th root of
    ‖δ_{g₁}*⋯*δ_{gₙ}‖₁ / (σ(g₁)⋯σ(gₙ))^k must stay bounded; the smallest k
    that keeps it bounded and its bound C are reported. A scale taking
    values below 1 on the generators is replaced by 1 + σ first.

    Args:
        scale (Scale): σ on a discrete group
        group (GroupSpec): The group, must match the scale's
        n_max (int): Longest chain, at least 4
        k_max (int): Largest k tried
        generators (GeneratingSet): Letters of the chains, the standard set by default
        samples (int): Random chains per length beyond exhaustive listing
        seed (int): Seed for random chains

    Returns:
        ProbeReport: Constants (k, C), the chain whose root grows, or inconclusive
    """
    if scale.group != group:
        raise GroupMismatchError(f"Scale on {scale.group.spec} probed on {group.spec}")
    if not group.discrete:
        raise DomainError(f"m-convexity is probed on discrete groups, not {group.spec}")
    k_max = config.MAX_EXPONENT if k_max is None else k_max
    evidence = {"group": group.spec, "scale": scale.name, "n_max": n_max, "seed": seed}
    if n_max < MIN_CHAIN_LENGTH:
        return ProbeReport(probe="mconvex", condition=M_CONVEX, verdict=Verdict.INCONCLUSIVE,
                           evidence=evidence, notes=[f"chains shorter than {MIN_CHAIN_LENGTH}"])

    gens = list(generators if generators is not None else group.standard_generators())
    notes = []
    try:
        below_one = any(scale.log_value(u) < 0 for u in gens)
    except ScaleNotFoundError:
        below_one = False
    sigma = scale
    if below_one:
        sigma = scale.one_plus()
        notes.append(f"{scale.name} drops below 1 on the generators; probing 1+{scale.name}")
        logger.info(notes[-1])

    def product_log(chain) -> float:
        deltas = [WeightedFunction.delta(group, g, scale=sigma) for g in chain]
        return seminorm(convolve_all(deltas), 1).log_value

    chains = generator_chains(group, generators, n_max, samples, seed)
    levels, skipped = chain_levels(sigma, group, chains, product_log=product_log)
    fit = fit_exponent(levels, range(0, k_max + 1), with_offset=False)
    evidence.update({"chains": sum(len(c) for c in chains.values()), "skipped": skipped,
                     "normalized": below_one})
    return report_from_fit(fit, "mconvex", M_CONVEX, "k", evidence, notes)
