"""
The command table: one entry per subcommand, each dispatching to the module
operation it wraps.
"""
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import config
from adjoint import axb_decompose, bounds_ad_probe, sl2_scales, type_r_probe, unipotent_norm_bound
from algebra import (
    WeightedFunction,
    conv_bound_check,
    convolve,
    delta_power_ratio,
    divergence_partial_sums,
    involution,
    mconvexity_probe,
    seminorm,
    strong_tempered_comparison,
    strong_tempered_failure,
    tempered_action_demo,
)
from algebra.demos import DIVERGENCE_CASES
from algebra.mconvex import M_CONVEX
from cli.models import CommandRequest, ReportEnvelope
from cli.output import to_plain
from euclid import conv_power_bound_check
from euclid.powers import CONV_POWER_BOUND
from groups import ShellTable, ball_enumerate, parse_generators, parse_group, word_gauge
from groups.kinds import GroupSpec
from groups.sampling import SamplerSpec, draw
from growth import (
    growth_classify,
    growth_consistency_check,
    growth_report,
    growth_table,
    holder_embedding_check,
    integrability_sum,
)
from growth.integrability import HOLDER_EMBEDDING
from scales import (
    ProbeReport,
    Scale,
    check_axioms,
    dominates_probe,
    exp_bijection,
    gspace_check,
    gspace_from_name,
    induced_scale_eval,
    m_sub_polynomial_probe,
    normalize_gauge,
    parse_scale,
    strong_dominates_probe,
    sub_polynomial_probe,
    translation_equiv_probe,
    uniform_translation_probe,
    validate_action,
)
from scales.gspace import GSPACE_NAMES, INDUCED_SCALE, SCALED_SPACE, UNIFORM_TRANSLATION
from scales.probes import DOMINATES, M_SUB_POLYNOMIAL, STRONG_DOMINATES, SUB_POLYNOMIAL, TRANSLATION
from storage.data_manager import DataManager
from utils.errors import CommandError, ScaleNotFoundError
from utils.logger import get_logger

logger = get_logger("cli.commands")

PROBE_COLUMNS = ("probe", "verdict", "exponent", "C", "D", "log_C", "log_D", "witness")
FUNCTION_COLUMNS = ("element", "coefficient")


@dataclass(frozen=True)
class Flag:
    """A long command-line flag; `switch` flags take no value."""
    name: str
    type: Callable = str
    default: Any = None
    required: bool = False
    help: str = ""
    choices: Optional[Sequence[str]] = None
    switch: bool = False

    @property
    def dest(self) -> str:
        return self.name.replace("-", "_")


@dataclass
class CommandResult:
    """What a handler hands back to run_command."""
    payload: Dict[str, Any]
    rows: List[Dict[str, Any]] = field(default_factory=list)
    verdict: Optional[str] = None
    condition: Optional[str] = None


@dataclass(frozen=True)
class Command:
    name: str
    help: str
    handler: Callable[["CommandContext", CommandRequest], CommandResult]
    flags: Tuple[Flag, ...]
    columns: Tuple[str, ...] = PROBE_COLUMNS
    condition: Optional[str] = None


class CommandContext:
    """Shared state for one run: the data manager, created on first use."""

    def __init__(self, data_manager: Optional[DataManager] = None):
        self._data_manager = data_manager

    @property
    def data_manager(self) -> DataManager:
        if self._data_manager is None:
            self._data_manager = DataManager()
        return self._data_manager


# Flags shared by many commands
GROUP = Flag("group", required=True, help="group spec: z:d, r:d, heis, free:k, qinf, qsum, axb, sl2, gl:n, unip:q")
GENERATORS = Flag("generators", default="std", help="'std' or inline elements separated by ';'")
SCALE = Flag("scale", required=True, help="scale spec, e.g. word, word_pow:2, one_plus_abs, table:FILE")
SCALE2 = Flag("scale2", required=True, help="second scale spec")
RADIUS = Flag("radius", type=int, required=True, help="ball radius R")
SAMPLES = Flag("samples", type=int, required=True, help=f"random samples, at most {config.MAX_SAMPLES}")
PHI = Flag("phi", required=True, help="function literal '<element> <coefficient>; ...' or @FILE")

REQUEST_FIELDS = {"group", "generators", "scale", "scale2", "seed"}


def flag_value(request: CommandRequest, name: str) -> Any:
    """Value of a flag as stored in the request."""
    if name == "group":
        return request.group
    if name == "generators":
        return request.generators
    if name == "scale":
        return request.scales[0] if request.scales else None
    if name == "scale2":
        return request.scales[1] if len(request.scales) > 1 else None
    if name == "seed":
        return request.seed
    return request.params.get(name.replace("-", "_"))


def _param(request: CommandRequest, name: str, default: Any = None) -> Any:
    value = flag_value(request, name)
    return default if value is None else value


def _group(request: CommandRequest) -> GroupSpec:
    if not request.group:
        raise CommandError("--group is required")
    return parse_group(request.group)


def _custom_generators(request: CommandRequest) -> bool:
    return request.generators not in (None, "", "std")


def _ball(request: CommandRequest, group: GroupSpec, radius: int) -> ShellTable:
    generators = parse_generators(group, request.generators)
    return ball_enumerate(group, generators, radius, _param(request, "cap"))


def _scale(ctx: CommandContext, request: CommandRequest, group: GroupSpec, index: int = 0,
           table: Optional[ShellTable] = None, radius: Optional[int] = None) -> Scale:
    """Parse a scale; word scales without a closed form get a ball of the given radius."""
    if len(request.scales) <= index:
        raise CommandError("--scale is required" if index == 0 else "--scale2 is required")
    text = request.scales[index]
    loader = ctx.data_manager if text.strip().lower().startswith("table:") else None
    if table is None and radius is not None and _custom_generators(request):
        table = _ball(request, group, radius)
    try:
        return parse_scale(text, group, table, loader)
    except ScaleNotFoundError:
        if table is not None or radius is None:
            raise
        logger.info(f"{text} needs an enumerated ball; enumerating radius {radius}")
        return parse_scale(text, group, _ball(request, group, radius), loader)


def _function(ctx: CommandContext, request: CommandRequest, group: GroupSpec, name: str,
              scale: Optional[Scale] = None) -> WeightedFunction:
    text = _param(request, name)
    if text is None:
        raise CommandError(f"--{name} is required")
    if text.startswith("@"):
        pairs = ctx.data_manager.load_function_literal(text[1:])
    else:
        pairs = DataManager.parse_function_literal(text, source=f"--{name}")
    return WeightedFunction.parse(group, pairs, scale)


def _elements(group: GroupSpec, text: str) -> List:
    return [group.parse_element(part) for part in text.split(";") if part.strip()]


def _probe_result(report: ProbeReport, exponent: Optional[str] = None) -> CommandResult:
    payload = report.model_dump(mode="json")
    row = {"probe": report.probe, "verdict": report.verdict.value}
    row.update(payload["constants"])
    if exponent is not None:
        row["exponent"] = payload["constants"].get(exponent)
    if report.witness is not None:
        row["witness"] = json.dumps(payload["witness"], ensure_ascii=False)
    return CommandResult(payload=payload, rows=[row], verdict=report.verdict.value, condition=report.condition)


def _function_result(phi: WeightedFunction, extra: Optional[Dict[str, Any]] = None) -> CommandResult:
    records = phi.to_records()
    payload = {"group": phi.group.spec, "support": len(phi), "exact": phi.exact, "terms": records}
    payload.update(extra or {})
    return CommandResult(payload=payload, rows=records)


# Handlers, in the order of the help listing

def run_growth(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    report = growth_table(group, parse_generators(group, request.generators), _param(request, "radius"),
                          _param(request, "cap"))
    if _param(request, "classify", False):
        report = growth_classify(report)
    return CommandResult(payload=report.model_dump(mode="json"), rows=report.rows())


def run_gauge(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    g = group.parse_element(_param(request, "element"))
    table = _ball(request, group, _param(request, "radius"))
    n = word_gauge(table, g)
    payload = {"group": group.spec, "element": group.format_element(g), "radius": table.radius,
               "truncated": table.truncated, "word_length": n}
    if n is None:
        payload["notes"] = [f"not found within radius {table.radius}"]
        return CommandResult(payload=payload, rows=[{"element": payload["element"], "word_length": None}],
                             verdict="inconclusive")
    payload["geodesic_word"] = table.geodesic_word(g)
    return CommandResult(payload=payload, rows=[{"element": payload["element"], "word_length": n}])


def run_check_axioms(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    if group.discrete:
        domain = _ball(request, group, _param(request, "radius"))
        scale = _scale(ctx, request, group, table=domain)
    else:
        samples = _param(request, "samples")
        if samples is None:
            raise CommandError(f"--samples is required on the continuous group {group.spec}")
        domain = [g for _, g in draw(SamplerSpec(group, samples, request.seed))]
        scale = _scale(ctx, request, group)
    transform = _param(request, "transform", "none")
    if transform == "normalize":
        scale = normalize_gauge(scale)
    elif transform == "gauge-to-weight":
        scale = exp_bijection(scale, "gauge_to_weight")
    elif transform == "weight-to-gauge":
        scale = exp_bijection(scale, "weight_to_gauge")
    report = check_axioms(scale, _param(request, "kind"), domain, _param(request, "constant", 1.0))
    return _probe_result(report)


def run_dominates(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    table = _ball(request, group, _param(request, "radius"))
    report = dominates_probe(_scale(ctx, request, group, 0, table), _scale(ctx, request, group, 1, table),
                             table, _param(request, "mmax"))
    return _probe_result(report, "m")


def run_strong_dominates(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    table = _ball(request, group, _param(request, "radius"))
    report = strong_dominates_probe(_scale(ctx, request, group, 0, table), _scale(ctx, request, group, 1, table),
                                    table)
    return _probe_result(report, "m")


def run_translation_equiv(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    table = _ball(request, group, _param(request, "radius"))
    shifts_text = _param(request, "shifts")
    shifts = _elements(group, shifts_text) if shifts_text else list(table.generators)
    report = translation_equiv_probe(_scale(ctx, request, group, 0, table), shifts, table, _param(request, "mmax"))
    return _probe_result(report, "d")


def run_subpoly(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    table = _ball(request, group, _param(request, "radius"))
    report = sub_polynomial_probe(_scale(ctx, request, group, 0, table), table, _param(request, "dmax"))
    return _probe_result(report, "d")


def run_msubpoly(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    n_max = _param(request, "nmax")
    scale = _scale(ctx, request, group, radius=n_max)
    generators = parse_generators(group, request.generators) if _custom_generators(request) else None
    report = m_sub_polynomial_probe(scale, n_max, _param(request, "lmax"), generators,
                                    _param(request, "samples"), request.seed)
    return _probe_result(report, "l")


def run_mconvex(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    n_max = _param(request, "nmax")
    scale = _scale(ctx, request, group, radius=n_max)
    generators = parse_generators(group, request.generators) if _custom_generators(request) else None
    report = mconvexity_probe(scale, group, n_max, _param(request, "kmax"), generators,
                              _param(request, "samples"), request.seed)
    return _probe_result(report, "k")


def run_bounds_ad(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    sampler = SamplerSpec(group, _param(request, "samples"), request.seed)
    report = bounds_ad_probe(_scale(ctx, request, group), sampler, _param(request, "pmax"))
    return _probe_result(report, "p")


def run_type_r(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    sampler = SamplerSpec(group, _param(request, "samples"), request.seed)
    return _probe_result(type_r_probe(group, sampler, _param(request, "tol")))


def run_unipotent_bound(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    q = _param(request, "q")
    group = parse_group(f"unip:{q}")
    table = ball_enumerate(group, None, _param(request, "radius"), _param(request, "cap"))
    return _probe_result(unipotent_norm_bound(q, table, _param(request, "degree")), "k")


def run_axb_decompose(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = parse_group("axb")
    g = group.parse_element(_param(request, "element"))
    certificate = axb_decompose(tuple(g.payload))
    payload = certificate.to_dict()
    holds = certificate.inequality_holds and certificate.reconstructed
    row = {k: payload[k] for k in ("n_total", "n", "gamma", "log_lhs", "log_rhs", "inequality_holds")}
    return CommandResult(payload=payload, rows=[row], verdict="holds-on-evidence" if holds else "violated")


def run_sl2_scales(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = parse_group("sl2")
    g = group.parse_element(_param(request, "element"))
    sigma, theta = sl2_scales(g)
    payload = {"element": group.format_element(g), "sigma": sigma, "theta": theta}
    return CommandResult(payload=payload, rows=[{"sigma": sigma, "theta": theta}])


def _optional_scale(ctx: CommandContext, request: CommandRequest, group: GroupSpec) -> Optional[Scale]:
    if not request.scales:
        return None
    return _scale(ctx, request, group, radius=_param(request, "radius"))


def run_convolve(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    scale = _optional_scale(ctx, request, group)
    phi = _function(ctx, request, group, "phi", scale)
    psi = _function(ctx, request, group, "psi", scale)
    product = convolve(phi, psi)
    result = _function_result(product)
    cert = _param(request, "cert")
    if cert:
        if scale is None:
            raise CommandError("--cert needs --scale")
        try:
            c_text, d_text = cert.split(",")
            c, d = float(c_text), int(d_text)
        except ValueError:
            raise CommandError(f"--cert takes 'C,d', got {cert!r}")
        report = conv_bound_check(phi, psi, _param(request, "m", 0), (c, d))
        result.payload["bound_check"] = report.model_dump(mode="json")
        result.verdict = report.verdict.value
        result.condition = report.condition
    return result


def run_seminorm(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    scale = _scale(ctx, request, group, radius=_param(request, "radius"))
    phi = _function(ctx, request, group, "phi", scale)
    m = _param(request, "m")
    value = seminorm(phi, m)
    exact = str(value.exact) if value.exact is not None else None
    payload = {"group": group.spec, "scale": scale.name, "m": m, "log_value": value.log_value,
               "value": value.value, "exact": exact}
    return CommandResult(payload=payload, rows=[{"m": m, "log_value": value.log_value, "value": value.value,
                                                 "exact": exact}])


def run_involution(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    scale = _optional_scale(ctx, request, group)
    phi = _function(ctx, request, group, "phi", scale)
    star = involution(phi)
    extra: Dict[str, Any] = {"involutive": involution(star).equals(phi)}
    if scale is not None:
        m = _param(request, "m", 1)
        lhs = seminorm(star, m, scale)
        rhs = seminorm(phi, m, scale.reflect())
        extra.update({"m": m, "log_norm_star": lhs.log_value, "log_norm_reflected": rhs.log_value,
                      "isometric": lhs.exact == rhs.exact if lhs.exact is not None else
                      abs(lhs.log_value - rhs.log_value) <= 1e-12 * max(1.0, abs(rhs.log_value))})
    return _function_result(star, extra)


def run_delta_ratio(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    chain = _elements(group, _param(request, "chain"))
    if not chain:
        raise CommandError("--chain needs at least one element")
    scale = _scale(ctx, request, group, radius=_param(request, "radius", len(chain)))
    m, k = _param(request, "m", 1), _param(request, "k", 1)
    log_value = delta_power_ratio(scale, chain, m, k)
    payload = {"group": group.spec, "scale": scale.name, "chain": [group.format_element(g) for g in chain],
               "m": m, "k": k, "log_value": log_value}
    return CommandResult(payload=payload, rows=[{"n": len(chain), "m": m, "k": k, "log_value": log_value}])


def run_diverge_demo(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    table = divergence_partial_sums(_param(request, "case"), _param(request, "M"))
    return CommandResult(payload=table.to_dict(), rows=table.rows)


def run_tempered_demo(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    q, n = Fraction(_param(request, "q")), _param(request, "n")
    demo = tempered_action_demo(q, n)
    payload = demo.to_dict()
    d, c = _param(request, "d"), _param(request, "C")
    if d is not None and c is not None:
        payload["strong_comparison"] = strong_tempered_comparison(q, n, d, Fraction(c))
        payload["first_failure"] = strong_tempered_failure(n, d, Fraction(c))
    row = {k: payload[k] for k in ("q", "n", "norm", "expected", "norm_matches", "action_bound_holds")}
    return CommandResult(payload=payload, rows=[row])


def run_integrability(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    table = _ball(request, group, _param(request, "radius"))
    result = integrability_sum(_scale(ctx, request, group, 0, table), table, _param(request, "p"))
    growth = growth_classify(growth_report(table))
    consistency = growth_consistency_check(growth, result)
    payload = result.model_dump(mode="json")
    payload["growth"] = growth.model_dump(mode="json", exclude={"sphere_sizes", "ball_sizes"})
    payload["consistency"] = consistency.model_dump(mode="json")
    balls = table.ball_sizes
    rows = [{**row, "ball_size": balls[row["n"]]} for row in result.rows]
    return CommandResult(payload=payload, rows=rows, verdict=result.verdict.value,
                         condition="Σ σ(g)^{-p} < ∞")


def run_holder_check(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    group = _group(request)
    table = _ball(request, group, _param(request, "radius"))
    scale = _scale(ctx, request, group, 0, table)
    p = _param(request, "p")
    integrability = integrability_sum(scale, table, p)
    phi = _function(ctx, request, group, "phi", scale)
    report = holder_embedding_check(phi, _param(request, "m", 0), _param(request, "r", 2.0), p,
                                    integrability.bound if integrability.certified else None)
    result = _probe_result(report)
    result.payload["integrability"] = {"verdict": integrability.verdict.value, "bound": integrability.bound,
                                       "partial_sum": integrability.partial_sum}
    return result


def run_conv_power(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    report = conv_power_bound_check(_param(request, "n"), _param(request, "k", 2), _param(request, "dim", 1),
                                    _param(request, "grid"))
    result = _probe_result(report)
    result.rows = report.evidence["rows"]
    return result


def run_gspace_check(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    spec = gspace_from_name(_param(request, "space"), _param(request, "weight"), _param(request, "dim", 2))
    validate_action(spec, seed=request.seed)
    samples = _param(request, "samples")
    if _param(request, "mode", "scaled") == "uniform":
        report = uniform_translation_probe(spec, samples, request.seed, _param(request, "radius", 1.0))
        return _probe_result(report, "d")
    return _probe_result(gspace_check(spec, samples, request.seed, _param(request, "lmax")), "l")


def run_induced_scale(ctx: CommandContext, request: CommandRequest) -> CommandResult:
    spec = gspace_from_name(_param(request, "space", "rotate-circle"), _param(request, "weight"))
    if spec.ambient is None:
        raise CommandError(f"{spec.name} has no ambient group to induce to")
    g = spec.ambient.parse_element(_param(request, "g"))
    value = induced_scale_eval(spec, (g, _param(request, "point")), _param(request, "window", 8))
    payload = {"space": spec.name, "g": spec.ambient.format_element(g), "point": _param(request, "point"),
               "log_value": value.log_value, "value": value.value,
               "minimizer": spec.group.format_element(value.minimizer), "window": value.window,
               "upper_bound": value.upper_bound}
    row = {k: payload[k] for k in ("log_value", "value", "minimizer", "window")}
    return CommandResult(payload=payload, rows=[row])


COMMANDS: Dict[str, Command] = {c.name: c for c in [
    Command("growth", "shell and ball sizes of a Cayley ball", run_growth,
            (GROUP, GENERATORS, RADIUS, Flag("cap", type=int, help="ball size cap"),
             Flag("classify", switch=True, help="fit polynomial or exponential growth")),
            ("n", "shell_size", "ball_size"), "|S_n|, |B_n| for n ≤ R"),
    Command("gauge", "word length of an element", run_gauge,
            (GROUP, GENERATORS, Flag("element", required=True),
             Flag("radius", type=int, default=16, help="search radius"), Flag("cap", type=int)),
            ("element", "word_length"), "τ_U(g) = min{n : g ∈ Uⁿ}"),
    Command("check-axioms", "gauge or weight axioms on a ball or a sample", run_check_axioms,
            (GROUP, GENERATORS, SCALE, Flag("kind", required=True, choices=("gauge", "weight")),
             Flag("radius", type=int, default=6), Flag("samples", type=int), Flag("constant", type=float, default=1.0),
             Flag("transform", default="none", choices=("none", "normalize", "gauge-to-weight", "weight-to-gauge")),
             Flag("cap", type=int)),
            PROBE_COLUMNS, "gauge: τ(gh) ≤ K(τ(g)+τ(h)); weight: ω(gh) ≤ ω(g)ω(h)"),
    Command("dominates", "σ₁ ≤ Cσ₂^m + D on a ball", run_dominates,
            (GROUP, GENERATORS, SCALE, SCALE2, RADIUS, Flag("mmax", type=int), Flag("cap", type=int)),
            PROBE_COLUMNS, DOMINATES),
    Command("strong-dominates", "τ₁ ≤ Cτ₂ + D on a ball", run_strong_dominates,
            (GROUP, GENERATORS, SCALE, SCALE2, RADIUS, Flag("cap", type=int)),
            PROBE_COLUMNS, STRONG_DOMINATES),
    Command("translation-equiv", "translates of σ dominated by σ", run_translation_equiv,
            (GROUP, GENERATORS, SCALE, RADIUS, Flag("shifts", help="elements separated by ';', generators by default"),
             Flag("mmax", type=int), Flag("cap", type=int)),
            PROBE_COLUMNS, TRANSLATION),
    Command("subpoly", "sub-polynomial product bound on a ball", run_subpoly,
            (GROUP, GENERATORS, SCALE, RADIUS, Flag("dmax", type=int), Flag("cap", type=int)),
            PROBE_COLUMNS, SUB_POLYNOMIAL),
    Command("msubpoly", "m-sub-polynomial chain bound", run_msubpoly,
            (GROUP, GENERATORS, SCALE, Flag("nmax", type=int, required=True), Flag("lmax", type=int),
             Flag("samples", type=int, help="random chains per length past exhaustive listing"), Flag("cap", type=int)),
            PROBE_COLUMNS, M_SUB_POLYNOMIAL),
    Command("mconvex-probe", "m-convexity of the weighted algebra", run_mconvex,
            (GROUP, GENERATORS, SCALE, Flag("nmax", type=int, required=True), Flag("kmax", type=int),
             Flag("samples", type=int, help="random chains per length past exhaustive listing"), Flag("cap", type=int)),
            PROBE_COLUMNS, M_CONVEX),
    Command("bounds-ad", "‖Ad_g‖ ≤ Cσ(g)^p + D on sampled elements", run_bounds_ad,
            (GROUP, SCALE, SAMPLES, Flag("pmax", type=int)),
            PROBE_COLUMNS, "‖Ad_g‖ ≤ C·σ(g)^p + D"),
    Command("type-r", "eigenvalues of Ad_g on the unit circle", run_type_r,
            (GROUP, SAMPLES, Flag("tol", type=float)),
            PROBE_COLUMNS, "|λ| = 1 for every eigenvalue λ of Ad_g"),
    Command("unipotent-bound", "entries of Ad on unipotent integer matrices", run_unipotent_bound,
            (Flag("q", type=int, required=True), RADIUS, Flag("degree", type=int), Flag("cap", type=int)),
            PROBE_COLUMNS, "‖Ad_g‖ ≤ C(1 + τ(g))^k + D"),
    Command("axb-decompose", "word-length bound for an ax+b element", run_axb_decompose,
            (Flag("element", required=True, help="'a,b'"),),
            ("n_total", "n", "gamma", "log_lhs", "log_rhs", "inequality_holds"),
            "e^{|a|+2n} ≤ (e(e−1))²ω(g)²"),
    Command("sl2-scales", "σ and θ of an SL(2,R) element", run_sl2_scales,
            (Flag("element", required=True, help="'a,b,c,d' row-major"),),
            ("sigma", "theta"), "e^{σ(g)} = θ(g)"),
    Command("convolve", "φ * ψ, with an optional seminorm bound check", run_convolve,
            (GROUP, PHI, Flag("psi", required=True, help="function literal or @FILE"),
             Flag("scale", help="scale spec for the bound check"), Flag("m", type=int, default=0),
             Flag("cert", help="'C,d' from a sub-polynomial probe"), Flag("radius", type=int, default=32)),
            FUNCTION_COLUMNS, "(φ*ψ)(g) = Σ_h φ(h)ψ(h⁻¹g)"),
    Command("seminorm", "‖φ‖_m = Σ σ(g)^m |φ(g)|", run_seminorm,
            (GROUP, SCALE, PHI, Flag("m", type=int, required=True), Flag("radius", type=int, default=32)),
            ("m", "log_value", "value", "exact"), "‖φ‖_m = Σ_g σ(g)^m |φ(g)|"),
    Command("involution", "φ*(g) = φ(g⁻¹)", run_involution,
            (GROUP, PHI, Flag("scale", help="scale for the isometry check"), Flag("m", type=int, default=1),
             Flag("radius", type=int, default=32)),
            FUNCTION_COLUMNS, "‖φ*‖^σ_m = ‖φ‖^{σ₋}_m"),
    Command("delta-ratio", "log ‖δ_{g₁}*⋯*δ_{gₙ}‖_m / (σ(g₁)⋯σ(gₙ))^k", run_delta_ratio,
            (GROUP, SCALE, Flag("chain", required=True, help="elements separated by ';'"),
             Flag("m", type=int, default=1), Flag("k", type=int, default=1), Flag("radius", type=int)),
            ("n", "m", "k", "log_value"), "‖δ_{g₁}*⋯*δ_{gₙ}‖_m = σ(g₁⋯gₙ)^m"),
    Command("diverge-demo", "partial sums of divergent convolutions", run_diverge_demo,
            (Flag("case", required=True, choices=DIVERGENCE_CASES), Flag("M", type=int, required=True)),
            ("m", "partial_sum", "log_term", "log_partial_sum"), "(ψ*ψ)(0) = Σ_m ψ(m)ψ(−m)"),
    Command("tempered-demo", "a tempered action that is not strongly tempered", run_tempered_demo,
            (Flag("q", required=True, help="rational q > 1"), Flag("n", type=int, required=True),
             Flag("d", type=int), Flag("C", help="rational constant of the strong bound")),
            ("q", "n", "norm", "expected", "norm_matches", "action_bound_holds"),
            "‖α_{q₁}(δ_{e₁})*⋯*α_{qₙ}(δ_{eₙ})‖₁ = (1+q)ⁿ"),
    Command("integrability", "Σ σ^{-p} over a ball with a tail certificate", run_integrability,
            (GROUP, GENERATORS, SCALE, RADIUS, Flag("p", type=float, required=True), Flag("cap", type=int)),
            ("n", "shell_size", "ball_size", "log_term", "log_partial_sum", "partial_sum"),
            "Σ σ(g)^{-p} < ∞"),
    Command("holder-check", "embedding estimate from a certified integrability sum", run_holder_check,
            (GROUP, GENERATORS, SCALE, PHI, RADIUS, Flag("p", type=float, required=True),
             Flag("m", type=int, default=0), Flag("r", type=float, default=2.0), Flag("cap", type=int)),
            PROBE_COLUMNS, HOLDER_EMBEDDING),
    Command("conv-power", "weighted norms of convolution powers of a bump on R^N", run_conv_power,
            (Flag("n", type=int, required=True), Flag("k", type=int, default=2), Flag("dim", type=int, default=1),
             Flag("grid", type=float, default=1 / 256, help="grid spacing h")),
            ("n", "log_norm", "log_error_budget", "log_bound", "log_root", "log_root_bound", "status"),
            CONV_POWER_BOUND),
    Command("gspace-check", "scaled G-space inequality on sampled pairs", run_gspace_check,
            (Flag("space", required=True, choices=GSPACE_NAMES), Flag("weight", required=True), SAMPLES,
             Flag("mode", default="scaled", choices=("scaled", "uniform")), Flag("lmax", type=int),
             Flag("radius", type=float, default=1.0, help="compact set radius in uniform mode"),
             Flag("dim", type=int, default=2, help="n for the GL spaces")),
            PROBE_COLUMNS, f"{SCALED_SPACE} (uniform mode: {UNIFORM_TRANSLATION})"),
    Command("induced-scale", "induced scale of a coset, bounded over a window", run_induced_scale,
            (Flag("space", default="rotate-circle", choices=GSPACE_NAMES), Flag("weight", required=True),
             Flag("g", required=True, help="element of the ambient group"), Flag("point", type=float, required=True),
             Flag("window", type=int, default=8)),
            ("log_value", "value", "minimizer", "window"), INDUCED_SCALE),
]}


def run_command(request: CommandRequest, context: Optional[CommandContext] = None) -> ReportEnvelope:
    """
    Run one subcommand.

    Args:
        request (CommandRequest): Parsed request
        context (CommandContext): Shared state, a fresh one by default

    Returns:
        ReportEnvelope: The report, ready for emit_report
    """
    command = COMMANDS.get(request.subcommand)
    if command is None:
        raise CommandError(f"Unknown command {request.subcommand!r}")
    missing = [f"--{flag.name}" for flag in command.flags if flag.required and flag_value(request, flag.name) is None]
    if missing:
        raise CommandError(f"{command.name}: missing {', '.join(missing)}")

    logger.info(f"Running {command.name}")
    start = time.perf_counter()
    result = command.handler(context or CommandContext(), request)
    elapsed = time.perf_counter() - start
    logger.info(f"{command.name} finished in {elapsed:.3f}s" + (f": {result.verdict}" if result.verdict else ""))

    return ReportEnvelope(
        command=command.name,
        request=request,
        verdict=result.verdict,
        condition=result.condition or command.condition,
        payload=to_plain(result.payload),
        columns=list(command.columns),
        table=[{k: v for k, v in to_plain(row).items() if k in command.columns} for row in result.rows],
        wall_time=elapsed,
    )
