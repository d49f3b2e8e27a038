"""
Scales, gauges and weights on groups.

A Scale maps group elements to positive reals. Values are carried in the
log domain; scales with rational values also expose them exactly so
seminorms and ratios of delta functions come out as exact equalities.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Optional

import numpy as np

from groups.ball import ShellTable
from groups.elements import Element
from groups.kinds import (
    AffineGroup,
    GeneralLinear,
    GroupSpec,
    Heisenberg,
    IntegerLattice,
    PositiveRationalSequences,
    RationalSequences,
    RealVector,
    SpecialLinear2,
)
from utils.errors import (
    DomainError,
    GroupMismatchError,
    GroupSpecError,
    NumericRangeError,
    ScaleNotFoundError,
    UnsupportedOperationError,
)
from utils.logdomain import NEG_INF, log_add, log_of, log_one_plus, log_sum, scaled
from utils.logger import get_logger

logger = get_logger("scales")

GAUGE = "gauge"
WEIGHT = "weight"
SCALE = "scale"

ExactFn = Callable[[Element], Fraction]


@dataclass(frozen=True, eq=False)
class Scale:
    """
    A named scale on a group.

    Attributes:
        name (str): Display name, the scale spec for built-ins
        kind (str): "gauge", "weight" or "scale"
        group (GroupSpec): Group the scale lives on
        log_fn (Callable): Element -> log σ(g), -inf where σ vanishes
        exact_fn (Callable): Element -> σ(g) as a Fraction, for rational-valued scales
        params (dict): Parameters of built-ins
    """
    name: str
    kind: str
    group: GroupSpec
    log_fn: Callable[[Element], float] = field(repr=False)
    exact_fn: Optional[ExactFn] = field(default=None, repr=False)
    params: Dict[str, Any] = field(default_factory=dict)

    def log_value(self, g: Element) -> float:
        return self.log_fn(g)

    def value(self, g: Element) -> float:
        """σ(g) as a float; inf when it overflows."""
        exact = self.exact_value(g)
        if exact is not None:
            return float(exact)
        lv = self.log_fn(g)
        return 0.0 if lv == NEG_INF else (math.exp(lv) if lv < 709.0 else math.inf)

    def exact_value(self, g: Element) -> Optional[Fraction]:
        return self.exact_fn(g) if self.exact_fn is not None else None

    @property
    def exact(self) -> bool:
        return self.exact_fn is not None

    def _derived(self, name: str, kind: str, log_fn, exact_fn=None) -> "Scale":
        return Scale(name=name, kind=kind, group=self.group, log_fn=log_fn, exact_fn=exact_fn)

    def _same_group(self, other: "Scale") -> None:
        if other.group != self.group:
            raise GroupMismatchError(f"Scales on {self.group.spec} and {other.group.spec} cannot be combined")

    def plus(self, other: "Scale") -> "Scale":
        """σ + ρ; the sum of two gauges is a gauge."""
        self._same_group(other)
        exact = None
        if self.exact and other.exact:
            exact = lambda g: self.exact_fn(g) + other.exact_fn(g)
        kind = GAUGE if self.kind == other.kind == GAUGE else SCALE
        return self._derived(f"({self.name}+{other.name})", kind,
                             lambda g: log_add(self.log_fn(g), other.log_fn(g)), exact)

    def times(self, other: "Scale") -> "Scale":
        """σ·ρ; the product of two weights is a weight."""
        self._same_group(other)
        exact = None
        if self.exact and other.exact:
            exact = lambda g: self.exact_fn(g) * other.exact_fn(g)
        kind = WEIGHT if self.kind == other.kind == WEIGHT else SCALE
        return self._derived(f"({self.name}*{other.name})", kind,
                             lambda g: self.log_fn(g) + other.log_fn(g), exact)

    def power(self, k: float) -> "Scale":
        """σ^k for k > 0."""
        if k <= 0:
            raise DomainError(f"Scale powers need k > 0, got {k}")
        exact = None
        if self.exact and float(k).is_integer():
            exact = lambda g: self.exact_fn(g) ** int(k)
        return self._derived(f"{self.name}^{k}", SCALE, lambda g: scaled(k, self.log_fn(g)), exact)

    def reflect(self) -> "Scale":
        """σ₋(g) = σ(g⁻¹)."""
        inv = self.group.inverse
        exact = (lambda g: self.exact_fn(inv(g))) if self.exact else None
        return self._derived(f"{self.name}-", self.kind, lambda g: self.log_fn(inv(g)), exact)

    def one_plus(self) -> "Scale":
        """1 + σ, a scale bounded below by 1."""
        exact = (lambda g: 1 + self.exact_fn(g)) if self.exact else None
        return self._derived(f"(1+{self.name})", SCALE, lambda g: log_one_plus(self.log_fn(g)), exact)

    def translate(self, g: Element) -> "Scale":
        """σ_g(h) = σ(g⁻¹h)."""
        g_inv = self.group.inverse(g)
        shift = lambda h: self.group.multiply(g_inv, h)
        exact = (lambda h: self.exact_fn(shift(h))) if self.exact else None
        return self._derived(f"{self.name}@{self.group.format_element(g)}", SCALE,
                             lambda h: self.log_fn(shift(h)), exact)


def eval_scale(scale: Scale, g: Element) -> float:
    """
    log σ(g).

    Args:
        scale (Scale): The scale
        g (Element): Element of the scale's group

    Returns:
        float: Natural log of σ(g)
    """
    return scale.log_value(g)


def _word_length_fn(group: GroupSpec, table: Optional[ShellTable]) -> Callable[[Element], int]:
    if table is not None and table.group != group:
        raise GroupMismatchError(f"Ball of {table.group.spec} used for a scale on {group.spec}")

    def length(g: Element) -> int:
        if table is not None:
            n = table.lengths.get(g)
            if n is not None:
                return n
        if table is None or table.standard:
            n = group.word_length(g)
            if n is not None:
                return n
        raise ScaleNotFoundError(f"{group.format_element(g)} is outside the enumerated ball")

    if table is None and not group.discrete:
        raise UnsupportedOperationError(f"Word scales need a discrete group, {group.spec} is continuous")
    if table is None and group.word_length(group.identity()) is None:
        raise ScaleNotFoundError(f"Word scales on {group.spec} need an enumerated ball")
    return length


def _vector(group: GroupSpec, name: str) -> Callable[[Element], Any]:
    if isinstance(group, (IntegerLattice, RealVector)):
        return lambda g: g.payload
    raise UnsupportedOperationError(f"Scale {name} is defined on z:d and r:d, not {group.spec}")


def _abs_exact(group: GroupSpec, fn: Callable[[Element], Fraction]) -> Optional[ExactFn]:
    return fn if isinstance(group, IntegerLattice) else None


def _singular_values(group: GroupSpec, g: Element) -> np.ndarray:
    s = np.linalg.svd(group.matrix(g), compute_uv=False)
    if s[-1] <= 0:
        raise DomainError("Singular matrix")
    return s


def _log_theta(group: GroupSpec, g: Element) -> float:
    s = _singular_values(group, g)
    return max(math.log(s[0]), -math.log(s[-1]))


def _superexp_log(n: int) -> float:
    try:
        return float(abs(n) ** abs(n))
    except OverflowError:
        raise NumericRangeError(f"|n|^|n| overflows at n={n}")


def _heis_s(g: Element) -> float:
    a, b, c = g.payload
    return abs(a) + abs(c) + math.sqrt(abs(b)) + math.sqrt(abs(b - c * a))


def _from_exact(name: str, kind: str, group: GroupSpec, exact: ExactFn, params=None) -> Scale:
    return Scale(name=name, kind=kind, group=group, log_fn=lambda g: log_of(exact(g)),
                 exact_fn=exact, params=dict(params or {}))


def _from_log(name: str, kind: str, group: GroupSpec, log_fn, params=None) -> Scale:
    return Scale(name=name, kind=kind, group=group, log_fn=log_fn, params=dict(params or {}))


def _parse_number(text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise GroupSpecError(f"Bad parameter {text!r} for scale {name}")


def parse_scale(text: str, group: GroupSpec, table: Optional[ShellTable] = None, data_manager=None) -> Scale:
    """
    Build a scale from its spec string.

    Args:
        text (str): Scale spec, e.g. "word", "word_pow:2", "one_plus_abs", "const:1", "table:path.txt"
        group (GroupSpec): Group the scale lives on
        table (ShellTable): Enumerated ball, needed by word-based scales on groups without closed-form lengths
        data_manager (DataManager): Loader for table: scales

    Returns:
        Scale: The scale
    """
    name, _, arg = text.strip().partition(":")
    name = name.lower()

    if name == "word":
        length = _word_length_fn(group, table)
        return _from_exact(text, GAUGE, group, lambda g: Fraction(length(g)))
    if name == "word_weight":
        length = _word_length_fn(group, table)
        return _from_log(text, WEIGHT, group, lambda g: float(length(g)))
    if name in ("word_pow", "exp_word_pow"):
        k = _parse_number(arg or "1", name)
        if k <= 0:
            raise GroupSpecError(f"{name} needs a positive power, got {k}")
        length = _word_length_fn(group, table)
        kind = WEIGHT if k == 1 else SCALE
        return _from_log(text, kind, group, lambda g: float(length(g) ** k), {"k": float(k)})

    if name in ("abs", "l1"):
        vec = _vector(group, name)
        exact = _abs_exact(group, lambda g: Fraction(sum(abs(x) for x in vec(g))))
        if exact:
            return _from_exact(text, GAUGE, group, exact)
        return _from_log(text, GAUGE, group, lambda g: log_of(sum(abs(x) for x in vec(g))))
    if name == "half_abs":
        vec = _vector(group, name)
        exact = _abs_exact(group, lambda g: Fraction(sum(abs(x) for x in vec(g)), 2))
        if exact:
            return _from_exact(text, GAUGE, group, exact)
        return _from_log(text, GAUGE, group, lambda g: log_of(sum(abs(x) for x in vec(g)) / 2))
    if name == "one_plus_abs":
        vec = _vector(group, name)
        exact = _abs_exact(group, lambda g: 1 + Fraction(sum(abs(x) for x in vec(g))))
        if exact:
            return _from_exact(text, WEIGHT, group, exact)
        return _from_log(text, WEIGHT, group, lambda g: math.log1p(sum(abs(x) for x in vec(g))))
    if name == "exp_abs":
        vec = _vector(group, name)
        return _from_log(text, WEIGHT, group, lambda g: float(sum(abs(x) for x in vec(g))))
    if name == "sqrt_abs":
        vec = _vector(group, name)
        return _from_log(text, GAUGE, group, lambda g: 0.5 * log_of(sum(abs(x) for x in vec(g))))
    if name == "abs_pow":
        p = _parse_number(arg or "1", name)
        if p <= 0:
            raise GroupSpecError(f"abs_pow needs a positive power, got {p}")
        vec = _vector(group, name)
        if isinstance(group, IntegerLattice) and p.denominator == 1:
            return _from_exact(text, SCALE, group, lambda g: Fraction(sum(abs(x) for x in vec(g))) ** int(p),
                               {"p": float(p)})
        return _from_log(text, SCALE, group, lambda g: float(p) * log_of(sum(abs(x) for x in vec(g))),
                         {"p": float(p)})
    if name == "coord_abs":
        vec = _vector(group, name)
        i = int(_parse_number(arg or "1", name))
        if not 1 <= i <= len(group.identity().payload):
            raise GroupSpecError(f"coord_abs index {i} outside 1..{len(group.identity().payload)}")
        if isinstance(group, IntegerLattice):
            return _from_exact(text, GAUGE, group, lambda g: Fraction(abs(vec(g)[i - 1])), {"i": i})
        return _from_log(text, GAUGE, group, lambda g: log_of(abs(vec(g)[i - 1])), {"i": i})
    if name == "const":
        c = _parse_number(arg or "1", name)
        if c <= 0:
            raise GroupSpecError(f"Constant scales must be positive, got {c}")
        kind = WEIGHT if c == 1 else SCALE
        return _from_exact(text, kind, group, lambda g: c, {"c": float(c)})
    if name == "superexp":
        if not isinstance(group, IntegerLattice) or group.dim != 1:
            raise UnsupportedOperationError(f"superexp is defined on z, not {group.spec}")
        return _from_log(text, SCALE, group, lambda g: _superexp_log(g.payload[0]))

    if name == "heis_s":
        if not isinstance(group, Heisenberg):
            raise UnsupportedOperationError(f"heis_s is defined on the Heisenberg group, not {group.spec}")
        return _from_log(text, SCALE, group, lambda g: log_of(_heis_s(g)))
    if name == "qinf_gamma":
        if not isinstance(group, PositiveRationalSequences):
            raise UnsupportedOperationError(f"qinf_gamma is defined on qinf, not {group.spec}")

        def gamma(g: Element) -> Fraction:
            out = Fraction(1)
            for _, q in g.payload:
                out *= max(q, 1 / q)
            return out
        return _from_exact(text, WEIGHT, group, gamma)
    if name == "qinf_omega":
        if not isinstance(group, RationalSequences):
            raise UnsupportedOperationError(f"qinf_omega is defined on qsum, not {group.spec}")

        def omega(g: Element) -> Fraction:
            out = Fraction(1)
            for _, r in g.payload:
                out *= 1 + abs(r)
            return out
        return _from_exact(text, WEIGHT, group, omega)

    if name == "gl_theta":
        if not isinstance(group, (GeneralLinear, SpecialLinear2)):
            raise UnsupportedOperationError(f"gl_theta is defined on gl:n and sl2, not {group.spec}")
        return _from_log(text, WEIGHT, group, lambda g: _log_theta(group, g))
    if name == "sl2_sigma":
        if not isinstance(group, (SpecialLinear2, GeneralLinear)):
            raise UnsupportedOperationError(f"sl2_sigma is defined on sl2 and gl:n, not {group.spec}")
        return _from_log(text, GAUGE, group, lambda g: log_of(_log_theta(group, g)))
    if name == "axb_omega":
        if not isinstance(group, AffineGroup):
            raise UnsupportedOperationError(f"axb_omega is defined on axb, not {group.spec}")

        def log_omega(g: Element) -> float:
            a, b = g.payload
            lb = log_of(abs(b))
            return log_sum([abs(a), lb - a, lb, 0.0])
        return _from_log(text, WEIGHT, group, log_omega)
    if name == "ad_norm":
        from adjoint.matrices import ad_operator_norm
        return _from_log(text, WEIGHT, group,
                         lambda g: math.log(max(ad_operator_norm(group, g), ad_operator_norm(group, group.inverse(g)))))

    if name == "table":
        if not arg:
            raise GroupSpecError("table scales need a path, table:PATH")
        if data_manager is None:
            from storage.data_manager import DataManager
            data_manager = DataManager()
        values = {group.parse_element(k): v for k, v in data_manager.load_scale_table(arg).items()}

        def lookup(g: Element) -> float:
            if g not in values:
                raise ScaleNotFoundError(f"{group.format_element(g)} is not in scale table {arg}")
            return values[g]
        logger.info(f"Loaded scale table {arg} with {len(values)} entries")
        return _from_log(text, SCALE, group, lookup, {"path": arg})

    raise GroupSpecError(f"Unknown scale {text!r}")
