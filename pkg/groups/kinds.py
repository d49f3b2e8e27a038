"""
Group kinds and the group-spec mini-language.

    z:d      free abelian group Z^d (z alone means z:1)
    r:d      real vector group R^d under addition
    heis     integer Heisenberg group, heis:r for real entries
    free:k   free group on k letters
    qinf     multiplicative group of finitely supported positive rational sequences
    qsum     additive group of finitely supported rational sequences
    axb      ax+b group, elements [[e^a, b], [0, 1]]
    sl2      SL(2, R)
    gl:n     GL(n, R)
    unip:q   integer unipotent upper-triangular q x q matrices
"""
import math
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

import config
from groups.elements import Element, GeneratingSet
from utils.errors import (
    CanonicalFormError,
    GroupMismatchError,
    GroupSpecError,
    NumericRangeError,
    UnsupportedOperationError,
)
from utils.logger import get_logger

logger = get_logger("groups")

_SPLIT = re.compile(r"[\s,;()\[\]{}]+")


def _tokens(text: str) -> List[str]:
    return [t for t in _SPLIT.split(text.strip()) if t]


def _to_int(token: Any) -> int:
    if isinstance(token, bool):
        raise CanonicalFormError(f"Not an integer: {token!r}")
    if isinstance(token, int):
        return token
    if isinstance(token, Fraction):
        if token.denominator != 1:
            raise CanonicalFormError(f"Not an integer: {token}")
        return int(token)
    if isinstance(token, float):
        if not token.is_integer():
            raise CanonicalFormError(f"Not an integer: {token}")
        return int(token)
    try:
        return int(str(token))
    except ValueError:
        raise CanonicalFormError(f"Not an integer: {token!r}")


def _to_float(token: Any) -> float:
    try:
        value = float(Fraction(token)) if isinstance(token, str) and "/" in token else float(token)
    except (TypeError, ValueError):
        raise CanonicalFormError(f"Not a number: {token!r}")
    if not math.isfinite(value):
        raise NumericRangeError(f"Non-finite entry {value}")
    return value


def _to_fraction(token: Any) -> Fraction:
    if isinstance(token, tuple) and len(token) == 2:
        num, den = token
        if den == 0:
            raise CanonicalFormError("Zero denominator")
        return Fraction(_to_int(num), _to_int(den))
    try:
        return Fraction(token)
    except (TypeError, ValueError, ZeroDivisionError):
        raise CanonicalFormError(f"Not a rational: {token!r}")


def format_number(value: Any) -> str:
    """Format a payload number; floats keep 17 significant digits."""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _format_matrix(rows: Sequence[Sequence[Any]]) -> str:
    return "[" + ",".join("[" + ",".join(format_number(x) for x in row) + "]" for row in rows) + "]"


@dataclass(frozen=True)
class GroupSpec(ABC):
    """
    A group kind with its parameters.

    Concrete kinds implement the group law on canonical payloads and the text
    form of their elements. Everything else in gaugelab only talks to groups
    through this interface.
    """

    kind = ""

    @property
    def discrete(self) -> bool:
        return True

    @property
    def spec(self) -> str:
        """The mini-language string for this group."""
        return self.kind

    def __str__(self) -> str:
        return self.spec

    @abstractmethod
    def identity(self) -> Element:
        """Return the identity element."""

    @abstractmethod
    def _multiply(self, g: Element, h: Element) -> Element:
        """Group law on canonical elements."""

    @abstractmethod
    def _inverse(self, g: Element) -> Element:
        """Inverse of a canonical element."""

    @abstractmethod
    def _canonical(self, payload: Any) -> Tuple[Any, ...]:
        """Canonical payload for raw data."""

    @abstractmethod
    def parse_element(self, text: str) -> Element:
        """Parse the text form of an element."""

    @abstractmethod
    def format_element(self, g: Element) -> str:
        """Text form of an element, parseable by parse_element."""

    def multiply(self, g: Element, h: Element) -> Element:
        self._check(g)
        self._check(h)
        return self._multiply(g, h)

    def inverse(self, g: Element) -> Element:
        self._check(g)
        return self._inverse(g)

    def product(self, elements: Iterable[Element]) -> Element:
        return reduce(self.multiply, elements, self.identity())

    def canonical_form(self, raw: Any) -> Element:
        """
        Canonical element for raw data.

        Args:
            raw: An Element of this kind, or payload data (tuple, list, dict, matrix)

        Returns:
            Element: Canonical element
        """
        if isinstance(raw, Element):
            if raw.kind != self.kind:
                raise GroupMismatchError(f"Element of kind {raw.kind} passed to group {self.spec}")
            raw = raw.payload
        return Element(self.kind, self._canonical(raw))

    def equals(self, g: Element, h: Element) -> bool:
        return g == h

    def sort_key(self, g: Element) -> Any:
        return g.payload

    def basis(self) -> GeneratingSet:
        """The declared (unsymmetrized) generators words refer to."""
        raise UnsupportedOperationError(f"{self.spec} has no standard generating set")

    def standard_generators(self) -> GeneratingSet:
        """The declared generators closed under inverses."""
        return symmetrize(self, self.basis(), standard=True)

    def word_length(self, g: Element) -> Optional[int]:
        """Closed-form word length for the standard generators, when the kind has one."""
        return None

    def matrix(self, g: Element) -> np.ndarray:
        raise UnsupportedOperationError(f"{self.spec} is not a matrix group")

    def from_matrix(self, m: np.ndarray) -> Element:
        raise UnsupportedOperationError(f"{self.spec} is not a matrix group")

    def _check(self, g: Element) -> None:
        if g.kind != self.kind:
            raise GroupMismatchError(f"Element of kind {g.kind} passed to group {self.spec}")


@dataclass(frozen=True)
class IntegerLattice(GroupSpec):
    """Z^d under addition."""
    dim: int = 1
    kind = "z"

    @property
    def spec(self) -> str:
        return "z" if self.dim == 1 else f"z:{self.dim}"

    def identity(self) -> Element:
        return Element(self.kind, (0,) * self.dim)

    def _multiply(self, g, h):
        return Element(self.kind, tuple(x + y for x, y in zip(g.payload, h.payload)))

    def _inverse(self, g):
        return Element(self.kind, tuple(-x for x in g.payload))

    def _canonical(self, payload):
        if isinstance(payload, (int, np.integer)):
            payload = (int(payload),)
        values = tuple(_to_int(x) for x in payload)
        if len(values) != self.dim:
            raise CanonicalFormError(f"Expected {self.dim} coordinates, got {len(values)}")
        return values

    def parse_element(self, text):
        try:
            return self.canonical_form([int(t) for t in _tokens(text)])
        except ValueError:
            raise GroupSpecError(f"Bad element for {self.spec}: {text!r}")

    def format_element(self, g):
        if self.dim == 1:
            return str(g.payload[0])
        return "(" + ",".join(str(x) for x in g.payload) + ")"

    def basis(self):
        unit = [tuple(1 if j == i else 0 for j in range(self.dim)) for i in range(self.dim)]
        return GeneratingSet(tuple(Element(self.kind, u) for u in unit))

    def word_length(self, g):
        return sum(abs(x) for x in g.payload)


@dataclass(frozen=True)
class RealVector(GroupSpec):
    """R^d under addition."""
    dim: int = 1
    kind = "r"

    @property
    def discrete(self):
        return False

    @property
    def spec(self):
        return f"r:{self.dim}"

    def identity(self):
        return Element(self.kind, (0.0,) * self.dim)

    def _multiply(self, g, h):
        return Element(self.kind, tuple(x + y for x, y in zip(g.payload, h.payload)))

    def _inverse(self, g):
        return Element(self.kind, tuple(-x for x in g.payload))

    def _canonical(self, payload):
        if isinstance(payload, (int, float, np.floating, np.integer)):
            payload = (payload,)
        values = tuple(_to_float(x) for x in payload)
        if len(values) != self.dim:
            raise CanonicalFormError(f"Expected {self.dim} coordinates, got {len(values)}")
        return values

    def parse_element(self, text):
        return self.canonical_form(_tokens(text))

    def format_element(self, g):
        if self.dim == 1:
            return format_number(g.payload[0])
        return "(" + ",".join(format_number(x) for x in g.payload) + ")"

    def equals(self, g, h):
        return bool(np.allclose(g.payload, h.payload, rtol=config.GROUP_TOL, atol=config.GROUP_TOL))


@dataclass(frozen=True)
class Heisenberg(GroupSpec):
    """
    Heisenberg group of matrices [[1, a, b], [0, 1, c], [0, 0, 1]].

    (a, b, c)(a', b', c') = (a + a', b + b' + a c', c + c'). The standard
    generators are x = (1, 0, 0) and z = (0, 0, 1); their commutator is the
    central y = (0, 1, 0).
    """
    real: bool = False
    kind = "heis"

    @property
    def discrete(self):
        return not self.real

    @property
    def spec(self):
        return "heis:r" if self.real else "heis"

    def identity(self):
        zero = 0.0 if self.real else 0
        return Element(self.kind, (zero, zero, zero))

    def _multiply(self, g, h):
        a, b, c = g.payload
        a2, b2, c2 = h.payload
        return Element(self.kind, (a + a2, b + b2 + a * c2, c + c2))

    def _inverse(self, g):
        a, b, c = g.payload
        return Element(self.kind, (-a, -b + a * c, -c))

    def _canonical(self, payload):
        values = tuple(payload)
        if len(values) != 3:
            raise CanonicalFormError(f"Heisenberg elements have 3 coordinates, got {len(values)}")
        convert = _to_float if self.real else _to_int
        return tuple(convert(x) for x in values)

    def parse_element(self, text):
        return self.canonical_form(_tokens(text))

    def format_element(self, g):
        return "(" + ",".join(format_number(x) for x in g.payload) + ")"

    def equals(self, g, h):
        if not self.real:
            return g == h
        return bool(np.allclose(g.payload, h.payload, rtol=config.GROUP_TOL, atol=config.GROUP_TOL))

    def basis(self):
        one = 1.0 if self.real else 1
        zero = 0.0 if self.real else 0
        return GeneratingSet((
            Element(self.kind, (one, zero, zero)),
            Element(self.kind, (zero, zero, one)),
        ))

    def matrix(self, g):
        a, b, c = g.payload
        return np.array([[1.0, a, b], [0.0, 1.0, c], [0.0, 0.0, 1.0]])

    def from_matrix(self, m):
        return self.canonical_form((m[0, 1], m[0, 2], m[1, 2]))


@dataclass(frozen=True)
class FreeGroup(GroupSpec):
    """
    Free group on `rank` letters.

    Text form: lowercase letters are generators, uppercase their inverses,
    "1" is the identity. Payloads are reduced words of signed indices.
    """
    rank: int = 2
    kind = "free"

    @property
    def spec(self):
        return f"free:{self.rank}"

    def identity(self):
        return Element(self.kind, ())

    @staticmethod
    def _reduce(letters: Iterable[int]) -> Tuple[int, ...]:
        stack: List[int] = []
        for letter in letters:
            if stack and stack[-1] == -letter:
                stack.pop()
            else:
                stack.append(letter)
        return tuple(stack)

    def _multiply(self, g, h):
        return Element(self.kind, self._reduce(g.payload + h.payload))

    def _inverse(self, g):
        return Element(self.kind, tuple(-x for x in reversed(g.payload)))

    def _canonical(self, payload):
        if isinstance(payload, str):
            return self.parse_element(payload).payload
        letters = []
        for x in payload:
            letter = _to_int(x)
            if letter == 0 or abs(letter) > self.rank:
                raise CanonicalFormError(f"Letter {letter} outside free group of rank {self.rank}")
            letters.append(letter)
        return self._reduce(letters)

    def parse_element(self, text):
        text = text.strip()
        if text in ("", "1"):
            return self.identity()
        letters = []
        for ch in text:
            if not ch.isalpha():
                raise GroupSpecError(f"Bad letter {ch!r} in free group word {text!r}")
            index = ord(ch.lower()) - ord("a") + 1
            if index > self.rank:
                raise GroupSpecError(f"Letter {ch!r} outside free group of rank {self.rank}")
            letters.append(index if ch.islower() else -index)
        return Element(self.kind, self._reduce(letters))

    def format_element(self, g):
        if not g.payload:
            return "1"
        return "".join(
            chr(ord("a") + abs(x) - 1) if x > 0 else chr(ord("A") + abs(x) - 1)
            for x in g.payload
        )

    def sort_key(self, g):
        return (len(g.payload), g.payload)

    def basis(self):
        return GeneratingSet(tuple(Element(self.kind, (i,)) for i in range(1, self.rank + 1)))

    def word_length(self, g):
        return len(g.payload)


class _SparseRational(GroupSpec):
    """Shared parsing for finitely supported rational sequences, indexed from 1."""

    neutral = Fraction(0)

    def _canonical(self, payload):
        if isinstance(payload, str):
            return self.parse_element(payload).payload
        if isinstance(payload, dict):
            items = payload.items()
        else:
            items = payload
        entries: Dict[int, Fraction] = {}
        for index, value in items:
            i = _to_int(index)
            if i < 1:
                raise CanonicalFormError(f"Sequence indices start at 1, got {i}")
            if i in entries:
                raise CanonicalFormError(f"Index {i} given twice")
            entries[i] = self._check_value(_to_fraction(value))
        return tuple(sorted((i, v) for i, v in entries.items() if v != self.neutral))

    def _check_value(self, value: Fraction) -> Fraction:
        return value

    def parse_element(self, text):
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise GroupSpecError(f"Sequence elements are written {{i:value,...}}, got {text!r}")
        body = body[1:-1].strip()
        pairs = []
        if body:
            for part in body.split(","):
                if ":" not in part:
                    raise GroupSpecError(f"Bad entry {part!r} in {text!r}")
                index, value = part.split(":", 1)
                try:
                    pairs.append((int(index), Fraction(value.strip())))
                except (ValueError, ZeroDivisionError):
                    raise GroupSpecError(f"Bad entry {part!r} in {text!r}")
        return self.canonical_form(pairs)

    def format_element(self, g):
        return "{" + ",".join(f"{i}:{v}" for i, v in g.payload) + "}"

    def as_dict(self, g: Element) -> Dict[int, Fraction]:
        return dict(g.payload)


@dataclass(frozen=True)
class PositiveRationalSequences(_SparseRational):
    """Finitely supported sequences of positive rationals under entrywise product."""
    kind = "qinf"
    neutral = Fraction(1)

    def identity(self):
        return Element(self.kind, ())

    def _check_value(self, value):
        if value <= 0:
            raise CanonicalFormError(f"Entries must be positive rationals, got {value}")
        return value

    def _multiply(self, g, h):
        merged = dict(g.payload)
        for i, v in h.payload:
            merged[i] = merged.get(i, Fraction(1)) * v
        return Element(self.kind, tuple(sorted((i, v) for i, v in merged.items() if v != 1)))

    def _inverse(self, g):
        return Element(self.kind, tuple((i, 1 / v) for i, v in g.payload))

    def basis(self):
        raise GroupSpecError("qinf is not finitely generated; pass an inline generating set")


@dataclass(frozen=True)
class RationalSequences(_SparseRational):
    """Finitely supported rational sequences under addition."""
    kind = "qsum"
    neutral = Fraction(0)

    def identity(self):
        return Element(self.kind, ())

    def _multiply(self, g, h):
        merged = dict(g.payload)
        for i, v in h.payload:
            merged[i] = merged.get(i, Fraction(0)) + v
        return Element(self.kind, tuple(sorted((i, v) for i, v in merged.items() if v != 0)))

    def _inverse(self, g):
        return Element(self.kind, tuple((i, -v) for i, v in g.payload))

    def basis(self):
        raise GroupSpecError("qsum is not finitely generated; pass an inline generating set")


class _RealMatrixGroup(GroupSpec):
    """Shared tolerance equality and overflow checks for real matrix groups."""

    @property
    def discrete(self):
        return False

    def equals(self, g, h):
        return bool(np.allclose(g.payload, h.payload, rtol=config.GROUP_TOL, atol=config.GROUP_TOL))

    @staticmethod
    def _finite(values: Sequence[float]) -> Tuple[float, ...]:
        out = tuple(float(x) for x in values)
        if not all(math.isfinite(x) for x in out):
            raise NumericRangeError("Matrix entries left the floating point range")
        return out


@dataclass(frozen=True)
class AffineGroup(_RealMatrixGroup):
    """ax+b group: (a, b) is the matrix [[e^a, b], [0, 1]]."""
    kind = "axb"

    def identity(self):
        return Element(self.kind, (0.0, 0.0))

    def _multiply(self, g, h):
        a, b = g.payload
        a2, b2 = h.payload
        try:
            return Element(self.kind, self._finite((a + a2, b + math.exp(a) * b2)))
        except OverflowError:
            raise NumericRangeError(f"e^{a} overflows")

    def _inverse(self, g):
        a, b = g.payload
        try:
            return Element(self.kind, self._finite((-a, -math.exp(-a) * b)))
        except OverflowError:
            raise NumericRangeError(f"e^{-a} overflows")

    def _canonical(self, payload):
        values = tuple(payload)
        if len(values) != 2:
            raise CanonicalFormError(f"ax+b elements have 2 coordinates, got {len(values)}")
        return tuple(_to_float(x) for x in values)

    def parse_element(self, text):
        return self.canonical_form(_tokens(text))

    def format_element(self, g):
        return "(" + ",".join(format_number(x) for x in g.payload) + ")"

    def matrix(self, g):
        a, b = g.payload
        try:
            return np.array([[math.exp(a), b], [0.0, 1.0]])
        except OverflowError:
            raise NumericRangeError(f"e^{a} overflows")

    def from_matrix(self, m):
        if m[0, 0] <= 0 or abs(m[1, 0]) > config.GROUP_TOL or abs(m[1, 1] - 1.0) > config.GROUP_TOL:
            raise CanonicalFormError("Matrix is not of the form [[e^a, b], [0, 1]]")
        return self.canonical_form((math.log(m[0, 0]), m[0, 1]))


@dataclass(frozen=True)
class SpecialLinear2(_RealMatrixGroup):
    """SL(2, R); payload (e, f, g, h) is the matrix [[e, f], [g, h]]."""
    kind = "sl2"

    def identity(self):
        return Element(self.kind, (1.0, 0.0, 0.0, 1.0))

    def _multiply(self, x, y):
        e, f, g, h = x.payload
        e2, f2, g2, h2 = y.payload
        return Element(self.kind, self._finite((
            e * e2 + f * g2, e * f2 + f * h2,
            g * e2 + h * g2, g * f2 + h * h2,
        )))

    def _inverse(self, x):
        e, f, g, h = x.payload
        return Element(self.kind, (h, -f, -g, e))

    def _canonical(self, payload):
        values = tuple(np.asarray(payload, dtype=float).ravel())
        if len(values) != 4:
            raise CanonicalFormError(f"SL(2) elements have 4 entries, got {len(values)}")
        e, f, g, h = self._finite(values)
        scale = max(1.0, e * e + f * f + g * g + h * h)
        if abs(e * h - f * g - 1.0) > config.GROUP_TOL * scale:
            raise CanonicalFormError(f"Determinant {e * h - f * g} is not 1")
        return (e, f, g, h)

    def parse_element(self, text):
        try:
            return self.canonical_form([_to_float(t) for t in _tokens(text)])
        except CanonicalFormError:
            raise
        except ValueError:
            raise GroupSpecError(f"Bad SL(2) element {text!r}")

    def format_element(self, x):
        e, f, g, h = x.payload
        return _format_matrix([[e, f], [g, h]])

    def matrix(self, x):
        return np.array(x.payload, dtype=float).reshape(2, 2)

    def from_matrix(self, m):
        return self.canonical_form(np.asarray(m).ravel())


@dataclass(frozen=True)
class GeneralLinear(_RealMatrixGroup):
    """GL(n, R); payload is the row-major matrix."""
    n: int = 2
    kind = "gl"

    @property
    def spec(self):
        return f"gl:{self.n}"

    def identity(self):
        return Element(self.kind, tuple(np.eye(self.n).ravel().tolist()))

    def _multiply(self, g, h):
        return Element(self.kind, self._finite((self.matrix(g) @ self.matrix(h)).ravel()))

    def _inverse(self, g):
        return Element(self.kind, self._finite(np.linalg.inv(self.matrix(g)).ravel()))

    def _canonical(self, payload):
        values = self._finite(np.asarray(payload, dtype=float).ravel())
        if len(values) != self.n * self.n:
            raise CanonicalFormError(f"GL({self.n}) elements have {self.n * self.n} entries, got {len(values)}")
        sign, _ = np.linalg.slogdet(np.array(values).reshape(self.n, self.n))
        if sign == 0:
            raise CanonicalFormError("Singular matrix")
        return values

    def parse_element(self, text):
        return self.canonical_form([_to_float(t) for t in _tokens(text)])

    def format_element(self, g):
        return _format_matrix(self.matrix(g).tolist())

    def matrix(self, g):
        return np.array(g.payload, dtype=float).reshape(self.n, self.n)

    def from_matrix(self, m):
        return self.canonical_form(np.asarray(m).ravel())


@dataclass(frozen=True)
class UnipotentInteger(GroupSpec):
    """
    Integer unipotent upper-triangular q x q matrices.

    Standard generators are the elementary matrices I + E_{i,i+1}. For q = 3 the
    entries (0,1), (0,2), (1,2) are the Heisenberg coordinates (a, b, c).
    """
    q: int = 3
    kind = "unip"

    @property
    def spec(self):
        return f"unip:{self.q}"

    def _rows(self, g: Element) -> List[List[int]]:
        q = self.q
        return [list(g.payload[i * q:(i + 1) * q]) for i in range(q)]

    @staticmethod
    def _flatten(rows: List[List[int]]) -> Tuple[int, ...]:
        return tuple(x for row in rows for x in row)

    def _matmul(self, x: List[List[int]], y: List[List[int]]) -> List[List[int]]:
        q = self.q
        return [[sum(x[i][k] * y[k][j] for k in range(q)) for j in range(q)] for i in range(q)]

    def identity(self):
        q = self.q
        return Element(self.kind, self._flatten([[1 if i == j else 0 for j in range(q)] for i in range(q)]))

    def _multiply(self, g, h):
        return Element(self.kind, self._flatten(self._matmul(self._rows(g), self._rows(h))))

    def _inverse(self, g):
        # (I + N)^{-1} = sum_k (-N)^k, N nilpotent of order q
        q = self.q
        rows = self._rows(g)
        neg = [[-(rows[i][j] - (1 if i == j else 0)) for j in range(q)] for i in range(q)]
        total = self._rows(self.identity())
        power = self._rows(self.identity())
        for _ in range(q - 1):
            power = self._matmul(power, neg)
            total = [[total[i][j] + power[i][j] for j in range(q)] for i in range(q)]
        return Element(self.kind, self._flatten(total))

    def _canonical(self, payload):
        q = self.q
        values = [_to_int(x) for x in np.asarray(payload, dtype=object).ravel()]
        upper = q * (q - 1) // 2
        if len(values) == upper:
            it = iter(values)
            values = [1 if i == j else (next(it) if j > i else 0) for i in range(q) for j in range(q)]
        if len(values) != q * q:
            raise CanonicalFormError(f"unip:{q} elements have {q * q} entries (or {upper} above the diagonal)")
        for i in range(q):
            for j in range(q):
                x = values[i * q + j]
                if (i == j and x != 1) or (i > j and x != 0):
                    raise CanonicalFormError("Matrix is not unipotent upper-triangular")
        return tuple(values)

    def parse_element(self, text):
        try:
            return self.canonical_form([int(t) for t in _tokens(text)])
        except ValueError:
            raise GroupSpecError(f"Bad element for {self.spec}: {text!r}")

    def format_element(self, g):
        return _format_matrix(self._rows(g))

    def basis(self):
        q = self.q
        gens = []
        for i in range(q - 1):
            rows = self._rows(self.identity())
            rows[i][i + 1] = 1
            gens.append(Element(self.kind, self._flatten(rows)))
        return GeneratingSet(tuple(gens))

    def matrix(self, g):
        return np.array(g.payload, dtype=float).reshape(self.q, self.q)

    def from_matrix(self, m):
        return self.canonical_form(np.rint(np.asarray(m)).astype(int).ravel().tolist())

    def upper_entries(self, g: Element) -> List[int]:
        q = self.q
        return [g.payload[i * q + j] for i in range(q) for j in range(i + 1, q)]


def symmetrize(group: GroupSpec, generators: GeneratingSet, standard: bool = False) -> GeneratingSet:
    """
    Close a generating set under inverses, keeping declaration order.

    Args:
        group (GroupSpec): The group
        generators (GeneratingSet): Declared generators
        standard (bool): Mark the result as the kind's standard set

    Returns:
        GeneratingSet: Symmetric generating set; the identity stays only if declared
    """
    identity = group.identity()
    out: List[Element] = []
    has_identity = False
    for g in generators:
        for x in (g, group.inverse(g)):
            if group.equals(x, identity):
                if not has_identity:
                    has_identity = True
                    out.append(identity)
                continue
            if not any(group.equals(x, y) for y in out):
                out.append(x)
    return GeneratingSet(tuple(out), symmetric=True, contains_identity=has_identity, standard=standard)


_GROUP_SPEC = re.compile(r"^([a-z0-9]+)(?::([a-z0-9]+))?$")


def parse_group(text: str) -> GroupSpec:
    """
    Parse a group spec string.

    Args:
        text (str): e.g. "z:2", "heis", "free:2", "gl:3", "unip:3"

    Returns:
        GroupSpec: The parsed group
    """
    match = _GROUP_SPEC.match(text.strip().lower())
    if not match:
        raise GroupSpecError(f"Unrecognized group spec {text!r}")
    name, arg = match.groups()

    def size(default: Optional[int], minimum: int) -> int:
        if arg is None:
            if default is None:
                raise GroupSpecError(f"Group {name} needs a parameter, e.g. {name}:2")
            return default
        try:
            value = int(arg)
        except ValueError:
            raise GroupSpecError(f"Bad parameter {arg!r} for group {name}")
        if value < minimum:
            raise GroupSpecError(f"Parameter for {name} must be at least {minimum}")
        return value

    if name == "z":
        return IntegerLattice(size(1, 1))
    if name == "r":
        return RealVector(size(1, 1))
    if name == "heis":
        if arg not in (None, "r", "z"):
            raise GroupSpecError(f"Bad Heisenberg variant {arg!r}")
        return Heisenberg(real=(arg == "r"))
    if name == "free":
        rank = size(None, 1)
        if rank > 26:
            raise GroupSpecError("Free groups are limited to 26 letters")
        return FreeGroup(rank)
    if name == "qinf" and arg is None:
        return PositiveRationalSequences()
    if name == "qsum" and arg is None:
        return RationalSequences()
    if name == "axb" and arg is None:
        return AffineGroup()
    if name == "sl2" and arg is None:
        return SpecialLinear2()
    if name == "gl":
        return GeneralLinear(size(None, 1))
    if name == "unip":
        return UnipotentInteger(size(None, 2))
    raise GroupSpecError(f"Unrecognized group spec {text!r}")


def parse_generators(group: GroupSpec, text: Optional[str]) -> GeneratingSet:
    """
    Parse a generating set: "std" (or empty) for the standard set, otherwise
    element literals separated by ';'. Inline sets are symmetrized.
    """
    if text is None or text.strip() in ("", "std"):
        return group.standard_generators()
    elements = tuple(group.parse_element(part) for part in text.split(";") if part.strip())
    if not elements:
        raise GroupSpecError(f"Empty generating set {text!r}")
    logger.debug(f"Parsed {len(elements)} inline generators for {group.spec}")
    return symmetrize(group, GeneratingSet(elements))
