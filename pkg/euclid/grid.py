"""
Functions on R^N sampled on uniform grids, and their convolution by
quadrature.

Grid points are h·i for integer index vectors i; a GridFunction stores the
index of its lower corner, so the box of a convolution is the Minkowski sum
of the two boxes with no rounding.
"""
import math
from dataclasses import dataclass
from typing import Callable, Sequence, Tuple, Union

import numpy as np
from scipy import signal

import config
from utils.errors import DomainError
from utils.logdomain import log_sum
from utils.logger import get_logger

logger = get_logger("euclid")

_SPACING_TOL = 1e-12


def _transition(t: np.ndarray) -> np.ndarray:
    """e^{-1/t} for t > 0, 0 otherwise."""
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    positive = t > 0
    out[positive] = np.exp(-1.0 / t[positive])
    return out


def max_norm(x: np.ndarray) -> np.ndarray:
    """|x| = max |x_i| over the last axis."""
    return np.max(np.abs(np.asarray(x, dtype=float)), axis=-1)


def bump_eval(x: Union[float, Sequence[float], np.ndarray]) -> Union[float, np.ndarray]:
    """
    The fixed smooth bump ψ.

    With r = |x| (max-norm) and t = r − 1,

        ψ(x) = f(1 − t) / (f(1 − t) + f(t)),   f(s) = e^{-1/s} for s > 0, else 0,

    so ψ = 1 on r ≤ 1, ψ = 0 on r ≥ 2, ψ(r = 1.5) = 1/2 and ψ decreases
    in r in between. ψ is C^∞ and the transition is antisymmetric about
    r = 1.5, so ∫ψ = 3^N on R^N.

    Args:
        x: A point (scalar for N = 1), or an array of points along the last axis

    Returns:
        float or np.ndarray: ψ(x)
    """
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr.reshape(1, -1)
    t = max_norm(arr) - 1.0
    inner, outer = _transition(1.0 - t), _transition(t)
    values = inner / (inner + outer)
    if scalar or np.asarray(x).ndim == 1:
        return float(values[0])
    return values


@dataclass(frozen=True)
class WeightSpec:
    """δ_k(x) = e^{|x|^k}, |x| the max-norm, k an integer ≥ 2."""
    k: int

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 2:
            raise DomainError(f"Weight exponent must be an integer k ≥ 2, got {self.k}")

    def log_value(self, points: np.ndarray) -> np.ndarray:
        return max_norm(points) ** self.k


@dataclass(frozen=True, eq=False)
class GridFunction:
    """
    Samples of a real function on a box of the grid hZ^N.

    Attributes:
        h (float): Grid spacing
        origin (tuple): Integer index of the lower corner of the box
        values (np.ndarray): Samples, one array axis per dimension
    """
    h: float
    origin: Tuple[int, ...]
    values: np.ndarray

    @classmethod
    def sample(cls, fn: Callable[[np.ndarray], np.ndarray], h: float,
               lower: Sequence[float], upper: Sequence[float]) -> "GridFunction":
        """
        Sample fn at every grid point of the box [lower, upper].

        Args:
            fn: Takes an array of points (last axis = coordinates), returns their values
            h (float): Grid spacing, h > 0
            lower (Sequence[float]): Lower corner
            upper (Sequence[float]): Upper corner

        Returns:
            GridFunction: The samples
        """
        if not h > 0:
            raise DomainError(f"Grid spacing must be positive, got {h}")
        if len(lower) != len(upper) or not lower:
            raise DomainError("Box corners must have the same positive dimension")
        start = [math.ceil(a / h - _SPACING_TOL) for a in lower]
        stop = [math.floor(b / h + _SPACING_TOL) for b in upper]
        if any(b < a for a, b in zip(start, stop)):
            raise DomainError(f"Empty box [{lower}, {upper}] at spacing {h}")
        axes = [h * np.arange(a, b + 1) for a, b in zip(start, stop)]
        points = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
        values = np.asarray(fn(points), dtype=float).reshape(points.shape[:-1])
        return cls(h=h, origin=tuple(start), values=values)

    @property
    def dimension(self) -> int:
        return self.values.ndim

    @property
    def size(self) -> int:
        return int(self.values.size)

    @property
    def box(self) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
        lower = tuple(self.h * i for i in self.origin)
        upper = tuple(self.h * (i + n - 1) for i, n in zip(self.origin, self.values.shape))
        return lower, upper

    def points(self) -> np.ndarray:
        """Grid coordinates, shape values.shape + (N,)."""
        axes = [self.h * (i + np.arange(n)) for i, n in zip(self.origin, self.values.shape)]
        return np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)

    def mass(self) -> float:
        """∫f by the trapezoid rule."""
        return float(self.values.sum() * self.h ** self.dimension)

    def log_weighted_norm(self, weight: WeightSpec) -> float:
        """log ∫ δ_k |f|, evaluated in the log domain."""
        with np.errstate(divide="ignore"):
            logs = np.log(np.abs(self.values)) + weight.log_value(self.points())
        return log_sum(logs.ravel()) + self.dimension * math.log(self.h)


def grid_convolve(f: GridFunction, g: GridFunction) -> GridFunction:
    """
    (f * g)(x) = ∫ f(y) g(x − y) dy on the common grid.

    Every grid function here vanishes on its box boundary, where the
    trapezoid weights reduce to h^N, so the quadrature is the direct sum
    h^N Σ_i f(y_i) g(x − y_i).

    Args:
        f (GridFunction): Left factor
        g (GridFunction): Right factor, same spacing and dimension

    Returns:
        GridFunction: On the Minkowski sum of the boxes
    """
    if f.dimension != g.dimension:
        raise DomainError(f"Cannot convolve grid functions on R^{f.dimension} and R^{g.dimension}")
    if abs(f.h - g.h) > _SPACING_TOL * max(f.h, g.h):
        raise DomainError(f"Grid spacings differ: {f.h} and {g.h}")
    work = float(f.size) * float(g.size)
    if work > config.EUCLID_MAX_WORK:
        raise DomainError(f"Box overflow: direct convolution needs {work:.3g} operations, "
                          f"limit {config.EUCLID_MAX_WORK:.3g}; use a coarser grid")
    values = signal.convolve(f.values, g.values, mode="full", method="direct") * f.h ** f.dimension
    origin = tuple(a + b for a, b in zip(f.origin, g.origin))
    logger.debug(f"Convolved grids {f.values.shape} and {g.values.shape} at h = {f.h}")
    return GridFunction(h=f.h, origin=origin, values=values)
