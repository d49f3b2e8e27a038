"""
Adjoint representations of the supported matrix groups.

Ad_g(X) = g X g⁻¹, written in a fixed basis of the Lie algebra with the
images of the basis vectors as columns:

    axb      X1 = [[1, 0], [0, 0]], X2 = [[0, 1], [0, 0]]
    heis     e23, e13, e12
    sl2      h/2, e21, e12
    gl:n     E_ij, row-major
    unip:q   E_ij for i < j, row-major
"""
from dataclasses import dataclass
from typing import Callable, List, Tuple

import numpy as np
from scipy.linalg import expm

from groups.elements import Element
from groups.kinds import AffineGroup, GeneralLinear, GroupSpec, Heisenberg, SpecialLinear2, UnipotentInteger
from groups.sampling import random_element
from utils.errors import DomainError, NumericRangeError, UnsupportedOperationError
from utils.logger import get_logger

logger = get_logger("adjoint")


def _unit(n: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((n, n))
    m[i, j] = 1.0
    return m


def lie_basis(group: GroupSpec) -> Tuple[List[str], List[np.ndarray]]:
    """
    Labels and matrices of the Lie algebra basis Ad is written in.

    Args:
        group (GroupSpec): A supported matrix group

    Returns:
        Tuple[List[str], List[np.ndarray]]: Basis labels and matrices
    """
    if isinstance(group, AffineGroup):
        return ["X1", "X2"], [_unit(2, 0, 0), _unit(2, 0, 1)]
    if isinstance(group, Heisenberg):
        return ["e23", "e13", "e12"], [_unit(3, 1, 2), _unit(3, 0, 2), _unit(3, 0, 1)]
    if isinstance(group, SpecialLinear2):
        return ["h/2", "e21", "e12"], [np.diag([0.5, -0.5]), _unit(2, 1, 0), _unit(2, 0, 1)]
    if isinstance(group, GeneralLinear):
        n = group.n
        return ([f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)],
                [_unit(n, i, j) for i in range(n) for j in range(n)])
    if isinstance(group, UnipotentInteger):
        q = group.q
        pairs = [(i, j) for i in range(q) for j in range(i + 1, q)]
        return [f"E{i + 1}{j + 1}" for i, j in pairs], [_unit(q, i, j) for i, j in pairs]
    raise UnsupportedOperationError(f"No adjoint representation for {group.spec}")


def _gl_ad(m: np.ndarray) -> np.ndarray:
    return np.kron(m, np.linalg.inv(m).T)


def ad_matrix(group: GroupSpec, g: Element) -> np.ndarray:
    """
    Closed-form Ad_g.

    Column i holds the coordinates of g Xᵢ g⁻¹, so Ad_{gh} = Ad_g Ad_h. The
    sl2 matrix is the transpose of the row-wise form that lists the images
    of h/2, e21, e12 as rows; both have the same eigenvalues and norm.

    Args:
        group (GroupSpec): axb, heis, heis:r, sl2, gl:n or unip:q
        g (Element): Group element

    Returns:
        np.ndarray: q x q matrix, q the dimension of the Lie algebra
    """
    if isinstance(group, AffineGroup):
        a, b = g.payload
        return np.array([[1.0, 0.0], [-b, float(np.exp(a))]])
    if isinstance(group, Heisenberg):
        a, _, c = (float(x) for x in g.payload)
        return np.array([[1.0, 0.0, 0.0], [a, 1.0, -c], [0.0, 0.0, 1.0]])
    if isinstance(group, SpecialLinear2):
        e, f, g_, h = g.payload
        return np.array([
            [e * h + f * g_, 2 * f * h, -2 * e * g_],
            [g_ * h, h * h, -g_ * g_],
            [-e * f, -f * f, e * e],
        ])
    if isinstance(group, GeneralLinear):
        return _gl_ad(group.matrix(g))
    if isinstance(group, UnipotentInteger):
        q = group.q
        full = _gl_ad(group.matrix(g))
        keep = [i * q + j for i in range(q) for j in range(i + 1, q)]
        return full[np.ix_(keep, keep)]
    raise UnsupportedOperationError(f"No adjoint representation for {group.spec}")


def _coordinates(basis: List[np.ndarray]) -> Callable[[np.ndarray], np.ndarray]:
    stacked = np.column_stack([b.ravel() for b in basis])

    def coords(x: np.ndarray) -> np.ndarray:
        return np.linalg.lstsq(stacked, x.ravel(), rcond=None)[0]
    return coords


def ad_numeric(group: GroupSpec, g: Element, h: float = 1e-4) -> np.ndarray:
    """
    Ad_g by central differences of t -> g exp(t Xᵢ) g⁻¹.

    An oracle independent of ad_matrix; agrees with it to O(h²).

    Args:
        group (GroupSpec): A supported matrix group
        g (Element): Group element
        h (float): Step in (0, 1e-2]

    Returns:
        np.ndarray: q x q matrix in the basis of lie_basis
    """
    if not 0 < h <= 1e-2:
        raise DomainError(f"Finite difference step must lie in (0, 1e-2], got {h}")
    _, basis = lie_basis(group)
    m = group.matrix(g)
    m_inv = np.linalg.inv(m)
    coords = _coordinates(basis)
    columns = []
    for x in basis:
        plus = m @ expm(h * x) @ m_inv
        minus = m @ expm(-h * x) @ m_inv
        columns.append(coords((plus - minus) / (2 * h)))
    return np.column_stack(columns)


@dataclass(frozen=True)
class AdjointRep:
    """
    Ad of one group in the basis of lie_basis.

    Attributes:
        group (GroupSpec): The matrix group
        dim (int): Dimension q of the Lie algebra
        labels (tuple): Basis labels, in column order
        evaluate (Callable): g -> q x q matrix of Ad_g
    """
    group: GroupSpec
    dim: int
    labels: Tuple[str, ...]
    evaluate: Callable[[Element], np.ndarray]

    def __call__(self, g: Element) -> np.ndarray:
        return self.evaluate(g)


def adjoint_rep(group: GroupSpec) -> AdjointRep:
    """Closed-form Ad of a supported matrix group, with its basis labels."""
    labels, basis = lie_basis(group)
    return AdjointRep(group=group, dim=len(basis), labels=tuple(labels),
                      evaluate=lambda g: ad_matrix(group, g))


def ad_operator_norm(group: GroupSpec, g: Element) -> float:
    """‖Ad_g‖ in the operator 2-norm."""
    m = ad_matrix(group, g)
    if not np.all(np.isfinite(m)):
        raise NumericRangeError(f"Ad overflows at {group.format_element(g)}")
    return float(np.linalg.norm(m, 2))


def homomorphism_defect(group: GroupSpec, samples: int = 100, seed: int = 0, t: float = 1.0) -> float:
    """
    Largest relative ‖Ad_{gh} − Ad_g Ad_h‖ over seeded random pairs.

    Args:
        group (GroupSpec): A supported matrix group
        samples (int): Number of pairs
        seed (int): Seed
        t (float): Sampling magnitude

    Returns:
        float: Worst relative defect
    """
    rep = adjoint_rep(group)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        g = random_element(group, rng, t)
        h = random_element(group, rng, t)
        lhs = rep(group.multiply(g, h))
        rhs = rep(g) @ rep(h)
        scale = max(1.0, float(np.linalg.norm(rhs, 2)))
        worst = max(worst, float(np.linalg.norm(lhs - rhs, 2)) / scale)
    logger.debug(f"Ad homomorphism defect on {group.spec}: {worst:.3g}")
    return worst


def closed_form_defect(group: GroupSpec, samples: int = 100, seed: int = 0, h: float = 1e-4,
                       t: float = 1.0) -> float:
    """Largest ‖ad_matrix − ad_numeric‖ relative to ‖ad_matrix‖ over seeded samples."""
    rep = adjoint_rep(group)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        g = random_element(group, rng, t)
        exact = rep(g)
        approx = ad_numeric(group, g, h)
        worst = max(worst, float(np.linalg.norm(exact - approx, 2)) / max(1.0, float(np.linalg.norm(exact, 2))))
    return worst

