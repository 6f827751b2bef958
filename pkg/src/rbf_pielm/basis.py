"""Gaussian radial basis functions and their exact partial derivatives.

Every matrix entry of the collocation system is a partial derivative of a
Gaussian kernel phi(x) = exp(-||x - c||^2 / (2 sigma^2)). The kernel is
separable, so a mixed partial of total order up to 4 is a product of two 1-D
Gaussian derivatives. The n-th derivative of exp(-t^2/(2 sigma^2)) is

    (-1)^n (sigma*sqrt(2))^(-n) H_n(t / (sigma*sqrt(2))) exp(-t^2/(2 sigma^2))

with H_n the physicists' Hermite polynomials. Closed forms are exact and fast;
finite differences are kept to the test suite as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from ._validation import as_point, as_points, readonly

#: Highest supported total derivative order (4th-order operators in scope).
MAX_TOTAL_ORDER = 4

#: Kernel evaluations beyond this many widths from the center return exactly
#: zero; the neglected tail is below 1e-31, far under solve tolerances, and
#: skipping it avoids denormal slowdowns.
CUTOFF_WIDTHS = 12.0

_SQRT2 = np.sqrt(2.0)
_CUTOFF_U2 = CUTOFF_WIDTHS**2 / 2.0  # cutoff radius in scaled-distance units


class DerivOrder(NamedTuple):
    """Partial derivative multi-index (order in x, order in y)."""

    ox: int
    oy: int


def check_order(order) -> DerivOrder:
    """Validate a derivative multi-index with total order at most 4."""
    ox, oy = order
    if ox < 0 or oy < 0 or int(ox) != ox or int(oy) != oy:
        raise ValueError(f"derivative orders must be nonnegative integers, got {order!r}")
    if ox + oy > MAX_TOTAL_ORDER:
        raise ValueError(
            f"derivative order {order!r} unsupported: total order above {MAX_TOTAL_ORDER}"
        )
    return DerivOrder(int(ox), int(oy))


def hermite_value(n: int, u: np.ndarray) -> np.ndarray:
    """Physicists' Hermite polynomial H_n evaluated elementwise, n <= 4."""
    if n == 0:
        return np.ones_like(u)
    if n == 1:
        return 2.0 * u
    u2 = u * u
    if n == 2:
        return 4.0 * u2 - 2.0
    if n == 3:
        return (8.0 * u2 - 12.0) * u
    if n == 4:
        return (16.0 * u2 - 48.0) * u2 + 12.0
    raise ValueError(f"Hermite order {n} not supported")


@dataclass(frozen=True)
class RbfUnit:
    """A single Gaussian kernel: center in the plane and positive width."""

    center: tuple[float, float]
    width: float

    def __post_init__(self) -> None:
        cx, cy = self.center
        if not (np.isfinite(cx) and np.isfinite(cy)):
            raise ValueError("unit center must be finite")
        if not (np.isfinite(self.width) and self.width > 0.0):
            raise ValueError("unit width must be positive and finite")
        object.__setattr__(self, "center", (float(cx), float(cy)))
        object.__setattr__(self, "width", float(self.width))


@dataclass(frozen=True)
class RbfBasis:
    """An ordered collection of Gaussian units defining the trial space.

    The coefficient vector of a solution refers to units by index, so the
    ordering is part of the contract. Instances are immutable; the arrays are
    flagged read-only.
    """

    centers: np.ndarray  # (n, 2)
    widths: np.ndarray   # (n,)

    def __post_init__(self) -> None:
        centers = readonly(np.asarray(self.centers, dtype=float).reshape(-1, 2))
        widths = readonly(np.asarray(self.widths, dtype=float).reshape(-1))
        object.__setattr__(self, "centers", centers)
        object.__setattr__(self, "widths", widths)
        if len(centers) == 0:
            raise ValueError("basis must contain at least one unit")
        if len(centers) != len(widths):
            raise ValueError("centers and widths must have equal length")
        if not np.all(np.isfinite(centers)):
            raise ValueError("centers must be finite")
        if not np.all(np.isfinite(widths)) or np.any(widths <= 0.0):
            raise ValueError("widths must be positive and finite")

    def __len__(self) -> int:
        return len(self.widths)

    def unit(self, i: int) -> RbfUnit:
        return RbfUnit(center=(self.centers[i, 0], self.centers[i, 1]),
                       width=self.widths[i])

    @classmethod
    def from_units(cls, units: Sequence[RbfUnit]) -> "RbfBasis":
        return cls(centers=np.array([u.center for u in units], dtype=float),
                   widths=np.array([u.width for u in units], dtype=float))


def deriv_matrix(basis: RbfBasis, points, order=(0, 0)) -> np.ndarray:
    """Partial derivatives of every basis unit at every point.

    Returns an array of shape (m, n): entry (j, i) is the mixed partial of
    unit i, of the given (ox, oy) order, evaluated at point j.
    """
    ox, oy = check_order(order)
    pts = as_points(points)
    inv = 1.0 / (basis.widths * _SQRT2)  # (n,)
    ux = (pts[:, 0, None] - basis.centers[None, :, 0]) * inv
    uy = (pts[:, 1, None] - basis.centers[None, :, 1]) * inv
    r2 = ux * ux + uy * uy
    out = np.exp(-r2)
    out[r2 > _CUTOFF_U2] = 0.0
    if ox:
        out *= hermite_value(ox, ux)
    if oy:
        out *= hermite_value(oy, uy)
    total = ox + oy
    if total:
        out *= (-inv) ** total
    return out


def eval_matrix(basis: RbfBasis, points) -> np.ndarray:
    """Kernel values of every unit at every point, shape (m, n)."""
    return deriv_matrix(basis, points, (0, 0))


def operator_matrix(basis: RbfBasis, points, terms) -> np.ndarray:
    """Apply a weighted sum of partial derivatives to every unit.

    `terms` is a sequence of (coefficient, (ox, oy)) pairs; the result has
    shape (m, n) with entry (j, i) = sum_t coeff_t * D^t phi_i (point_j).
    One row of this matrix is one collocation row of the linear system.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("operator must have at least one term")
    out = None
    for coeff, order in terms:
        block = deriv_matrix(basis, points, order)
        if coeff != 1.0:
            block = block * coeff
        out = block if out is None else out + block
    return out


def eval_unit(unit: RbfUnit, p) -> float:
    """Kernel value of a single unit at a single point."""
    return eval_unit_deriv(unit, p, (0, 0))


def eval_unit_deriv(unit: RbfUnit, p, order) -> float:
    """Exact mixed partial derivative of a single unit at a single point."""
    basis = RbfBasis.from_units([unit])
    return float(deriv_matrix(basis, as_point(p), order)[0, 0])


def eval_row(basis: RbfBasis, p, terms) -> np.ndarray:
    """One collocation row: an operator applied to every unit at one point."""
    return operator_matrix(basis, as_point(p), terms)[0]
