"""Evaluation of solved fields and derived physical quantities.

A `Solution` binds coefficients to their basis and can be evaluated anywhere
with any supported derivative order. For streamfunction solutions the derived
velocity is u = dpsi/dy, v = -dpsi/dx, which is incompressible by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._validation import as_points, readonly
from .basis import RbfBasis, deriv_matrix, operator_matrix


@dataclass(frozen=True)
class Solution:
    """Coefficients bound to their basis: u(x) = sum_i c_i phi_i(x)."""

    basis: RbfBasis
    coefficients: np.ndarray

    def __post_init__(self) -> None:
        coeff = readonly(np.asarray(self.coefficients, dtype=float).reshape(-1))
        object.__setattr__(self, "coefficients", coeff)
        if len(coeff) != len(self.basis):
            raise ValueError(
                f"expected {len(self.basis)} coefficients, got {len(coeff)}"
            )
        if not np.all(np.isfinite(coeff)):
            raise ValueError("coefficients must be finite")


def evaluate(solution: Solution, points, order=(0, 0)) -> np.ndarray | float:
    """Evaluate the solution (or one of its partial derivatives) at points.

    A single point of shape (2,) returns a scalar; an (m, 2) array returns a
    vector of length m.
    """
    pts = np.asarray(points, dtype=float)
    single = pts.ndim == 1
    values = deriv_matrix(solution.basis, as_points(pts), order) @ solution.coefficients
    return float(values[0]) if single else values


def evaluate_operator(solution: Solution, points, terms) -> np.ndarray:
    """Apply a weighted-derivative operator to the solution at points."""
    pts = as_points(points)
    return operator_matrix(solution.basis, pts, terms) @ solution.coefficients


@dataclass(frozen=True)
class FieldSample:
    """Streamfunction and velocity at one point."""

    x: float
    y: float
    psi: float
    u: float
    v: float
    speed: float


def velocity(solution: Solution, points) -> tuple[np.ndarray, np.ndarray]:
    """Velocity components (u, v) = (dpsi/dy, -dpsi/dx) at points."""
    pts = as_points(points)
    u = evaluate(solution, pts, (0, 1))
    v = -evaluate(solution, pts, (1, 0))
    return u, v


def centerline_profiles(
    solution: Solution, n_samples: int = 201
) -> tuple[np.ndarray, np.ndarray]:
    """Velocity profiles along the two centerlines.

    Returns (u_profile, v_profile): u_profile rows are (y, u(0.5, y)) and
    v_profile rows are (x, v(x, 0.5)), each sampled uniformly with endpoints.
    """
    if n_samples < 2:
        raise ValueError("n_samples must be at least 2")
    coords = np.linspace(0.0, 1.0, n_samples)
    u = evaluate(solution, np.column_stack([np.full(n_samples, 0.5), coords]), (0, 1))
    v = -evaluate(solution, np.column_stack([coords, np.full(n_samples, 0.5)]), (1, 0))
    return np.column_stack([coords, u]), np.column_stack([coords, v])


def field_grid(solution: Solution, nx: int = 101, ny: int = 101) -> list[FieldSample]:
    """Uniform field samples with psi, u, v, and speed at each point.

    Output is row-major with y as the outer loop.
    """
    if nx < 2 or ny < 2:
        raise ValueError("field grid needs at least 2 nodes per axis")
    X, Y = np.meshgrid(np.linspace(0.0, 1.0, nx), np.linspace(0.0, 1.0, ny))
    pts = np.column_stack([X.ravel(), Y.ravel()])
    psi = evaluate(solution, pts)
    u, v = velocity(solution, pts)
    speed = np.hypot(u, v)
    return [
        FieldSample(x=float(p[0]), y=float(p[1]), psi=float(s),
                    u=float(a), v=float(b), speed=float(c))
        for p, s, a, b, c in zip(pts, psi, u, v, speed)
    ]
