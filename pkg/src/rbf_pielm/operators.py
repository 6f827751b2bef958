"""Declarative linear differential operators and boundary conditions.

A problem is stated as: an interior operator L with source f such that the
interior residual is L(u) + f, plus per-wall boundary conditions, each a
boundary operator B with target data g so the boundary residual is B(u) - g.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from .basis import check_order
from .geometry import BoundarySide

#: Boundary operators are value or first-derivative conditions; allowing up
#: to second order leaves headroom without admitting the interior operator.
MAX_BOUNDARY_ORDER = 2

TargetFn = Callable[[np.ndarray, np.ndarray], np.ndarray]


def as_target(value) -> TargetFn:
    """Coerce a constant or a callable of (x, y) into a vectorized target."""
    if callable(value):
        fn = value

        def wrapped(x: np.ndarray, y: np.ndarray) -> np.ndarray:
            return np.broadcast_to(np.asarray(fn(x, y), dtype=float), np.shape(x)).copy()

        return wrapped
    const = float(value)

    def constant(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.full(np.shape(x), const)

    return constant


@dataclass(frozen=True)
class LinearPdeOperator:
    """Weighted list of partial-derivative multi-indices.

    Repeated orders are merged on construction, so `terms` never contains two
    entries with the same (ox, oy).
    """

    terms: tuple[tuple[float, tuple[int, int]], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("operator must have at least one term")
        merged: dict[tuple[int, int], float] = {}
        for coeff, order in self.terms:
            order = tuple(check_order(order))
            merged[order] = merged.get(order, 0.0) + float(coeff)
        object.__setattr__(
            self, "terms", tuple((c, o) for o, c in merged.items())
        )

    @property
    def total_order(self) -> int:
        return max(ox + oy for _, (ox, oy) in self.terms)


@dataclass(frozen=True)
class BoundaryCondition:
    """A boundary operator together with its target data on the wall."""

    operator: LinearPdeOperator
    target: TargetFn

    def __post_init__(self) -> None:
        if self.operator.total_order > MAX_BOUNDARY_ORDER:
            raise ValueError(
                f"boundary operators are limited to order {MAX_BOUNDARY_ORDER}"
            )
        object.__setattr__(self, "target", as_target(self.target))


@dataclass(frozen=True)
class PdeProblem:
    """Interior operator, source term, and boundary conditions per wall.

    Sign convention: the interior residual is L(u) + f, so the assembled
    right-hand side for an interior row is -f; the boundary residual is
    B(u) - g with right-hand side +g.
    """

    interior_operator: LinearPdeOperator
    source: TargetFn
    conditions: Mapping[BoundarySide, tuple[BoundaryCondition, ...]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "source", as_target(self.source))
        conds = {
            BoundarySide(side): tuple(cs) for side, cs in self.conditions.items()
        }
        for side in BoundarySide:
            if not conds.get(side):
                raise ValueError(f"wall {side.name} must carry at least one condition")
        object.__setattr__(self, "conditions", conds)


def biharmonic() -> LinearPdeOperator:
    """The 2-D biharmonic operator: u_xxxx + 2 u_xxyy + u_yyyy."""
    return LinearPdeOperator(terms=((1.0, (4, 0)), (2.0, (2, 2)), (1.0, (0, 4))))


def dirichlet(value) -> BoundaryCondition:
    """Prescribe function values on a wall."""
    return BoundaryCondition(LinearPdeOperator(((1.0, (0, 0)),)), as_target(value))


def normal_derivative(side: BoundarySide, value) -> BoundaryCondition:
    """Prescribe the outward normal derivative on a wall."""
    nx, ny = side.normal
    if side.is_horizontal:
        op = LinearPdeOperator(((ny, (0, 1)),))
    else:
        op = LinearPdeOperator(((nx, (1, 0)),))
    return BoundaryCondition(op, as_target(value))


def tangential_y_derivative(value) -> BoundaryCondition:
    """Prescribe the y-derivative regardless of wall (the lid condition)."""
    return BoundaryCondition(LinearPdeOperator(((1.0, (0, 1)),)), as_target(value))
