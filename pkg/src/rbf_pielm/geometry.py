"""Collocation point generation on the unit square.

Interior points, boundary points with wall tags, Chebyshev-clustered node
distributions, and nearest-wall distances. Everything here is pure and
operates on immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from ._validation import as_point, check_positive_int, check_unit_square, readonly

#: Largest possible nearest-wall distance on the unit square (attained at the
#: center), used to normalize wall-distance ratios to [0, 1].
MAX_NEAREST_WALL_DISTANCE = 0.5


class BoundarySide(IntEnum):
    """One of the four walls of the unit square."""

    BOTTOM = 0
    TOP = 1
    LEFT = 2
    RIGHT = 3

    @property
    def normal(self) -> tuple[float, float]:
        """Outward unit normal of this wall."""
        return _NORMALS[self]

    @property
    def is_horizontal(self) -> bool:
        return self in (BoundarySide.BOTTOM, BoundarySide.TOP)


_NORMALS = {
    BoundarySide.BOTTOM: (0.0, -1.0),
    BoundarySide.TOP: (0.0, 1.0),
    BoundarySide.LEFT: (-1.0, 0.0),
    BoundarySide.RIGHT: (1.0, 0.0),
}

_SIDE_COORD = {
    BoundarySide.BOTTOM: (1, 0.0),  # y == 0
    BoundarySide.TOP: (1, 1.0),     # y == 1
    BoundarySide.LEFT: (0, 0.0),    # x == 0
    BoundarySide.RIGHT: (0, 1.0),   # x == 1
}


@dataclass(frozen=True)
class CollocationSet:
    """Interior and boundary collocation points.

    Attributes
    ----------
    interior:
        Array of shape (n_interior, 2), strictly inside (0, 1)^2.
    boundary:
        Array of shape (n_boundary, 2), each point exactly on its wall.
    boundary_sides:
        Integer array of shape (n_boundary,) with `BoundarySide` values.
    """

    interior: np.ndarray
    boundary: np.ndarray
    boundary_sides: np.ndarray

    def __post_init__(self) -> None:
        interior = readonly(np.asarray(self.interior, dtype=float).reshape(-1, 2))
        boundary = readonly(np.asarray(self.boundary, dtype=float).reshape(-1, 2))
        sides = np.ascontiguousarray(self.boundary_sides, dtype=np.int64).reshape(-1)
        sides.setflags(write=False)
        object.__setattr__(self, "interior", interior)
        object.__setattr__(self, "boundary", boundary)
        object.__setattr__(self, "boundary_sides", sides)
        self._validate()

    def _validate(self) -> None:
        if len(self.boundary) != len(self.boundary_sides):
            raise ValueError("boundary points and side tags must have equal length")
        if self.interior.size:
            if not np.all(np.isfinite(self.interior)):
                raise ValueError("interior points must be finite")
            if self.interior.min() <= 0.0 or self.interior.max() >= 1.0:
                raise ValueError("interior points must lie strictly inside (0, 1)^2")
        if self.boundary.size:
            if not np.all(np.isfinite(self.boundary)):
                raise ValueError("boundary points must be finite")
            check_unit_square(self.boundary, "boundary points")
            for side in BoundarySide:
                axis, value = _SIDE_COORD[side]
                mask = self.boundary_sides == side
                if mask.any() and not np.all(self.boundary[mask, axis] == value):
                    raise ValueError(f"points tagged {side.name} must lie on that wall")
        for name, pts in (("interior", self.interior), ("boundary", self.boundary)):
            if len(pts) and len(np.unique(pts, axis=0)) != len(pts):
                raise ValueError(f"duplicate {name} points")

    @property
    def n_interior(self) -> int:
        return len(self.interior)

    @property
    def n_boundary(self) -> int:
        return len(self.boundary)

    @property
    def n_points(self) -> int:
        return self.n_interior + self.n_boundary

    def all_points(self) -> np.ndarray:
        """Interior followed by boundary points, shape (n_points, 2)."""
        return np.vstack([self.interior, self.boundary])


def chebyshev_nodes(n: int) -> np.ndarray:
    """Chebyshev-spaced nodes on [0, 1], clustering toward the endpoints.

    Node j is (1 - cos(j*pi/(n-1))) / 2 for j = 0..n-1; the sequence is
    strictly increasing, starts at 0, ends at 1, and is symmetric about 0.5.
    """
    n = check_positive_int(n, "n")
    if n < 2:
        raise ValueError("n must be at least 2")
    j = np.arange(n)
    return 0.5 * (1.0 - np.cos(j * np.pi / (n - 1)))


def _check_axis_nodes(nodes: np.ndarray, name: str) -> np.ndarray:
    nodes = np.asarray(nodes, dtype=float).reshape(-1)
    if nodes.size == 0:
        raise ValueError(f"{name} must be nonempty")
    if np.any(np.diff(nodes) <= 0):
        raise ValueError(f"{name} must be strictly increasing")
    if nodes[0] != 0.0 or nodes[-1] != 1.0:
        raise ValueError(f"{name} must start at 0 and end at 1")
    return nodes


def tensor_grid(nodes_x, nodes_y) -> CollocationSet:
    """Cartesian product of two node lists, split into interior and boundary.

    Points with a coordinate equal to 0 or 1 become boundary points; corners
    are assigned to the horizontal walls (bottom/top take precedence over
    left/right) so the assignment is deterministic.
    """
    nodes_x = _check_axis_nodes(nodes_x, "nodes_x")
    nodes_y = _check_axis_nodes(nodes_y, "nodes_y")
    X, Y = np.meshgrid(nodes_x, nodes_y)  # y is the outer loop
    pts = np.column_stack([X.ravel(), Y.ravel()])
    x, y = pts[:, 0], pts[:, 1]
    sides = np.full(len(pts), -1, dtype=np.int64)
    sides[x == 0.0] = BoundarySide.LEFT
    sides[x == 1.0] = BoundarySide.RIGHT
    sides[y == 0.0] = BoundarySide.BOTTOM
    sides[y == 1.0] = BoundarySide.TOP
    on_boundary = sides >= 0
    return CollocationSet(
        interior=pts[~on_boundary],
        boundary=pts[on_boundary],
        boundary_sides=sides[on_boundary],
    )


def uniform_grid(nx: int, ny: int) -> CollocationSet:
    """Uniformly spaced tensor grid with nx by ny nodes (endpoints included)."""
    return tensor_grid(np.linspace(0.0, 1.0, nx), np.linspace(0.0, 1.0, ny))


def cavity_collocation(n_interior: int = 48, n_boundary: int = 96) -> CollocationSet:
    """Collocation layout for the lid-driven cavity benchmark.

    The interior is an `n_interior` x `n_interior` Chebyshev tensor grid (the
    inner nodes of an (n_interior+2)-node axis, so clustering toward the walls
    is preserved). Each wall carries `n_boundary` Chebyshev-spaced points;
    corners belong to the bottom/top walls and the side walls use inner nodes
    only, so no point is duplicated. Defaults give 48^2 + 4*96 = 2688 points.
    """
    n_interior = check_positive_int(n_interior, "n_interior")
    n_boundary = check_positive_int(n_boundary, "n_boundary")
    if n_boundary < 2:
        raise ValueError("n_boundary must be at least 2")
    inner = chebyshev_nodes(n_interior + 2)[1:-1]
    X, Y = np.meshgrid(inner, inner)
    interior = np.column_stack([X.ravel(), Y.ravel()])

    horiz = chebyshev_nodes(n_boundary)
    vert = chebyshev_nodes(n_boundary + 2)[1:-1]
    zeros_h, ones_h = np.zeros(n_boundary), np.ones(n_boundary)
    zeros_v, ones_v = np.zeros(n_boundary), np.ones(n_boundary)
    boundary = np.vstack([
        np.column_stack([horiz, zeros_h]),
        np.column_stack([horiz, ones_h]),
        np.column_stack([zeros_v, vert]),
        np.column_stack([ones_v, vert]),
    ])
    sides = np.concatenate([
        np.full(n_boundary, BoundarySide.BOTTOM),
        np.full(n_boundary, BoundarySide.TOP),
        np.full(n_boundary, BoundarySide.LEFT),
        np.full(n_boundary, BoundarySide.RIGHT),
    ])
    return CollocationSet(interior=interior, boundary=boundary, boundary_sides=sides)


def nearest_wall_distance(points) -> np.ndarray:
    """Distance from each point to the closest wall of the unit square."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    x, y = pts[:, 0], pts[:, 1]
    return np.minimum.reduce([x, 1.0 - x, y, 1.0 - y])


def wall_distances(p) -> tuple[float, float]:
    """Return (l_min, l_max) for a point in the closed unit square.

    l_min is the distance to the nearest wall; l_max is the largest such
    distance anywhere in the domain (0.5 for the unit square).
    """
    point = as_point(p)
    check_unit_square(point[None, :], "point")
    l_min = float(nearest_wall_distance(point)[0])
    return l_min, MAX_NEAREST_WALL_DISTANCE
