"""Input validation helpers shared across the package."""

from __future__ import annotations

import numpy as np


def as_point(p) -> np.ndarray:
    """Coerce a single 2-D point to a float array of shape (2,)."""
    arr = np.asarray(p, dtype=float)
    if arr.shape != (2,):
        raise ValueError(f"expected a 2-D point, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("point coordinates must be finite")
    return arr


def as_points(X) -> np.ndarray:
    """Coerce input to a float array of shape (m, 2).

    A single point of shape (2,) is promoted to shape (1, 2).
    """
    arr = np.asarray(X, dtype=float)
    if arr.ndim == 1 and arr.shape == (2,):
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected points of shape (m, 2), got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("point coordinates must be finite")
    return arr


def check_unit_square(points: np.ndarray, what: str = "points") -> None:
    """Require all points to lie in the closed unit square."""
    if points.size and (points.min() < 0.0 or points.max() > 1.0):
        raise ValueError(f"{what} must lie inside the closed unit square [0, 1]^2")


def check_positive_int(value, name: str) -> int:
    if int(value) != value or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def readonly(arr: np.ndarray) -> np.ndarray:
    """Return a C-contiguous float64 copy flagged read-only."""
    out = np.ascontiguousarray(arr, dtype=float)
    if out is arr:
        out = out.copy()
    out.setflags(write=False)
    return out
