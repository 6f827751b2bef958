"""Assembly of the dense over-determined collocation system A c = b.

Interior rows apply the interior operator to every basis unit at one interior
point with right-hand side -f; boundary rows apply one boundary condition's
operator with right-hand side g. Rows are ordered: all interior points in
input order, then boundary points in input order, each expanded into its
wall's conditions in list order.
"""

from __future__ import annotations

import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .basis import RbfBasis, operator_matrix
from .exceptions import AssemblyError, UnderdeterminedSystemError
from .geometry import BoundarySide, CollocationSet
from .operators import PdeProblem

#: Magic bytes of the binary dump format.
FILE_MAGIC = b"RPLM"


@dataclass(frozen=True)
class RowLabel:
    """Diagnostic tag for one row: interior, or (wall, condition index)."""

    side: BoundarySide | None = None
    condition_index: int | None = None

    @property
    def is_interior(self) -> bool:
        return self.side is None

    def __str__(self) -> str:
        if self.is_interior:
            return "interior"
        return f"boundary:{self.side.name.lower()}:{self.condition_index}"


@dataclass
class CollocationSystem:
    """Dense matrix, right-hand side, and per-row diagnostic labels."""

    matrix: np.ndarray
    rhs: np.ndarray
    row_labels: tuple[RowLabel, ...]

    @property
    def n_rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_cols(self) -> int:
        return self.matrix.shape[1]


def _fill_interior(matrix, rhs, problem, points, basis, threads):
    interior = points.interior
    rhs[: len(interior)] = -problem.source(interior[:, 0], interior[:, 1])
    terms = problem.interior_operator.terms

    def fill(lo: int, hi: int) -> None:
        matrix[lo:hi] = operator_matrix(basis, interior[lo:hi], terms)

    n = len(interior)
    if threads <= 1 or n < 2 * threads:
        fill(0, n)
        return
    bounds = np.linspace(0, n, threads + 1, dtype=int)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(fill, lo, hi) for lo, hi in zip(bounds, bounds[1:])]
        for f in futures:
            f.result()


def assemble(
    problem: PdeProblem,
    points: CollocationSet,
    basis: RbfBasis,
    *,
    threads: int = 1,
    scale_interior: bool = False,
) -> CollocationSystem:
    """Build the collocation system for a problem, point set, and basis.

    With `scale_interior`, interior rows (matrix and right-hand side) are
    multiplied by min(width)^4 to bring the fourth-derivative entries to the
    scale of the boundary rows; off by default so reported residuals are the
    unweighted ones.

    Raises `UnderdeterminedSystemError` unless there are more rows than basis
    units, and `AssemblyError` if any assembled entry is non-finite. Interior
    rows may be filled by several threads; each writes a disjoint row slice.
    """
    conds_per_side = {
        side: problem.conditions[side] for side in BoundarySide
    }
    side_tags = points.boundary_sides
    rows_per_point = np.array(
        [len(conds_per_side[BoundarySide(s)]) for s in side_tags], dtype=int
    )
    n_interior = points.n_interior
    n_rows = n_interior + int(rows_per_point.sum())
    n_cols = len(basis)
    if n_rows <= n_cols:
        raise UnderdeterminedSystemError(
            f"assembly: system has {n_rows} rows for {n_cols} units; "
            "the collocation system must be over-constrained"
        )

    matrix = np.empty((n_rows, n_cols))
    rhs = np.empty(n_rows)
    labels: list[RowLabel] = [RowLabel()] * n_interior

    if n_interior:
        _fill_interior(matrix, rhs, problem, points, basis, max(1, int(threads)))

    # Row index where each boundary point's block starts.
    starts = n_interior + np.concatenate([[0], np.cumsum(rows_per_point[:-1])])
    labels.extend([RowLabel()] * (n_rows - n_interior))
    for side in BoundarySide:
        mask = side_tags == side
        if not mask.any():
            continue
        wall_pts = points.boundary[mask]
        wall_starts = starts[mask]
        for k, cond in enumerate(conds_per_side[side]):
            rows = wall_starts + k
            matrix[rows] = operator_matrix(basis, wall_pts, cond.operator.terms)
            rhs[rows] = cond.target(wall_pts[:, 0], wall_pts[:, 1])
            label = RowLabel(side=side, condition_index=k)
            for r in rows:
                labels[r] = label

    if scale_interior and n_interior:
        weight = float(basis.widths.min()) ** 4
        matrix[:n_interior] *= weight
        rhs[:n_interior] *= weight

    bad_rows = ~(np.isfinite(matrix).all(axis=1) & np.isfinite(rhs))
    if bad_rows.any():
        first = int(np.argmax(bad_rows))
        raise AssemblyError(
            f"assembly: non-finite entry in row {first} ({labels[first]})"
        )
    return CollocationSystem(matrix=matrix, rhs=rhs, row_labels=tuple(labels))


def residual_vector(system: CollocationSystem, coefficients) -> np.ndarray:
    """Row residuals A c - b for a coefficient vector."""
    c = np.asarray(coefficients, dtype=float).reshape(-1)
    if len(c) != system.n_cols:
        raise ValueError(
            f"expected {system.n_cols} coefficients, got {len(c)}"
        )
    return system.matrix @ c - system.rhs


def dump_system(system: CollocationSystem, path) -> None:
    """Write the system to a binary file for offline inspection.

    Layout: magic "RPLM", u32 row count, u32 column count, the matrix as
    row-major little-endian float64, then the right-hand side appended.
    """
    path = Path(path)
    with path.open("wb") as fh:
        fh.write(FILE_MAGIC)
        fh.write(struct.pack("<II", system.n_rows, system.n_cols))
        fh.write(np.ascontiguousarray(system.matrix, dtype="<f8").tobytes())
        fh.write(np.ascontiguousarray(system.rhs, dtype="<f8").tobytes())


def load_system(path) -> tuple[np.ndarray, np.ndarray]:
    """Read back a dumped system as (matrix, rhs)."""
    raw = Path(path).read_bytes()
    if raw[:4] != FILE_MAGIC:
        raise ValueError(f"{path}: not a collocation system dump")
    rows, cols = struct.unpack("<II", raw[4:12])
    need = 12 + 8 * rows * cols + 8 * rows
    if len(raw) != need:
        raise ValueError(f"{path}: truncated dump ({len(raw)} bytes, expected {need})")
    matrix = np.frombuffer(raw, dtype="<f8", count=rows * cols, offset=12)
    rhs = np.frombuffer(raw, dtype="<f8", count=rows, offset=12 + 8 * rows * cols)
    return matrix.reshape(rows, cols).copy(), rhs.copy()
