"""Single-shot minimum-norm least-squares solve via truncated SVD.

The coefficient vector is the Moore-Penrose pseudo-inverse applied to the
right-hand side: singular values below rcond times the largest are treated as
zero, and among all least-squares minimizers the minimum-norm one is returned.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .assembly import CollocationSystem
from .exceptions import RankZeroError, SolveError

#: Relative singular-value cutoff. Fourth-order rows carry width^-4 factors
#: that inflate the largest singular value, so an overly aggressive cutoff
#: discards well-determined modes; 1e-12 keeps them while staying safely
#: above double-precision noise.
DEFAULT_RCOND = 1e-12


@dataclass(frozen=True)
class SolveReport:
    """Solve output: coefficients plus residual and conditioning diagnostics.

    `condition_number` is the ratio of the largest singular value to the
    smallest one retained by the truncation.
    """

    coefficients: np.ndarray
    residual_norm: float
    residual_rms: float
    residual_mean_abs: float
    effective_rank: int
    condition_number: float
    wall_time_seconds: float


def solve_least_squares(
    system: CollocationSystem, rcond: float = DEFAULT_RCOND
) -> SolveReport:
    """Minimum-norm least-squares solution of the collocation system."""
    if not 0.0 <= rcond < 1.0:
        raise ValueError(f"rcond must be in [0, 1), got {rcond}")
    t0 = time.perf_counter()
    try:
        U, s, Vt = np.linalg.svd(system.matrix, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise SolveError(f"solver: SVD failed to converge ({exc})") from exc
    keep = s > rcond * s[0]
    if not keep.any():
        raise RankZeroError(
            "solver: every singular value falls below the truncation cutoff"
        )
    projected = U[:, keep].T @ system.rhs
    coefficients = Vt[keep].T @ (projected / s[keep])
    wall_time = time.perf_counter() - t0

    residual = system.matrix @ coefficients - system.rhs
    norm = float(np.linalg.norm(residual))
    return SolveReport(
        coefficients=coefficients,
        residual_norm=norm,
        residual_rms=norm / np.sqrt(system.n_rows),
        residual_mean_abs=float(np.abs(residual).mean()),
        effective_rank=int(keep.sum()),
        condition_number=float(s[0] / s[keep][-1]),
        wall_time_seconds=wall_time,
    )
