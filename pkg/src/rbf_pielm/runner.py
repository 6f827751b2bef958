"""Configured end-to-end runs: config -> problem -> fit -> diagnostics."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .config import RunConfig
from .estimator import RbfPielm
from .geometry import CollocationSet, cavity_collocation, chebyshev_nodes, tensor_grid
from .operators import PdeProblem
from .postprocess import Solution
from .problems import ErrorStats, MmsSpec, cavity_problem, error_stats, mms_problem
from .solver import SolveReport


def build_collocation(cfg: RunConfig) -> CollocationSet:
    """Collocation points for a preset: cavity layout or Chebyshev tensor grid."""
    if cfg.preset == "cavity":
        return cavity_collocation(cfg.cavity_interior_n, cfg.cavity_boundary_n)
    return tensor_grid(chebyshev_nodes(cfg.grid_nx), chebyshev_nodes(cfg.grid_ny))


def build_problem(cfg: RunConfig) -> tuple[PdeProblem, Callable | None]:
    """Problem for a preset, plus the exact solution when one is known."""
    if cfg.preset == "cavity":
        return cavity_problem(), None
    spec = MmsSpec(k1=cfg.k1, k2=cfg.k2)
    return mms_problem(spec, clamped=cfg.clamped), spec.exact


@dataclass
class RunResult:
    """Everything produced by one configured solve."""

    config: RunConfig
    estimator: RbfPielm
    solution: Solution
    report: SolveReport
    assembly_time_s: float
    total_time_s: float
    error: ErrorStats | None


def make_estimator(cfg: RunConfig, seed: int | None = None) -> RbfPielm:
    return RbfPielm(
        n_units=cfg.n_units,
        sigma0=cfg.sigma0,
        sigmac=cfg.sigmac,
        pai=cfg.pai,
        boundary_oversample=cfg.boundary_oversample,
        seed=cfg.seed if seed is None else seed,
        rcond=cfg.rcond,
        scale_interior=cfg.scale_interior,
        threads=cfg.threads,
    )


def execute_run(cfg: RunConfig) -> RunResult:
    """Run the full pipeline for a configuration."""
    t0 = time.perf_counter()
    points = build_collocation(cfg)
    problem, exact = build_problem(cfg)
    est = make_estimator(cfg).fit(problem, points)
    error = error_stats(est.solution_, exact) if exact is not None else None
    return RunResult(
        config=cfg,
        estimator=est,
        solution=est.solution_,
        report=est.report_,
        assembly_time_s=est.assembly_time_s_,
        total_time_s=time.perf_counter() - t0,
        error=error,
    )
