"""Mesh-free Gaussian RBF collocation solver for linear PDEs.

A trial space of Gaussian kernels with fixed, physics-aware centers and
widths is fit to a PDE in one shot: the interior operator and boundary
conditions are collocated into an over-determined linear system solved by a
truncated-SVD pseudo-inverse. Ships with lid-driven cavity and manufactured
oscillatory biharmonic benchmarks, a parameter sweep harness, and a CLI.
"""

__version__ = "0.1.0"

from .assembly import CollocationSystem, assemble, dump_system, load_system, residual_vector
from .basis import DerivOrder, RbfBasis, RbfUnit, eval_row, eval_unit, eval_unit_deriv
from .estimator import RbfPielm
from .exceptions import (
    AssemblyError,
    ConfigError,
    RankZeroError,
    RbfPielmError,
    SolveError,
    UnderdeterminedSystemError,
)
from .geometry import (
    BoundarySide,
    CollocationSet,
    cavity_collocation,
    chebyshev_nodes,
    tensor_grid,
    uniform_grid,
    wall_distances,
)
from .operators import (
    BoundaryCondition,
    LinearPdeOperator,
    PdeProblem,
    biharmonic,
    dirichlet,
    normal_derivative,
    tangential_y_derivative,
)
from .pai import PaiConfig, place_centers_pai, place_centers_uniform, width_heuristic
from .postprocess import FieldSample, Solution, centerline_profiles, evaluate, field_grid
from .problems import ErrorStats, MmsSpec, cavity_problem, error_stats, mms_problem
from .solver import DEFAULT_RCOND, SolveReport, solve_least_squares

__all__ = [
    "__version__",
    "AssemblyError",
    "BoundaryCondition",
    "BoundarySide",
    "CollocationSet",
    "CollocationSystem",
    "ConfigError",
    "DEFAULT_RCOND",
    "DerivOrder",
    "ErrorStats",
    "FieldSample",
    "LinearPdeOperator",
    "MmsSpec",
    "PaiConfig",
    "PdeProblem",
    "RankZeroError",
    "RbfBasis",
    "RbfPielm",
    "RbfPielmError",
    "RbfUnit",
    "SolveError",
    "SolveReport",
    "Solution",
    "UnderdeterminedSystemError",
    "assemble",
    "biharmonic",
    "cavity_collocation",
    "cavity_problem",
    "centerline_profiles",
    "chebyshev_nodes",
    "dirichlet",
    "dump_system",
    "error_stats",
    "eval_row",
    "eval_unit",
    "eval_unit_deriv",
    "evaluate",
    "field_grid",
    "load_system",
    "mms_problem",
    "normal_derivative",
    "place_centers_pai",
    "place_centers_uniform",
    "residual_vector",
    "solve_least_squares",
    "tangential_y_derivative",
    "tensor_grid",
    "uniform_grid",
    "wall_distances",
    "width_heuristic",
]
