"""Acceptance suite: every criterion checked at its stated tolerance.

Each test prints one `criterion N: PASS/FAIL` line (visible with -s) before
asserting, so a full run yields a per-criterion scoreboard.
"""

import time

import numpy as np
import pytest

from oracles import fd_gaussian_deriv
from rbf_pielm.assembly import CollocationSystem
from rbf_pielm.basis import RbfBasis, deriv_matrix
from rbf_pielm.config import RunConfig, build_config
from rbf_pielm.estimator import RbfPielm
from rbf_pielm.geometry import chebyshev_nodes, tensor_grid
from rbf_pielm.postprocess import evaluate
from rbf_pielm.problems import MmsSpec, error_stats, mms_problem
from rbf_pielm.runner import execute_run
from rbf_pielm.solver import solve_least_squares
from rbf_pielm.sweep import SweepSpec, run_sweep

ORDERS = [(ox, oy) for ox in range(5) for oy in range(5) if ox + oy <= 4]


def report_line(name: str, ok: bool, detail: str) -> None:
    print(f"{name}: {'PASS' if ok else 'FAIL'} - {detail}")


@pytest.fixture(scope="module")
def mms_k10_result():
    return execute_run(build_config(preset="mms-k10"))


@pytest.fixture(scope="module")
def cavity_result():
    return execute_run(RunConfig())


@pytest.fixture(scope="module")
def cavity_ensemble():
    """Mean-abs residuals over 20 seeds, with and without adaptive widths."""
    residuals = {True: [], False: []}
    for pai in (True, False):
        for seed in range(20):
            result = execute_run(RunConfig(seed=seed, pai=pai))
            residuals[pai].append(result.report.residual_mean_abs)
    return residuals


def test_criterion_1_derivative_oracle():
    rng = np.random.default_rng(2024)
    t0 = time.perf_counter()
    checked = 0
    for _ in range(200):
        cx, cy = rng.random(2)
        sigma = rng.uniform(0.25, 1.3)
        px, py = rng.random(2)
        ox, oy = ORDERS[rng.integers(len(ORDERS))]
        basis = RbfBasis(centers=[[cx, cy]], widths=[sigma])
        analytic = deriv_matrix(basis, [[px, py]], (ox, oy))[0, 0]
        fd = fd_gaussian_deriv(px, py, cx, cy, sigma, ox, oy)
        if abs(analytic) > 1e-8:
            assert analytic == pytest.approx(fd, rel=1e-6), (cx, cy, sigma, px, py, ox, oy)
        else:
            assert abs(analytic - fd) < 1e-8, (cx, cy, sigma, px, py, ox, oy)
        checked += 1
    elapsed = time.perf_counter() - t0
    ok = checked == 200 and elapsed < 1.0
    report_line("criterion 1", ok,
                f"200 derivative triples vs finite differences in {elapsed:.2f}s")
    assert elapsed < 1.0


def test_criterion_2_least_squares_optimality():
    rng = np.random.default_rng(7)
    t0 = time.perf_counter()
    for i in range(50):
        m = int(rng.integers(20, 501))
        n = int(rng.integers(5, min(m - 1, 200) + 1))
        A = rng.standard_normal((m, n))
        rank_deficient = i % 3 == 0
        if rank_deficient:
            dup_from = int(rng.integers(0, n))
            A = np.hstack([A, A[:, [dup_from]]])
        b = rng.standard_normal(m)
        system = CollocationSystem(matrix=A, rhs=b, row_labels=())
        c = solve_least_squares(system).coefficients
        gap = np.linalg.norm(A.T @ (A @ c - b))
        bound = 1e-8 * np.linalg.norm(A) * (
            np.linalg.norm(b) + np.linalg.norm(A) * np.linalg.norm(c)
        )
        assert gap <= bound
        if rank_deficient:
            assert c[dup_from] == pytest.approx(c[-1], rel=1e-8, abs=1e-10)
            null = np.zeros(len(c))
            null[dup_from], null[-1] = 1.0, -1.0
            assert np.linalg.norm(c + 0.1 * null) > np.linalg.norm(c)
    elapsed = time.perf_counter() - t0
    ok = elapsed < 5.0
    report_line("criterion 2", ok,
                f"50 systems optimal and minimum-norm in {elapsed:.2f}s")
    assert elapsed < 5.0


def test_criterion_3_mms_smooth_case():
    spec = MmsSpec(2, 2)
    problem = mms_problem(spec)
    nodes = chebyshev_nodes(30)
    points = tensor_grid(nodes, nodes)
    t0 = time.perf_counter()
    errors = []
    for seed in range(5):
        est = RbfPielm(n_units=400, seed=seed).fit(problem, points)
        errors.append(error_stats(est.solution_, spec.exact).mean_abs)
    elapsed = time.perf_counter() - t0
    mean_error = float(np.mean(errors))
    ok = mean_error <= 1e-3 and elapsed < 10.0
    report_line("criterion 3", ok,
                f"smooth manufactured case mean_abs={mean_error:.3e} "
                f"(<= 1e-3) over 5 seeds in {elapsed:.1f}s")
    assert mean_error <= 1e-3
    assert elapsed < 10.0


def test_criterion_4_mms_benchmark_case(mms_k10_result):
    result = mms_k10_result
    error = result.error.mean_abs
    fit_time = result.estimator.fit_time_s_
    ok = 1e-2 <= error <= 1e-1 and fit_time < 60.0
    report_line("criterion 4", ok,
                f"oscillatory case mean_abs={error:.3e} (in [1e-2, 1e-1]), "
                f"assemble+solve {fit_time:.1f}s (< 60s)")
    assert 1e-2 <= error <= 1e-1
    assert fit_time < 60.0


def test_criterion_5_breakdown_case(mms_k10_result):
    k10_error = mms_k10_result.error.mean_abs
    result = execute_run(build_config(preset="mms-k20"))
    k20_error = result.error.mean_abs
    ratio = k20_error / k10_error
    ok = k20_error >= 5.0 * k10_error
    report_line("criterion 5", ok,
                f"k=20 mean_abs={k20_error:.3e} is {ratio:.1f}x the k=10 error "
                f"(>= 5x required)")
    assert k20_error >= 5.0 * k10_error


def test_criterion_6_cavity_residual(cavity_result, cavity_ensemble):
    residual = cavity_result.report.residual_mean_abs
    fit_time = cavity_result.estimator.fit_time_s_
    pai_mean = float(np.mean(cavity_ensemble[True]))
    base_mean = float(np.mean(cavity_ensemble[False]))
    ok = residual <= 1.5e-2 and pai_mean < base_mean and fit_time <= 10.0
    report_line("criterion 6", ok,
                f"cavity residual_mean_abs={residual:.3e} (<= 1.5e-2); "
                f"adaptive-width mean over 20 seeds {pai_mean:.3e} < "
                f"uniform baseline {base_mean:.3e}; assemble+solve {fit_time:.2f}s")
    assert residual <= 1.5e-2
    assert pai_mean < base_mean
    assert fit_time <= 10.0


def test_criterion_7a_cavity_lid_velocity(cavity_result):
    u_lid = float(evaluate(cavity_result.solution, (0.5, 1.0), (0, 1)))
    gap = abs(u_lid - 1.0)
    ok = gap <= 5e-2
    report_line("criterion 7a", ok, f"|u(0.5,1) - 1| = {gap:.3e} (<= 5e-2)")
    assert gap <= 5e-2


def test_criterion_7b_cavity_wall_streamfunction(cavity_result):
    g = np.linspace(0.0, 1.0, 101)
    rim = np.vstack([
        np.column_stack([g, np.zeros(101)]),
        np.column_stack([g, np.ones(101)]),
        np.column_stack([np.zeros(101), g]),
        np.column_stack([np.ones(101), g]),
    ])
    wall_psi = float(np.abs(evaluate(cavity_result.solution, rim)).max())
    ok = wall_psi <= 5e-3
    report_line("criterion 7b", ok, f"max wall |psi| = {wall_psi:.3e} (<= 5e-3)")
    assert wall_psi <= 5e-3


def test_criterion_7c_cavity_discrete_incompressibility(cavity_result):
    g = np.linspace(0.0, 1.0, 101)
    GX, GY = np.meshgrid(g, g)
    pts = np.column_stack([GX.ravel(), GY.ravel()])
    psi = evaluate(cavity_result.solution, pts).reshape(101, 101)
    u, v = (evaluate(cavity_result.solution, pts, (0, 1)).reshape(101, 101),
            -evaluate(cavity_result.solution, pts, (1, 0)).reshape(101, 101))
    speed_max = float(np.hypot(u, v).max())
    h = g[1] - g[0]
    # velocities derived from the sampled streamfunction: their discrete
    # divergence is the commutator of the two central-difference stencils
    u_fd = (psi[2:, 1:-1] - psi[:-2, 1:-1]) / (2 * h)
    v_fd = -(psi[1:-1, 2:] - psi[1:-1, :-2]) / (2 * h)
    div = (u_fd[1:-1, 2:] - u_fd[1:-1, :-2]) / (2 * h) \
        + (v_fd[2:, 1:-1] - v_fd[:-2, 1:-1]) / (2 * h)
    div_max = float(np.abs(div).max())
    bound = 1e-6 * speed_max
    ok = div_max <= bound
    report_line("criterion 7c", ok,
                f"discrete divergence {div_max:.2e} <= 1e-6 * max speed {bound:.2e}")
    assert div_max <= bound


def test_criterion_8_determinism(tmp_path):
    from rbf_pielm.cli import TIMING_KEYS, main, parse_report

    cfg = RunConfig(preset="mms-custom", grid_nx=25, grid_ny=25, n_units=150, seed=6)
    a = execute_run(cfg)
    b = execute_run(cfg)
    coeff_identical = np.array_equal(a.report.coefficients, b.report.coefficients)

    args = ["solve", "--preset", "mms-custom", "--grid", "25x25",
            "--n-units", "150", "--seed", "6"]
    assert main([*args, "--out", str(tmp_path / "r1")]) == 0
    assert main([*args, "--out", str(tmp_path / "r2")]) == 0
    r1 = parse_report(tmp_path / "r1" / "report")
    r2 = parse_report(tmp_path / "r2" / "report")
    skip = set(TIMING_KEYS) | {"out_dir"}
    reports_identical = all(r1[k] == r2[k] for k in r1 if k not in skip)
    ok = coeff_identical and reports_identical
    report_line("criterion 8", ok,
                "bit-identical coefficients and reports (timing excluded)")
    assert coeff_identical
    assert reports_identical


def test_criterion_9_sweep_saturation():
    spec = SweepSpec(axis1=("n_units", (750.0, 1200.0)), base=RunConfig(),
                     seeds=(0, 1, 2))
    rows = run_sweep(spec)
    assert all(r.status == "ok" for r in rows)
    r750, r1200 = rows[0].mean_residual, rows[1].mean_residual
    gap = abs(r1200 - r750) / r750
    ok = gap <= 0.25
    report_line("criterion 9", ok,
                f"residual at 1200 units within {gap:.1%} of 750 units (<= 25%)")
    assert gap <= 0.25
