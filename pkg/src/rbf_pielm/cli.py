"""Command-line entry point: run benchmark presets and parameter sweeps.

Exit codes: 0 on success, 2 for configuration problems, 3 for numerical
pipeline failures.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from pathlib import Path

from . import __version__
from .assembly import dump_system
from .config import (
    PRESET_NAMES,
    RunConfig,
    build_config,
    config_hash,
    parse_config_file,
    serialize_config,
)
from .exceptions import ConfigError, RbfPielmError
from .postprocess import centerline_profiles, evaluate, field_grid
from .problems import default_eval_grid
from .runner import RunResult, build_problem, execute_run
from .sweep import default_sweep_spec, parse_sweep_file, run_sweep, write_sweep_csv

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3

ENV_THREADS = "RBF_PIELM_THREADS"


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        # plain-float repr is the shortest exact round-trip; numpy scalars
        # pass the isinstance check but carry a wrapper repr
        return repr(float(value))
    return str(value)


def write_report(path, result: RunResult) -> None:
    """Write the run report as a re-parseable key=value document."""
    cfg = result.config
    report = result.report
    lines = [f"config_hash = {config_hash(cfg)}"]
    lines.extend(serialize_config(cfg).rstrip("\n").splitlines())
    lines += [
        f"rows = {result.estimator.system_.n_rows}",
        f"cols = {result.estimator.system_.n_cols}",
        f"residual_norm = {_fmt(report.residual_norm)}",
        f"residual_rms = {_fmt(report.residual_rms)}",
        f"residual_mean_abs = {_fmt(report.residual_mean_abs)}",
        f"effective_rank = {report.effective_rank}",
        f"condition_number = {_fmt(report.condition_number)}",
        f"solve_time_s = {_fmt(report.wall_time_seconds)}",
        f"assembly_time_s = {_fmt(result.assembly_time_s)}",
        f"total_time_s = {_fmt(result.total_time_s)}",
        f"version = {__version__}",
    ]
    if result.error is not None:
        lines += [
            f"error_mean_abs = {_fmt(result.error.mean_abs)}",
            f"error_max_abs = {_fmt(result.error.max_abs)}",
            f"error_rms = {_fmt(result.error.rms)}",
        ]
    Path(path).write_text("\n".join(lines) + "\n")


#: Report keys that hold wall-clock measurements (excluded from determinism).
TIMING_KEYS = ("solve_time_s", "assembly_time_s", "total_time_s")


def parse_report(path) -> dict[str, str]:
    """Parse a report file back into a key -> raw-value mapping."""
    out: dict[str, str] = {}
    for line in Path(path).read_text().splitlines():
        if not line.strip():
            continue
        key, _, value = line.partition("=")
        out[key.strip()] = value.strip()
    return out


def _write_csv(path, header: list[str], rows) -> None:
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])


def _emit_outputs(result: RunResult, out_dir: Path) -> None:
    cfg = result.config
    if cfg.emit_profiles:
        u_profile, v_profile = centerline_profiles(result.solution)
        _write_csv(out_dir / "u_centerline.csv", ["coord", "value"], u_profile)
        _write_csv(out_dir / "v_centerline.csv", ["coord", "value"], v_profile)
    if cfg.emit_field:
        samples = field_grid(result.solution)
        _write_csv(
            out_dir / "field.csv",
            ["x", "y", "psi", "u", "v", "speed"],
            ((s.x, s.y, s.psi, s.u, s.v, s.speed) for s in samples),
        )
    if cfg.emit_error_map:
        _, exact = build_problem(cfg)
        if exact is not None:
            pts = default_eval_grid().all_points()
            err = abs(evaluate(result.solution, pts) - exact(pts[:, 0], pts[:, 1]))
            _write_csv(
                out_dir / "error_map.csv",
                ["x", "y", "abs_error"],
                zip(pts[:, 0], pts[:, 1], err),
            )
    if cfg.emit_matrix:
        dump_system(result.estimator.system_, out_dir / "matrix.rplm")


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--preset", choices=PRESET_NAMES, help="benchmark preset")
    parser.add_argument("--config", metavar="PATH", help="key=value config file")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--n-units", type=int, dest="n_units")
    parser.add_argument("--sigma0", type=float)
    parser.add_argument("--sigmac", type=float)
    parser.add_argument("--pai", action=argparse.BooleanOptionalAction, default=None)
    parser.add_argument("--clamped", action="store_true", default=None)
    parser.add_argument("--rcond", type=float)
    parser.add_argument("--grid", metavar="NXxNY", help="tensor grid size, e.g. 60x60")
    parser.add_argument("--out", metavar="DIR", dest="out_dir")
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--emit-matrix", action="store_true", default=None,
                        dest="emit_matrix")


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        nx, _, ny = text.lower().partition("x")
        return int(nx), int(ny)
    except ValueError as exc:
        raise ConfigError(f"--grid expects NXxNY (e.g. 60x60), got {text!r}") from exc


def _flag_overrides(args: argparse.Namespace) -> dict:
    overrides = {}
    for key in ("preset", "seed", "n_units", "sigma0", "sigmac", "pai",
                "clamped", "rcond", "out_dir", "emit_matrix"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    if getattr(args, "grid", None):
        overrides["grid_nx"], overrides["grid_ny"] = _parse_grid(args.grid)
    threads = getattr(args, "threads", None)
    if threads is None and os.environ.get(ENV_THREADS):
        try:
            threads = int(os.environ[ENV_THREADS])
        except ValueError as exc:
            raise ConfigError(f"{ENV_THREADS} must be an integer") from exc
    if threads is not None:
        overrides["threads"] = threads
    return overrides


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    file_overrides = parse_config_file(args.config) if args.config else {}
    return build_config(file_overrides=file_overrides,
                        flag_overrides=_flag_overrides(args))


def _cmd_solve(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    result = execute_run(cfg)
    write_report(out_dir / "report", result)
    _emit_outputs(result, out_dir)
    print(f"preset={cfg.preset} seed={cfg.seed} "
          f"residual_mean_abs={result.report.residual_mean_abs:.6e}"
          + (f" error_mean_abs={result.error.mean_abs:.6e}" if result.error else "")
          + f" time_s={result.total_time_s:.3f}")
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    spec = parse_sweep_file(args.spec, cfg) if args.spec else default_sweep_spec(cfg)
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = run_sweep(spec, threads=cfg.threads)
    write_sweep_csv(spec, rows, out_dir / "sweep.csv")
    failed = sum(r.status != "ok" for r in rows)
    print(f"sweep complete: {len(rows)} cells, {failed} failed -> "
          f"{out_dir / 'sweep.csv'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbf-pielm",
        description="Mesh-free Gaussian RBF collocation solver for linear PDEs",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    solve = sub.add_parser("solve", help="run one configured solve")
    _add_common_flags(solve)
    solve.set_defaults(func=_cmd_solve)
    sweep = sub.add_parser("sweep", help="run a hyperparameter sweep")
    _add_common_flags(sweep)
    sweep.add_argument("--spec", metavar="PATH",
                       help="sweep axes file (default: the 10x10 width grid)")
    sweep.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags, matching the config exit code
        return int(exc.code or 0)
    try:
        return args.func(args)
    except RbfPielmError as exc:
        print(f"pipeline error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        # ConfigError and invalid argument values are both usage problems
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
