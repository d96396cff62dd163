"""Command line interface ``eight``.

Exit codes: 0 when every check passes, 1 when a check or a stage fails and
2 for invalid input or configuration.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from dataclasses import asdict
from pathlib import Path

from ..bounds import bounds_report
from ..equipotential import trace_arc, write_samples_csv
from ..integrator import Trajectory, monodromy, read_trajectory_csv
from ..minimizer import DiscretePath
from ..orbits import Orbit, build_orbit
from ..setup import DefaultRunConfig, RunConfig
from ..util.errors import (
    ConvergenceError,
    IntegrationError,
    JunctionError,
    StageError,
)
from ..util.io import dumps_json, read_csv, read_json, write_json
from ..verification import (
    VerificationReport,
    orbit_from_trajectory,
    verify_orbit,
    verify_path,
    verify_trajectory,
)
from .export import CURVE_COLUMNS, FORMATS, export_curve, read_curve_csv
from .pipeline import (
    compute_length,
    minimize_summary,
    resolve_ell0,
    run_integration,
    run_minimizer,
    run_pipeline,
)

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INVALID = 2

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)

# command line flag -> RunConfig parameter
OVERRIDES = {
    "period": "period",
    "segments": "segments",
    "levels": "levels",
    "tol": None,
    "max_iter": "max_iter",
    "samples": None,
    "ics": "ics",
    "t_end": "t_end",
    "ell0": "ell0",
    "output_dir": "output_dir",
    "refine_period": "refine_period",
}
TOLERANCE_PARAMS = {
    "length": "length_tol",
    "minimize": "minimize_tol",
    "integrate": "integrate_tol",
}
SAMPLE_PARAMS = {"build": "samples", "integrate": "trajectory_samples"}


def ell0_type(value: str) -> float | str:
    if value == "auto":
        return value
    return float(value)


def _write(obj: object) -> None:
    sys.stdout.write(dumps_json(obj) + "\n")
    return


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eight",
        description="Reconstruction and verification of the figure-eight "
        "solution of the three-body problem.",
    )
    parser.add_argument("--config", type=Path, help="YAML file with a run block.")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v info, -vv debug."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    length = commands.add_parser("length", help="Length of the Euler equipotential.")
    length.add_argument("--tol", type=float)
    length.add_argument("--csv", type=Path, help="Store the traced arc samples.")
    length.add_argument("--points", type=int, default=64)
    length.add_argument("--out", type=Path)

    bounds = commands.add_parser("bounds", help="Collision bounds and test action.")
    bounds.add_argument("--period", type=float)
    bounds.add_argument("--ell0", type=ell0_type)

    minimize = commands.add_parser("minimize", help="Minimize the action of an arc.")
    minimize.add_argument("--segments", type=int)
    minimize.add_argument("--levels", type=int)
    minimize.add_argument("--period", type=float)
    minimize.add_argument("--tol", type=float)
    minimize.add_argument("--max-iter", type=int)
    minimize.add_argument("--ell0", type=ell0_type)
    minimize.add_argument("--seed-path", type=Path, help="Arc JSON to start from.")
    minimize.add_argument("--out", type=Path)

    build = commands.add_parser("build", help="Assemble the orbit from an arc.")
    build.add_argument("--in", dest="input", type=Path, required=True)
    build.add_argument("--out", type=Path)
    build.add_argument("--samples", type=int)

    integrate = commands.add_parser("integrate", help="Integrate initial conditions.")
    integrate.add_argument("--ics", help="'simo' or a JSON/CSV file with 12 numbers.")
    integrate.add_argument("--t-end", type=float)
    integrate.add_argument("--tol", type=float)
    integrate.add_argument("--samples", type=int)
    integrate.add_argument("--refine-period", action="store_const", const=True)
    integrate.add_argument("--monodromy", action="store_true")
    integrate.add_argument("--netcdf", type=Path)
    integrate.add_argument("--out", type=Path)

    verify = commands.add_parser("verify", help="Check an arc, orbit or trajectory.")
    verify.add_argument("--in", dest="input", type=Path, required=True)
    verify.add_argument("--ell0", type=ell0_type)
    verify.add_argument("--report", type=Path)

    run = commands.add_parser("run", help="Run the whole pipeline.")
    run.add_argument("--period", type=float)
    run.add_argument("--segments", type=int)
    run.add_argument("--levels", type=int)
    run.add_argument("--ics")
    run.add_argument("--t-end", type=float)
    run.add_argument("--ell0", type=ell0_type)
    run.add_argument("--output-dir")

    export = commands.add_parser("export", help="Dump an orbit as CSV, JSON or SVG.")
    export.add_argument("--in", dest="input", type=Path, required=True)
    export.add_argument("--format", choices=FORMATS)
    export.add_argument("--out", type=Path, required=True)
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    """Reads ``--config`` and applies the flags given on the command line."""
    if args.config is None:
        config = DefaultRunConfig()
    else:
        config = RunConfig.from_yaml(args.config)
    for flag, param in OVERRIDES.items():
        value = getattr(args, flag, None)
        if value is None:
            continue
        if flag == "tol":
            param = TOLERANCE_PARAMS[args.command]
        elif flag == "samples":
            param = SAMPLE_PARAMS[args.command]
        config.set_param(param, value)
    return config


def load_input(filename: Path) -> DiscretePath | Orbit | Trajectory:
    """Reads an arc or orbit JSON, an orbit curve CSV or a trajectory CSV."""
    suffix = filename.suffix.lower()
    if suffix == ".csv":
        columns, _ = read_csv(filename)
        if list(columns) == list(CURVE_COLUMNS):
            return read_curve_csv(filename)
        return read_trajectory_csv(filename)
    if suffix == ".json":
        data = read_json(filename)
        if isinstance(data, dict) and "nodes" in data:
            return DiscretePath.from_dict(data)
        if isinstance(data, dict) and "Tbar" in data:
            return Orbit.from_dict(data)
        raise ValueError(f"The file {filename} holds neither an arc nor an orbit.")
    raise ValueError(f"Cannot read '{suffix}' files, use .csv or .json.")


def load_orbit(filename: Path) -> Orbit:
    data = load_input(filename)
    if isinstance(data, Orbit):
        return data
    if isinstance(data, Trajectory):
        return orbit_from_trajectory(data)
    raise ValueError(f"The file {filename} does not hold an orbit.")


def cmd_length(args: argparse.Namespace, config: RunConfig) -> int:
    result = compute_length(config)
    if args.csv is not None:
        write_samples_csv(trace_arc(args.points), args.csv)
    if args.out is not None:
        write_json(asdict(result), args.out)
    _write(asdict(result))
    return EXIT_PASS


def cmd_bounds(args: argparse.Namespace, config: RunConfig) -> int:
    ell0, _ = resolve_ell0(config)
    report = bounds_report(ell0, config.param("period"))
    _write(report.to_dict())
    return EXIT_PASS if report.gate_passed else EXIT_FAIL


def cmd_minimize(args: argparse.Namespace, config: RunConfig) -> int:
    ell0, _ = resolve_ell0(config)
    seed = None if args.seed_path is None else DiscretePath.from_json(args.seed_path)
    reports = run_minimizer(config, ell0, seed)
    out = args.out if args.out is not None else config.param("arc_file")
    reports[-1].path.to_json(out)
    _write(minimize_summary(reports))
    return EXIT_PASS if reports[-1].converged else EXIT_FAIL


def cmd_build(args: argparse.Namespace, config: RunConfig) -> int:
    arc = DiscretePath.from_json(args.input)
    orbit = build_orbit(arc, samples=config.param("samples"))
    out = args.out if args.out is not None else config.param("orbit_file")
    orbit.to_json(out)
    _write(dict(Tbar=orbit.Tbar, m=orbit.m, file=str(out)))
    return EXIT_PASS


def cmd_integrate(args: argparse.Namespace, config: RunConfig) -> int:
    s0, period, trajectory = run_integration(config)
    out = args.out if args.out is not None else config.param("trajectory_file")
    trajectory.to_csv(out)
    if args.netcdf is not None:
        trajectory.to_netcdf(args.netcdf)
    summary = dict(
        t_end=period,
        periodicity_defect=trajectory.periodicity_defect(),
        energy_drift=trajectory.drift("H"),
        angular_momentum_drift=trajectory.drift("C"),
        **trajectory.stats,
    )
    if args.monodromy:
        result = monodromy(s0, period, tol=config.param("monodromy_tol"))
        summary["monodromy"] = result.to_dict()
    _write(summary)
    return EXIT_PASS


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    data = load_input(args.input)
    ell0, _ = resolve_ell0(config)
    verifiers: dict[type, Callable[..., VerificationReport]] = {
        DiscretePath: verify_path,
        Orbit: verify_orbit,
        Trajectory: verify_trajectory,
    }
    report = verifiers[type(data)](data, ell0)
    report.info["ell0"] = ell0
    if args.report is not None:
        report.to_json(args.report)
    sys.stdout.write(report.summary() + "\n")
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_run(args: argparse.Namespace, config: RunConfig) -> int:
    report = run_pipeline(config)
    sys.stdout.write(report.summary() + "\n")
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_export(args: argparse.Namespace, config: RunConfig) -> int:
    orbit = load_orbit(args.input)
    export_curve(orbit, args.out, args.format)
    return EXIT_PASS


COMMANDS = {
    "length": cmd_length,
    "bounds": cmd_bounds,
    "minimize": cmd_minimize,
    "build": cmd_build,
    "integrate": cmd_integrate,
    "verify": cmd_verify,
    "run": cmd_run,
    "export": cmd_export,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = LOG_LEVELS[min(args.verbose, len(LOG_LEVELS) - 1)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        config = load_config(args)
        logger.debug("Configuration: %r", config)
        return COMMANDS[args.command](args, config)
    except StageError as error:
        sys.stderr.write(f"eight: stage '{error.stage}' failed: {error}\n")
        return EXIT_FAIL
    except (ConvergenceError, IntegrationError, JunctionError) as error:
        sys.stderr.write(f"eight: {args.command} failed: {error}\n")
        return EXIT_FAIL
    except (ValueError, TypeError, KeyError, OSError) as error:
        sys.stderr.write(f"eight: error: {error}\n")
        return EXIT_INVALID
