"""The pipeline length → bounds → minimize → build → integrate → verify."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import asdict
from pathlib import Path
from time import perf_counter

from ..bounds import bounds_report, optimal_test_action, simo_action_values
from ..equipotential import LengthResult, euler_length, reduced_test_path
from ..integrator import (
    SIMO_PERIOD,
    MonodromyResult,
    Trajectory,
    integrate,
    load_state,
    monodromy,
    refine_period,
    simo_initial_state,
)
from ..minimizer import (
    DiscretePath,
    MinimizeReport,
    minimize_multilevel,
    observed_order,
)
from ..orbits import Orbit, build_orbit
from ..setup import RunConfig
from ..shapes import State
from ..util.errors import (
    CollisionError,
    ConvergenceError,
    IntegrationError,
    JunctionError,
    StageError,
)
from ..util.io import write_json
from ..verification import (
    CheckResult,
    VerificationReport,
    cross_validate,
    lower_check,
    orbit_from_trajectory,
    record,
    upper_check,
    verify_orbit,
    verify_path,
    verify_trajectory,
)
from ..verification.cross_validation import HAUSDORFF_TOL
from .export import export_curve

logger = logging.getLogger(__name__)

MIN_SEPARATION = 0.1
MAX_ANGULAR_MOMENTUM = 1e-6
DETERMINANT_TOL = 1e-6
MODULUS_TOL = 1e-3

# numerical failures, tagged with their stage even when they subclass ValueError
STAGE_FAILURES = (CollisionError, ConvergenceError, IntegrationError, JunctionError)


@contextmanager
def stage(name: str) -> Iterator[None]:
    """Times a stage and tags its numerical failures with the stage name.

    Invalid inputs (``ValueError``, ``TypeError``, ``OSError``) propagate
    unchanged, except for the ``STAGE_FAILURES`` such as ``CollisionError``.
    Every other exception becomes a ``StageError``.
    """
    start = perf_counter()
    logger.info("Stage '%s' started", name)
    try:
        yield
    except STAGE_FAILURES as error:
        raise StageError(f"{type(error).__name__}: {error}", stage=name) from error
    except (ValueError, TypeError, OSError):
        raise
    except Exception as error:
        raise StageError(f"{type(error).__name__}: {error}", stage=name) from error
    logger.info("Stage '%s' finished in %.2f s", name, perf_counter() - start)
    return


def compute_length(config: RunConfig) -> LengthResult:
    return euler_length(tol=config.param("length_tol"))


def resolve_ell0(config: RunConfig) -> tuple[float, LengthResult | None]:
    """Returns ``ℓ₀``, computing it when the configuration says ``"auto"``."""
    ell0 = config.param("ell0")
    if ell0 != "auto":
        return float(ell0), None
    result = compute_length(config)
    return result.ell0, result


def coarse_segments(segments: int, levels: int) -> int:
    """Number of segments of the first level of the multilevel minimization."""
    factor = 2 ** (levels - 1)
    if segments % factor != 0 or segments // factor < 2:
        raise ValueError(
            f"'segments' must be a multiple of 2^(levels - 1) = {factor} with at "
            f"least 2 segments on the coarsest level, but {segments} was given."
        )
    return segments // factor


def run_minimizer(
    config: RunConfig, ell0: float, seed: DiscretePath | None = None
) -> list[MinimizeReport]:
    """Minimizes the action from the test path, or from ``seed`` if given."""
    levels = config.param("levels")
    if seed is None:
        T = config.param("period")
        n = coarse_segments(config.param("segments"), levels)
        I0_star, _ = optimal_test_action(ell0, T)
        seed = reduced_test_path(I0_star, T, n)
    return minimize_multilevel(
        seed,
        levels=levels,
        tol=config.param("minimize_tol"),
        max_iter=config.param("max_iter"),
    )


def minimize_summary(reports: list[MinimizeReport]) -> dict[str, object]:
    last = reports[-1]
    summary = {
        "T": last.path.T,
        "n": last.path.n,
        "action": last.action,
        "gradient_norm": last.gradient_norm,
        "min_separation": last.min_separation,
        "max_angular_momentum": last.max_angular_momentum,
        "iterations": last.iterations,
        "converged": last.converged,
        "level_actions": [report.action for report in reports],
    }
    if len(reports) >= 3:
        summary["observed_order"] = observed_order(summary["level_actions"])
    return summary


def minimize_checks(reports: list[MinimizeReport], tol: float) -> list[CheckResult]:
    last = reports[-1]
    checks = [
        CheckResult(
            "minimize.converged",
            last.gradient_norm,
            tol,
            last.converged,
            "gradient norm",
        ),
        record("minimize.action", last.action),
        lower_check("minimize.min_separation", last.min_separation, MIN_SEPARATION),
        upper_check(
            "minimize.angular_momentum",
            last.max_angular_momentum,
            MAX_ANGULAR_MOMENTUM,
        ),
    ]
    if len(reports) >= 3:
        actions = [report.action for report in reports]
        checks.append(record("minimize.observed_order", observed_order(actions)))
    return checks


def initial_state(config: RunConfig) -> State:
    ics = config.param("ics")
    if ics == "simo":
        return simo_initial_state()
    return load_state(ics)


def run_integration(
    config: RunConfig, s0: State | None = None
) -> tuple[State, float, Trajectory]:
    """Integrates the initial state over ``t_end``, or over the refined
    period when ``refine_period`` is set.
    """
    s0 = initial_state(config) if s0 is None else s0
    t_end = config.param("t_end")
    t_end = SIMO_PERIOD if t_end is None else t_end
    tol = config.param("integrate_tol")
    if config.param("refine_period"):
        t_end, defect = refine_period(s0, t_end, tol=tol)
        logger.info("Refined period %.12f with defect %.3e", t_end, defect)
    trajectory = integrate(
        s0, t_end, tol=tol, samples=config.param("trajectory_samples")
    )
    return s0, t_end, trajectory


def monodromy_checks(result: MonodromyResult) -> list[CheckResult]:
    return [
        upper_check(
            "monodromy.determinant",
            abs(result.determinant - 1),
            DETERMINANT_TOL,
            "|det M - 1|",
        ),
        upper_check(
            "monodromy.moduli",
            result.modulus_deviation(),
            MODULUS_TOL,
            "max ||lambda| - 1|",
        ),
        record("monodromy.unit_eigenvalues", result.num_unit_eigenvalues()),
    ]


def verify_all(
    path: DiscretePath,
    orbit: Orbit,
    trajectory: Trajectory,
    ell0: float,
    threads: int = 1,
) -> VerificationReport:
    """Runs the three independent verifications on up to ``threads`` workers
    and merges them in a fixed order.
    """
    report = VerificationReport()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            ("path.", pool.submit(verify_path, path, ell0)),
            ("orbit.", pool.submit(verify_orbit, orbit, ell0)),
            ("trajectory.", pool.submit(verify_trajectory, trajectory, ell0)),
        ]
        for prefix, future in futures:
            report.merge(future.result(), prefix=prefix)
    return report


def run_pipeline(config: RunConfig) -> VerificationReport:
    """Runs every stage, writes the artifacts and the combined report.

    Returns
    -------
    report
        All checks of the run. The run succeeds iff ``report.passed``.

    Raises
    ------
    ValueError, TypeError, OSError
        For invalid configurations or input files.
    StageError
        If a stage fails numerically, e.g. the minimizer does not converge.
    """
    if not isinstance(config, RunConfig):
        raise TypeError(f"'config' must be a RunConfig, but {type(config)} was given.")
    output_dir = Path(config.param("output_dir"))
    output_dir.mkdir(parents=True, exist_ok=True)
    report = VerificationReport()
    T = config.param("period")
    s0 = initial_state(config)

    with stage("length"):
        ell0, length = resolve_ell0(config)
        if length is not None:
            write_json(asdict(length), config.param("length_file"))
        report.info["ell0"] = ell0

    with stage("bounds"):
        bounds = bounds_report(ell0, T)
        write_json(bounds.to_dict(), config.param("bounds_file"))
        gate = CheckResult("bounds.gate", bounds.a, bounds.A2, bounds.gate_passed)
        report.add(gate)
        report.info["bounds"] = bounds.to_dict()
        report.info["published"] = simo_action_values()

    with stage("minimize"):
        reports = run_minimizer(config, ell0)
        arc = reports[-1]
        arc.path.to_json(config.param("arc_file"))
        report.extend(minimize_checks(reports, config.param("minimize_tol")))
        report.info["minimize"] = minimize_summary(reports)

    with stage("build"):
        orbit = build_orbit(arc.path, samples=config.param("samples"))
        orbit.to_json(config.param("orbit_file"))

    with stage("integrate"):
        s0, period, trajectory = run_integration(config, s0)
        trajectory.to_csv(config.param("trajectory_file"))
        if config.param("netcdf"):
            trajectory.to_netcdf(config.param("netcdf_file"))
        report.info["integrate"] = dict(
            period=period, H=float(trajectory.invariants()["H"][0]), **trajectory.stats
        )

    with stage("monodromy"):
        result = monodromy(s0, period, tol=config.param("monodromy_tol"))
        report.extend(monodromy_checks(result))
        report.info["monodromy"] = result.to_dict()

    with stage("verify"):
        threads = config.param("threads")
        report.merge(verify_all(arc.path, orbit, trajectory, ell0, threads))

    with stage("cross_validate"):
        match = cross_validate(orbit, orbit_from_trajectory(trajectory))
        report.add(
            upper_check("cross_validation.hausdorff", match.hausdorff, HAUSDORFF_TOL)
        )
        report.info["cross_validation"] = match.to_dict()

    with stage("export"):
        export_curve(orbit, config.param("svg_file"))

    report.to_json(config.param("report_file"))
    logger.info(
        "Run finished: %d/%d checks passed",
        len(report) - len(report.failed()),
        len(report),
    )
    return report
