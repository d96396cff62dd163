"""Aggregated checks of a minimizer path, an assembled orbit or an integrated
trajectory.
"""

from __future__ import annotations

import logging

import numpy as np

from ..integrator import Trajectory
from ..minimizer import DiscretePath, boundary_residuals
from ..orbits import (
    Orbit,
    angle_distance,
    area_rule_angle,
    choreography_residual,
    euler_line_angle,
    isosceles_return_residual,
    klein_residuals,
)
from ..orbits.orbit import NUM_ARCS
from .cross_validation import orbit_from_trajectory
from .means import (
    DEFAULT_SAMPLES,
    action_identity_check,
    boundary_dilation_check,
    lagrange_jacobi_check,
    lemma8_check,
    mean_values,
    path_means,
    poincare_check,
    sundman_check,
)
from .report import CheckResult, VerificationReport, record, upper_check
from .starshape import (
    derivative_identity_check,
    euler_velocity_constraint,
    starshape_check,
)

logger = logging.getLogger(__name__)

SIGN_PATTERN = [1, 1, -1, -1] * 3


def _euler_velocity_check(name: str, trajectory: Trajectory, t: float, tol: float):
    try:
        residual = euler_velocity_constraint(trajectory.state_at(t))
    except ValueError as error:
        return CheckResult(name, float("nan"), tol, False, str(error))
    return upper_check(name, residual, tol, f"t = {t:.8g}")


def choreography_check(orbit: Orbit, tol: float = 1e-5) -> CheckResult:
    return upper_check("choreography", choreography_residual(orbit), tol)


def klein_check(orbit: Orbit, tol: float = 1e-5) -> list[CheckResult]:
    """Residuals of the two reflection symmetries of the eight."""
    return [
        upper_check(f"klein.{name}", value, tol)
        for name, value in klein_residuals(orbit).items()
    ]


def isosceles_return_check(orbit: Orbit, tol: float = 1e-5) -> CheckResult:
    value = isosceles_return_residual(orbit)
    return upper_check("isosceles_return", value, tol)


def angular_momentum_check(orbit: Orbit, tol: float = 1e-6) -> CheckResult:
    """Largest per-step ``|ω(x, ẋ)|`` over the grid."""
    value = np.max(np.abs(orbit.angular_momenta()))
    return upper_check("angular_momentum", value, tol)


def _mean_checks(means, ell0: float, rtol: float, energy_rtol: float, j_tol: float):
    checks = lemma8_check(means, ell0)
    checks += lagrange_jacobi_check(means, rtol, energy_rtol)
    checks.append(poincare_check(means))
    checks += action_identity_check(means, ell0, energy_rtol)
    checks.append(boundary_dilation_check(means, j_tol))
    return checks


def verify_trajectory(
    trajectory: Trajectory,
    ell0: float,
    defect_tol: float = 1e-5,
    drift_tol: float = 1e-9,
    rtol: float = 1e-6,
    samples: int = DEFAULT_SAMPLES,
) -> VerificationReport:
    """Checks one integrated period ``[0, Tbar]`` of the figure-eight.

    The trajectory must start at the collinear configuration with body 3 at
    the origin, as the published initial conditions do.
    """
    period = trajectory.t_end
    T = period / NUM_ARCS
    report = VerificationReport()

    defect = trajectory.periodicity_defect()
    report.add(upper_check("periodicity_defect", defect, defect_tol))
    for name, drift in [
        ("energy_drift", trajectory.drift("H")),
        ("angular_momentum_drift", trajectory.drift("C")),
        ("momentum_drift", trajectory.momentum_drift()),
    ]:
        report.add(upper_check(name, drift, drift_tol))
    for name in ("I", "U"):
        value = trajectory.relative_variation(name)
        report.add(record(f"relative_variation.{name}", value, "(max - min)/mean"))

    means = mean_values(trajectory, (0.0, T), samples)
    report.extend(_mean_checks(means, ell0, rtol, rtol, 1e-6))
    report.add(sundman_check(trajectory))

    for k in (0, 2):
        name = f"euler_velocity.t{k}T"
        report.add(_euler_velocity_check(name, trajectory, k * T, 1e-6))

    orbit = orbit_from_trajectory(trajectory)
    report.extend(starshape_check(orbit))
    report.add(derivative_identity_check(orbit))

    report.info.update(period=period, H=means.H, means=means.to_dict())
    logger.info(
        "Trajectory verification: %d/%d checks passed",
        len(report) - len(report.failed()),
        len(report),
    )
    return report


def verify_orbit(
    orbit: Orbit, ell0: float, tol: float = 1e-5, samples: int = DEFAULT_SAMPLES
) -> VerificationReport:
    """Checks the symmetries, the area rule and the mean values of an
    assembled orbit whose grid starts at a collinear configuration.
    """
    T = orbit.Tbar / NUM_ARCS
    report = VerificationReport()

    report.add(choreography_check(orbit, tol))
    report.extend(klein_check(orbit, tol))
    report.add(isosceles_return_check(orbit, tol))
    report.add(angular_momentum_check(orbit))

    signs = orbit.segment_signs()
    report.add(
        CheckResult(
            "segment_signs",
            float(signs[0]),
            None,
            signs in (SIGN_PATTERN, [-s for s in SIGN_PATTERN]),
            f"{signs}",
        )
    )

    third = angle_distance(area_rule_angle(orbit, 0, 4 * T), 0)
    report.add(upper_check("area_rule.third", third, 1e-4, "rotation over Tbar/3"))
    predicted = area_rule_angle(orbit, 0, 2 * T)
    measured = euler_line_angle(orbit, 0, 2 * T)
    report.add(
        upper_check("area_rule.sixth", angle_distance(predicted, measured), 1e-4)
    )

    trajectory = Trajectory.from_orbit(orbit)
    means = mean_values(trajectory, (0.0, T), samples)
    report.extend(_mean_checks(means, ell0, tol, tol, tol))
    report.add(sundman_check(trajectory))
    report.extend(starshape_check(orbit))
    report.add(derivative_identity_check(orbit))

    report.info.update(Tbar=orbit.Tbar, m=orbit.m, means=means.to_dict())
    return report


def verify_path(
    path: DiscretePath, ell0: float, boundary_tol: float = 1e-8
) -> VerificationReport:
    """Checks a minimizing twelfth-arc with the quadrature of the action."""
    report = VerificationReport()
    for name, value in boundary_residuals(path).items():
        report.add(upper_check(f"boundary.{name}", value, boundary_tol))

    means = path_means(path)
    report.extend(_mean_checks(means, ell0, 1e-6, 1e-5, 1e-6))
    report.add(sundman_check(Trajectory.from_path(path)))

    report.info.update(n=path.n, T=path.T, means=means.to_dict())
    return report
