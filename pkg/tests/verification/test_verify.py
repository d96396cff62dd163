import numpy as np

from figure_eight.integrator import (
    integrate,
    lagrange_angular_velocity,
    lagrange_rotating_state,
)
from figure_eight.orbits import Orbit
from figure_eight.verification import (
    VerificationReport,
    choreography_check,
    klein_check,
    isosceles_return_check,
    angular_momentum_check,
    verify_path,
    verify_orbit,
    verify_trajectory,
)


def assert_passed(report: VerificationReport) -> None:
    assert report.passed, "\n".join(str(check) for check in report.failed())
    return


def test_verify_trajectory(simo_trajectory, ell0):
    report = verify_trajectory(simo_trajectory, ell0)
    assert_passed(report)

    names = [check.name for check in report]
    for name in [
        "periodicity_defect",
        "energy_drift",
        "angular_momentum_drift",
        "lemma8.mean_U",
        "lemma8.mean_abs_J",
        "lagrange_jacobi.K_equals_U",
        "poincare",
        "action.identity",
        "action.below_test_path",
        "boundary_J",
        "sundman",
        "euler_velocity.t0T",
        "euler_velocity.t2T",
        "starshape.first_half",
        "starshape.derivative_identity",
    ]:
        assert name in names

    assert report["relative_variation.I"].bound is None
    assert 1e-3 < report["relative_variation.I"].value < 0.5
    assert np.isclose(report.info["period"], simo_trajectory.t_end)
    assert np.isclose(report.info["H"], -1.28714, atol=1e-4)
    return


def test_verify_trajectory_fails_off_orbit(ell0):
    # a rotating equilateral triangle is periodic but not an eight
    period = 2 * np.pi / lagrange_angular_velocity(1.0)
    trajectory = integrate(lagrange_rotating_state(1.0), period)
    report = verify_trajectory(trajectory, ell0)
    assert not report.passed
    assert report["periodicity_defect"].passed
    assert report["energy_drift"].passed
    assert not report["euler_velocity.t0T"].passed
    assert not report["starshape.origin_crossings"].passed
    return


def test_verify_orbit(built_orbit, ell0):
    report = verify_orbit(built_orbit, ell0)
    assert_passed(report)
    assert report["segment_signs"].detail in (
        str([1, 1, -1, -1] * 3),
        str([-1, -1, 1, 1] * 3),
    )
    assert "area_rule.sixth" in report
    assert report.info["m"] == built_orbit.m
    return


def test_verify_path(minimized_arc, ell0):
    report = verify_path(minimized_arc.path, ell0)
    assert_passed(report)
    assert report["boundary.euler"].value < 1e-8
    assert report["action.below_test_path"].value == minimized_arc.action
    assert report.info["n"] == 1024

    data = report.to_dict()
    assert data["passed"] is True
    assert len(data["checks"]) == len(report)
    return


def test_symmetry_checks(built_orbit):
    assert choreography_check(built_orbit).passed
    assert [check.name for check in klein_check(built_orbit)] == [
        "klein.sigma",
        "klein.tau",
    ]
    assert all(check.passed for check in klein_check(built_orbit))
    assert isosceles_return_check(built_orbit).passed
    assert angular_momentum_check(built_orbit).passed

    # a circle run by the three bodies is a choreography without the Klein symmetry
    m = 1200
    s = 2 * np.pi * np.arange(m) / m
    circle = Orbit(2 * np.pi, np.stack([np.cos(s), np.sin(s)], axis=1))
    assert choreography_check(circle, tol=1e-10).passed
    assert not angular_momentum_check(circle).passed
    return
