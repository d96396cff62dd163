import numpy as np
import pytest

from figure_eight.integrator import SIMO_PERIOD, simo_initial_state
from figure_eight.orbits import Orbit
from figure_eight.shapes import State
from figure_eight.verification import (
    angular_momentum_curve,
    starshape_check,
    derivative_identity_check,
    euler_velocity_constraint,
    orbit_from_trajectory,
)

STARSHAPE = [
    "starshape.first_half",
    "starshape.second_half",
    "starshape.origin_crossings",
    "starshape.monotone",
    "starshape.polar_angle",
]


def test_starshape_built_orbit(built_orbit):
    checks = starshape_check(built_orbit)
    assert [check.name for check in checks] == STARSHAPE
    for check in checks:
        assert check.passed, str(check)
    assert checks[2].detail == f"samples [0, {built_orbit.m // 2}]"
    return


def test_starshape_simo(simo_trajectory):
    orbit = orbit_from_trajectory(simo_trajectory)
    assert all(check.passed for check in starshape_check(orbit))

    momentum = angular_momentum_curve(orbit)
    assert momentum.shape == (orbit.m,)
    assert abs(momentum[0]) < 1e-6 * np.max(np.abs(momentum))
    return


def test_starshape_orientation(built_orbit):
    checks = starshape_check(built_orbit)
    assert checks[0].detail.startswith("orientation -1")

    # the mirror image and the time reversal run the first lobe anticlockwise
    q = built_orbit.q
    mirrored = Orbit(built_orbit.Tbar, q * [1, -1])
    reversed_ = Orbit(built_orbit.Tbar, np.roll(q[::-1], 1, axis=0))
    assert np.array_equal(reversed_.q[0], q[0])
    for orbit in (mirrored, reversed_):
        checks = {check.name: check for check in starshape_check(orbit)}
        assert checks["starshape.first_half"].detail.startswith("orientation +1")
        assert not checks["starshape.first_half"].passed
        assert not checks["starshape.second_half"].passed
        assert not checks["starshape.polar_angle"].passed
        assert checks["starshape.origin_crossings"].passed
    return


def test_starshape_fails_for_circle():
    m = 1200
    s = 2 * np.pi * np.arange(m) / m
    circle = Orbit(2 * np.pi, np.stack([np.cos(s), np.sin(s)], axis=1))
    checks = {check.name: check for check in starshape_check(circle)}
    # q ∧ q̇ stays positive and q never reaches the origin
    assert not checks["starshape.first_half"].passed
    assert checks["starshape.second_half"].passed
    assert "first violation" in checks["starshape.first_half"].detail
    assert not checks["starshape.origin_crossings"].passed
    return


def test_derivative_identity(built_orbit, simo_trajectory):
    check = derivative_identity_check(built_orbit)
    assert check.name == "starshape.derivative_identity"
    assert check.passed

    assert derivative_identity_check(orbit_from_trajectory(simo_trajectory)).passed
    return


def test_euler_velocity_constraint(simo_trajectory):
    s0 = simo_initial_state()
    assert euler_velocity_constraint(s0) < 1e-15

    sixth = simo_trajectory.state_at(SIMO_PERIOD / 6)
    assert euler_velocity_constraint(sixth) < 1e-6

    with pytest.raises(ValueError):
        euler_velocity_constraint(simo_trajectory.state_at(SIMO_PERIOD / 12))

    # breaking the velocity pattern while keeping the total momentum zero
    values = s0.flatten()
    values[6] += 1e-3
    values[8] -= 1e-3
    assert euler_velocity_constraint(State.from_flat(values)) > 1e-4
    return
