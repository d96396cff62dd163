import numpy as np
import pytest

from figure_eight.bounds import (
    collision_bound_A2,
    semi_major_axis,
    kepler_ejection_action,
    kepler_ejection_separation,
)


def test_semi_major_axis():
    assert np.isclose(semi_major_axis(np.pi), 2 ** (1 / 3))
    with pytest.raises(ValueError):
        semi_major_axis(-1)
    return


def test_kepler_ejection_action():
    for T in [1.0, 2 * np.pi / 12, 4.0]:
        assert abs(kepler_ejection_action(T) - collision_bound_A2(T)) < 1e-10
    return


def test_kepler_ejection_separation():
    T = 1.0
    a = semi_major_axis(T)
    rho = kepler_ejection_separation([0, T / 2, T], T)
    assert np.isclose(rho[0], 2 * a)
    assert 0 < rho[1] < 2 * a
    assert abs(rho[2]) < 1e-8

    tau = np.linspace(0, 0.9 * T, 200)
    rho = kepler_ejection_separation(tau, T)
    assert np.all(np.diff(rho) < 0)

    # ρ̈ = -2/ρ² by finite differences
    h = tau[1] - tau[0]
    accel = (rho[2:] - 2 * rho[1:-1] + rho[:-2]) / h**2
    assert np.allclose(accel, -2 / rho[1:-1] ** 2, rtol=1e-3)

    with pytest.raises(ValueError):
        kepler_ejection_separation(1.5 * T, T)
    return
