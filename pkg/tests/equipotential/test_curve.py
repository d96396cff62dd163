import numpy as np
import pytest
from scipy.optimize import bisect

from figure_eight.equipotential import (
    EquipotentialSample,
    implicit_F,
    implicit_F_partials,
    newton_phi,
    slope,
    saddle_slope,
    solve_phi,
    solve_phi_at_euler,
    trace_arc,
    arc_arrays,
    refine_arc,
    arc_grid,
)
from figure_eight.util.errors import ConvergenceError


def test_implicit_F():
    assert abs(implicit_F(0, 0)) < 1e-15
    assert np.isclose(implicit_F(0, np.pi / 2), 3 - 5 / np.sqrt(2))
    assert np.isinf(implicit_F(np.pi, 0))

    values = implicit_F(np.zeros(4), np.linspace(0.1, 0.4, 4))
    assert values.shape == (4,)
    return


def test_implicit_F_symmetries():
    rng = np.random.default_rng(3)
    theta = rng.uniform(0.1, 1.0, size=50)
    phi = rng.uniform(0.5, 1.2, size=50)

    F = implicit_F(theta, phi)
    assert np.max(np.abs(implicit_F(theta + 2 * np.pi / 3, phi) - F)) < 1e-14
    assert np.max(np.abs(implicit_F(-theta, phi) - F)) < 1e-14
    assert np.max(np.abs(implicit_F(theta, -phi) - F)) < 1e-14
    return


def test_implicit_F_partials():
    rng = np.random.default_rng(4)
    theta = rng.uniform(0.1, 1.0, size=10)
    phi = rng.uniform(0.5, 1.2, size=10)
    eps = 1e-6

    partials = implicit_F_partials(theta, phi)
    F_theta = (implicit_F(theta + eps, phi) - implicit_F(theta - eps, phi)) / (2 * eps)
    F_phi = (implicit_F(theta, phi + eps) - implicit_F(theta, phi - eps)) / (2 * eps)
    assert np.allclose(partials.F_theta, F_theta, atol=1e-8)
    assert np.allclose(partials.F_phi, F_phi, atol=1e-8)

    F_pp = (
        implicit_F_partials(theta, phi + eps).F_phi
        - implicit_F_partials(theta, phi - eps).F_phi
    ) / (2 * eps)
    F_tp = (
        implicit_F_partials(theta, phi + eps).F_theta
        - implicit_F_partials(theta, phi - eps).F_theta
    ) / (2 * eps)
    F_tt = (
        implicit_F_partials(theta + eps, phi).F_theta
        - implicit_F_partials(theta - eps, phi).F_theta
    ) / (2 * eps)
    assert np.allclose(partials.F_phi_phi, F_pp, atol=1e-7)
    assert np.allclose(partials.F_theta_phi, F_tp, atol=1e-7)
    assert np.allclose(partials.F_theta_theta, F_tt, atol=1e-7)
    return


def test_solve_phi():
    top = solve_phi(np.pi / 3)
    assert isinstance(top, EquipotentialSample)
    assert 0 < top.phi < np.pi / 2
    assert abs(implicit_F(np.pi / 3, top.phi)) < 1e-13
    assert abs(top.phi_prime) < 1e-10

    middle = solve_phi(np.pi / 6)
    assert abs(implicit_F(np.pi / 6, middle.phi)) < 1e-13
    oracle = bisect(lambda p: implicit_F(np.pi / 6, p), 1e-3, np.pi / 2, xtol=1e-15)
    assert abs(middle.phi - oracle) < 1e-12
    assert np.isclose(middle.phi_prime, slope(np.pi / 6, middle.phi))

    seeded = solve_phi(np.pi / 6, seed=middle.phi + 0.01)
    assert abs(seeded.phi - middle.phi) < 1e-13

    with pytest.raises(ValueError):
        solve_phi(0)
    with pytest.raises(ValueError):
        solve_phi(1.1)
    return


def test_solve_phi_at_euler():
    euler = solve_phi_at_euler()
    assert euler.theta == 0 and euler.phi == 0
    assert 0 < euler.phi_prime < np.inf
    assert np.isclose(euler.phi_prime, saddle_slope())

    theta = 1e-4
    sample = solve_phi(theta)
    assert sample.phi > 0
    assert abs(sample.phi / (saddle_slope() * theta) - 1) < 1e-2
    return


def test_newton_phi():
    theta = np.array([0.3, 0.6, 0.9])
    seed = np.array([solve_phi(t).phi for t in theta]) + 0.02
    phi = newton_phi(theta, seed)
    assert np.max(np.abs(implicit_F(theta, phi))) < 1e-13

    with pytest.raises(ConvergenceError) as error:
        newton_phi(theta, seed, max_iter=1)
    assert error.value.gap > 0
    return


def test_trace_arc():
    samples = trace_arc(64)
    assert len(samples) == 65

    theta, phi, phi_prime = arc_arrays(samples).T
    assert np.allclose(theta, np.linspace(0, np.pi / 3, 65))
    assert phi[0] == 0
    assert np.all(np.diff(phi) > 0)
    assert np.max(np.abs(implicit_F(theta[1:], phi[1:]))) < 1e-13
    assert np.all(phi_prime[:-1] > 0)

    with pytest.raises(ValueError):
        trace_arc(0)
    return


def test_refine_arc():
    coarse = arc_arrays(trace_arc(16))
    new_theta = np.linspace(0, np.pi / 3, 101)
    phi, phi_prime = refine_arc(coarse[:, 0], coarse[:, 1], new_theta)

    assert phi[0] == 0 and phi_prime[0] == saddle_slope()
    assert np.max(np.abs(implicit_F(new_theta[1:], phi[1:]))) < 1e-13

    theta, grid_phi, grid_slope = arc_grid(100, n_trace=16)
    assert np.allclose(theta, new_theta)
    assert np.allclose(grid_phi, phi, rtol=0, atol=1e-14)
    assert np.allclose(grid_slope, phi_prime, rtol=0, atol=1e-12)
    return
