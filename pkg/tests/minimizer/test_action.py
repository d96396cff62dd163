import numpy as np
import pytest

from figure_eight.bounds import collision_bound_A2, kepler_ejection_separation
from figure_eight.minimizer import (
    DiscretePath,
    discrete_action,
    action_gradient,
    relative_action,
    three_mass_action,
    trapezoid_weights,
    observed_order,
)
from figure_eight.shapes import from_complex, potential_array

D = 1 / np.sqrt(2)
E3_POSITIONS = np.array([[D, 0], [-D, 0], [0, 0]])
ROOTS = np.exp(2j * np.pi * np.arange(3) / 3)


def breathing_path(n: int, T: float = 1.0) -> DiscretePath:
    """Rotating equilateral triangle with an oscillating size."""
    t = np.linspace(0, T, n + 1)[:, None]
    z = (1 + 0.3 * np.sin(t)) * np.exp(1j * t) * ROOTS
    return DiscretePath(T, from_complex(z))


def random_path(n: int, seed: int = 0) -> DiscretePath:
    rng = np.random.default_rng(seed)
    positions = breathing_path(n).positions + 0.1 * rng.normal(size=(n + 1, 3, 2))
    positions -= positions.mean(axis=1, keepdims=True)
    return DiscretePath(1.0, positions)


def test_trapezoid_weights():
    assert np.allclose(trapezoid_weights(3), [0.5, 1, 1, 0.5])
    assert np.allclose(trapezoid_weights(1), [0.5, 0.5])
    return


def test_discrete_action():
    path = DiscretePath(1, np.array([E3_POSITIONS] * 2))
    assert np.isclose(discrete_action(path), 5 / np.sqrt(2))

    path = DiscretePath(3, np.array([E3_POSITIONS] * 7))
    assert np.isclose(discrete_action(path), 3 * 5 / np.sqrt(2))

    collision = np.array([E3_POSITIONS, np.zeros((3, 2)), E3_POSITIONS])
    assert np.isinf(discrete_action(DiscretePath(1, collision)))
    return


def test_discrete_action_order():
    values = [discrete_action(breathing_path(n)) for n in (32, 64, 128)]
    order = observed_order(values)
    assert 1.9 <= order <= 2.1
    return


def test_action_gradient():
    path = random_path(6)
    gradient = action_gradient(path)
    assert gradient.shape == path.positions.shape

    eps = 1e-6
    numerical = np.zeros_like(gradient)
    for index in np.ndindex(*gradient.shape):
        delta = np.zeros_like(gradient)
        delta[index] = eps
        plus = relative_action(path.positions, delta, path.h)
        minus = relative_action(path.positions, -delta, path.h)
        numerical[index] = (plus - minus) / (2 * eps)

    error = np.linalg.norm(gradient - numerical) / np.linalg.norm(gradient)
    assert error < 1e-6
    return


def test_action_gradient_equilateral():
    # a central configuration: ∇U(x) = -(U/I) x
    path = DiscretePath(1, from_complex(np.array([ROOTS] * 5)))
    gradient = action_gradient(path)
    x = path.positions[0]
    U, inertia = potential_array(x), np.sum(x**2)
    for k in (1, 2, 3):
        assert np.allclose(gradient[k], -path.h * U / inertia * x)
        assert abs(np.sum(gradient[k] * x) + path.h * U) < 1e-12
    assert np.allclose(gradient[0], gradient[1] / 2)
    return


def test_relative_action():
    path = random_path(10, seed=3)
    rng = np.random.default_rng(4)
    for scale in (1e-2, 1e-5):
        delta = scale * rng.normal(size=path.positions.shape)
        delta -= delta.mean(axis=1, keepdims=True)
        moved = DiscretePath(1.0, path.positions + delta)
        expected = discrete_action(moved) - discrete_action(path)
        value = relative_action(path.positions, delta, path.h)
        assert abs(value - expected) < 1e-12
    assert relative_action(path.positions, np.zeros_like(delta), path.h) == 0
    return


def test_three_mass_action():
    path = random_path(20, seed=5)
    value = three_mass_action((1, 1, 1), path)
    assert abs(value - discrete_action(path)) < 1e-13

    for seed in range(5):
        path = random_path(20, seed=seed)
        full = three_mass_action((1, 1, 1), path)
        for masses in [(0, 1, 1), (1, 0, 1), (1, 1, 0), (0.5, 1, 1)]:
            assert three_mass_action(masses, path) < full

    with pytest.raises(ValueError):
        three_mass_action((1, 1), path)
    with pytest.raises(ValueError):
        three_mass_action((-1, 1, 1), path)
    return


def test_three_mass_action_kepler_limit():
    # bodies 2 and 3 on a collision-free part of the Kepler ejection orbit,
    # body 1 at rest at a distance d
    T, n = 2 * np.pi / 12, 2000
    duration = 0.9 * T
    rho = kepler_ejection_separation(np.linspace(0, duration, n + 1), T)

    def kepler_path(d: float) -> DiscretePath:
        positions = np.zeros((n + 1, 3, 2))
        positions[:, 0, 0] = 2 * d / 3
        positions[:, 1] = np.stack([np.full(n + 1, -d / 3), rho / 2], axis=-1)
        positions[:, 2] = np.stack([np.full(n + 1, -d / 3), -rho / 2], axis=-1)
        return DiscretePath(duration, positions)

    binary = three_mass_action((0, 1, 1), kepler_path(10))
    assert binary < collision_bound_A2(T)

    gaps = []
    for d in (10, 100, 1000):
        path = kepler_path(d)
        assert np.isclose(three_mass_action((0, 1, 1), path), binary)
        gap = three_mass_action((1, 1, 1), path) - binary
        assert gap > 0
        assert abs(gap * d / (2 * duration) - 1) < 1e-2
        gaps.append(gap)
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-3
    return
