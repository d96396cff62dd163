import numpy as np
import pytest

from figure_eight.shapes import (
    Configuration,
    State,
    potential,
    potential_gradient,
    scaled_potential,
    pairwise_distances,
    min_separation,
    hermitian_product,
    moment_of_inertia,
    kinetic_energy,
    dilation,
    angular_momentum,
    energy,
    lagrangian,
    reduced_kinetic,
    SCALED_U_EULER,
    SCALED_U_LAGRANGE,
)
from figure_eight.util.errors import CollisionError

D = 1 / np.sqrt(2)
E3_CONFIG = Configuration.from_bodies([D, 0], [-D, 0], [0, 0])
SIMO_X1 = np.array([0.97000436, -0.24308753])


def equilateral(inertia: float = 1) -> Configuration:
    angles = 2 * np.pi * np.arange(3) / 3
    radius = np.sqrt(inertia / 3)
    return Configuration.from_complex(radius * np.exp(1j * angles))


def test_potential():
    assert np.isclose(potential(E3_CONFIG), 5 / np.sqrt(2))
    assert np.isclose(scaled_potential(E3_CONFIG), SCALED_U_EULER)
    assert np.isclose(potential(equilateral()), 3)
    assert np.isclose(scaled_potential(equilateral(4)), SCALED_U_LAGRANGE)

    simo = Configuration.from_bodies(SIMO_X1, -SIMO_X1, [0, 0])
    assert np.allclose(pairwise_distances(simo.positions), [1, 1, 2], atol=1e-7)
    assert abs(potential(simo) - 2.5) < 1e-7

    collision = Configuration.from_bodies([1, 0], [-0.5, 0], [-0.5, 0])
    assert potential(collision) == np.inf
    assert min_separation(collision.positions) == 0
    return


def test_potential_gradient():
    rng = np.random.default_rng(2)
    step = 1e-6
    for _ in range(10):
        positions = rng.normal(size=(3, 2))
        grad = potential_gradient(positions)
        assert np.allclose(grad.sum(axis=0), 0, atol=1e-12)

        numeric = np.zeros((3, 2))
        for i in range(3):
            for k in range(2):
                shift = np.zeros((3, 2))
                shift[i, k] = step
                plus = np.sum(1 / pairwise_distances(positions + shift))
                minus = np.sum(1 / pairwise_distances(positions - shift))
                numeric[i, k] = (plus - minus) / (2 * step)
        scale = np.max(np.abs(grad))
        assert np.max(np.abs(grad - numeric)) < 1e-7 * scale

    grad = potential_gradient(E3_CONFIG.positions)
    assert np.allclose(grad[2], 0)

    stacked = np.stack([E3_CONFIG.positions, equilateral().positions])
    assert potential_gradient(stacked).shape == (2, 3, 2)
    return


def test_reduced_kinetic():
    rng = np.random.default_rng(11)
    c = Configuration.from_array(rng.normal(size=(3, 2)), recenter=True)

    rotation = Configuration(c.positions[:, ::-1] * [-1, 1])
    assert abs(reduced_kinetic(c, rotation)) < 1e-12

    assert np.isclose(reduced_kinetic(c, c), moment_of_inertia(c))

    for _ in range(10):
        c = Configuration.from_array(rng.normal(size=(3, 2)), recenter=True)
        v = Configuration.from_array(rng.normal(size=(3, 2)), recenter=True)
        s = State(c, v)
        omega = angular_momentum(s)
        k_red = reduced_kinetic(c, v)
        expected = kinetic_energy(v) - omega**2 / moment_of_inertia(c)
        assert abs(k_red - expected) < 1e-12 * kinetic_energy(v)
        assert -1e-12 <= k_red <= kinetic_energy(v) + 1e-12

    with pytest.raises(CollisionError):
        reduced_kinetic(Configuration.zeros(), c)
    return


def test_phase_space_quantities():
    x = equilateral()
    v = Configuration(2 * x.positions)
    s = State(x, v)

    assert np.isclose(dilation(s), 2)
    assert np.isclose(angular_momentum(s), 0)
    assert np.isclose(kinetic_energy(v), 4)
    assert np.isclose(energy(s), 2 - 3)
    assert np.isclose(lagrangian(s), 2 + 3)

    dot, omega = hermitian_product(x, x.rotated(np.pi / 2))
    assert abs(dot) < 1e-15
    assert np.isclose(omega, moment_of_inertia(x))
    return
