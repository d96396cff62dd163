import numpy as np
import pytest

from figure_eight.bounds import optimal_test_action
from figure_eight.equipotential import (
    arclength_table,
    horizontal_lift,
    reduced_test_path,
    implicit_F,
)
from figure_eight.minimizer import DiscretePath, boundary_residuals, discrete_action
from figure_eight.shapes import (
    from_complex,
    moment_of_inertia,
    named_points,
    shape_array,
    wedge,
)

PERIOD = 2 * np.pi / 12
TEST_ACTION = 2.0359763


def test_arclength_table(ell0):
    theta, phi, s = arclength_table(4096)
    assert s[0] == 0
    assert np.all(np.diff(s) > 0)
    assert abs(s[-1] - ell0) < 1e-12
    assert len(theta) == len(phi) == 4097
    return


def test_horizontal_lift():
    rng = np.random.default_rng(7)
    z = rng.normal(size=(10, 3)) + 1j * rng.normal(size=(10, 3))
    z -= z.mean(axis=1, keepdims=True)
    lifted = horizontal_lift(from_complex(z))

    omega = np.sum(wedge(lifted[:-1], lifted[1:]), axis=-1)
    assert np.max(np.abs(omega)) < 1e-12
    assert np.allclose(lifted[0], from_complex(z[0]))
    # rotations keep the shapes
    assert np.allclose(shape_array(lifted), shape_array(from_complex(z)))
    return


def test_reduced_test_path(ell0):
    I0 = 1.3
    path = reduced_test_path(I0, PERIOD, 64)
    assert isinstance(path, DiscretePath)
    assert path.n == 64 and np.isclose(path.T, PERIOD)

    inertia = [moment_of_inertia(c) for c in path.nodes]
    assert np.allclose(inertia, I0)

    shapes = shape_array(path.positions) / I0
    assert np.allclose(shapes[0], named_points()["E3"].as_array(), atol=1e-12)
    assert np.all(shapes[1:, 2] > 0)
    assert abs(shapes[-1, 1]) < 1e-12

    residuals = boundary_residuals(path)
    assert residuals["euler"] < 1e-10
    assert residuals["isosceles"] < 1e-10

    theta = np.arctan2(shapes[:, 1], shapes[:, 0]) - 2 * np.pi / 3
    phi = np.arcsin(shapes[:, 2])
    assert np.max(np.abs(implicit_F(theta[1:-1], phi[1:-1]))) < 1e-10

    steps = np.diff(path.positions, axis=0)
    omega = np.sum(wedge(path.positions[:-1], steps), axis=-1)
    assert np.max(np.abs(omega)) < 1e-10

    # constant speed along the arc
    speeds = np.linalg.norm(steps.reshape(64, 6), axis=-1)
    assert np.allclose(speeds, ell0 * np.sqrt(I0) / 64, rtol=1e-3)

    with pytest.raises(ValueError):
        reduced_test_path(0, PERIOD, 64)
    with pytest.raises(ValueError):
        reduced_test_path(I0, PERIOD, 1)
    return


def test_reduced_test_path_action(ell0):
    I0_star, a = optimal_test_action(ell0, PERIOD)
    path = reduced_test_path(I0_star, PERIOD, 4096)
    assert abs(discrete_action(path) - TEST_ACTION) < 1e-4
    assert abs(discrete_action(path) - a) < 1e-4
    return
