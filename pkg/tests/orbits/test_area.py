import numpy as np
import pytest

from figure_eight.orbits import (
    spherical_area,
    close_along_equator,
    area_rule_angle,
    euler_line_angle,
    angle_distance,
)

PERIOD = 2 * np.pi / 12


def equator(num_points: int = 100) -> np.ndarray:
    theta = 2 * np.pi * np.arange(num_points) / num_points
    return np.stack([np.cos(theta), np.sin(theta), np.zeros(num_points)], axis=1)


def test_spherical_area_equator():
    assert abs(spherical_area(equator()) - np.pi / 2) < 1e-6
    assert abs(spherical_area(equator()[::-1]) + np.pi / 2) < 1e-6
    # points off the unit sphere are projected on it
    assert abs(spherical_area(3 * equator()) - np.pi / 2) < 1e-6
    return


def test_spherical_area_octant():
    octant = np.eye(3)
    assert np.isclose(spherical_area(octant), np.pi / 8)
    assert np.isclose(spherical_area(octant, base=np.ones(3)), np.pi / 8)
    assert np.isclose(spherical_area(octant[::-1]), -np.pi / 8)
    return


def test_spherical_area_small_loop():
    eps = 1e-3
    triangle = np.array([[1, 0, 0], [1, eps, 0], [1, 0, eps]])
    area = spherical_area(triangle)
    assert abs(area - eps**2 / 8) < 1e-3 * eps**2
    return


def test_spherical_area_degenerate():
    point = np.array([[0.0, 1.0, 0.0]])
    assert spherical_area(np.repeat(point, 5, axis=0)) == 0
    assert spherical_area(np.eye(3)[:2]) == 0

    loop = np.repeat(np.eye(3), 3, axis=0)
    assert np.isclose(spherical_area(loop), np.pi / 8)

    with pytest.raises(ValueError):
        spherical_area(np.zeros((4, 3)))
    with pytest.raises(ValueError):
        spherical_area(np.zeros((4, 2)))
    return


def test_close_along_equator():
    theta = np.linspace(2 * np.pi / 3, 4 * np.pi / 3, 50)
    curve = np.stack(
        [np.cos(theta), np.sin(theta), 0.3 * np.sin(1.5 * (theta - 2 * np.pi / 3))],
        axis=1,
    )
    loop = close_along_equator(curve, num_points=20)
    assert len(loop) == 50 + 18
    assert np.allclose(loop[50:, 2], 0)
    # the closing arc is the short way from 4π/3 back to 2π/3
    angles = np.mod(np.arctan2(loop[50:, 1], loop[50:, 0]), 2 * np.pi)
    assert np.all(np.diff(angles) < 0)
    assert np.all((angles > 2 * np.pi / 3) & (angles < 4 * np.pi / 3))

    # a lobe above the equator, traversed clockwise as seen from outside
    assert spherical_area(loop) < 0

    curve[0, 2] = 0.1
    with pytest.raises(ValueError):
        close_along_equator(curve)
    return


def test_angle_distance():
    assert np.isclose(angle_distance(0.1, np.pi - 0.1), 0.2)
    assert np.isclose(angle_distance(0.3, 0.3 + 2 * np.pi), 0)
    return


def test_euler_line_angle(built_orbit):
    orbit = built_orbit
    T = orbit.Tbar / 12
    third = euler_line_angle(orbit, 0, 4 * T)
    assert angle_distance(third, 0) < 1e-4
    assert angle_distance(euler_line_angle(orbit, 0, orbit.Tbar), 0) < 1e-10

    half_segment = euler_line_angle(orbit, 0, 2 * T)
    assert angle_distance(half_segment, 0) > 0.1

    with pytest.raises(ValueError):
        euler_line_angle(orbit, 0, T)
    with pytest.raises(ValueError):
        euler_line_angle(orbit, 2 * T, T)
    return


def test_area_rule(built_orbit):
    orbit = built_orbit
    T = orbit.Tbar / 12
    for t1 in [2 * T, 4 * T, 6 * T]:
        predicted = area_rule_angle(orbit, 0, t1)
        measured = euler_line_angle(orbit, 0, t1)
        assert angle_distance(predicted, measured) < 1e-4

    assert angle_distance(area_rule_angle(orbit, 0, 4 * T), 0) < 1e-4
    return
