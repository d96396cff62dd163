"""Signed areas on the shape sphere and the rotation they predict.

A closed loop of shapes traced with zero angular momentum returns the
configuration rotated by ``-2A`` (mod π), where ``A`` is the signed area the
loop encloses on the shape sphere of radius 1/2.
"""

from __future__ import annotations

import numpy as np

from ..shapes import Configuration, is_collinear
from .orbit import Orbit

NORTH_POLE = np.array([0.0, 0.0, 1.0])
COLLINEAR_EPS = 1e-6


def _unit_loop(loop: np.ndarray) -> np.ndarray:
    loop = np.asarray(loop, dtype=float)
    if loop.ndim != 2 or loop.shape[1] != 3:
        raise ValueError(f"'loop' must have shape (k, 3), but {loop.shape} was given.")
    norms = np.linalg.norm(loop, axis=1)
    if np.any(norms == 0):
        raise ValueError("'loop' contains the triple collision.")
    return loop / norms[:, None]


def spherical_area(loop: np.ndarray, base: np.ndarray = NORTH_POLE) -> float:
    """Returns the signed area enclosed by a closed loop of shape vectors.

    The loop is closed implicitly (last point back to the first one) and
    decomposed in a fan of spherical triangles with a common vertex at
    ``base``. The excess of each triangle is signed by its orientation, the
    total is scaled to the sphere of radius 1/2. The result is only defined
    modulo π.

    Parameters
    ----------
    loop
        Array of shape ``(k, 3)``; the points are projected to the unit sphere.
    base
        Common vertex of the fan. It must not be antipodal to a loop point.

    Returns
    -------
    area
        Positive for loops traversed counter-clockwise around the region
        they enclose, as seen from outside the sphere.
    """
    loop = _unit_loop(loop)
    if len(loop) < 3:
        return 0.0
    base = np.asarray(base, dtype=float)
    base = base / np.linalg.norm(base)

    a, b = loop, np.roll(loop, -1, axis=0)
    numerator = np.cross(a, b) @ base
    denominator = 1 + a @ base + b @ base + np.sum(a * b, axis=1)
    excess = 2 * np.arctan2(numerator, denominator)
    return float(np.sum(excess) / 4)


def close_along_equator(curve: np.ndarray, num_points: int = 256) -> np.ndarray:
    """Closes a curve between two collinear shapes along the equator.

    The equator arc goes from the last point back to the first one through
    the shorter way.
    """
    curve = _unit_loop(curve)
    start, end = curve[0], curve[-1]
    for point in (start, end):
        if abs(point[2]) > COLLINEAR_EPS:
            raise ValueError(
                f"The curve must start and end on the equator, but u3 = {point[2]}."
            )
    theta_start = np.arctan2(start[1], start[0])
    theta_end = np.arctan2(end[1], end[0])
    delta = np.angle(np.exp(1j * (theta_start - theta_end)))
    theta = theta_end + delta * np.linspace(0, 1, num_points)[1:-1]
    equator = np.stack([np.cos(theta), np.sin(theta), np.zeros_like(theta)], axis=1)
    return np.concatenate([curve, equator])


def _check_window(orbit: Orbit, t0: float, t1: float) -> None:
    if not 0 <= t0 < t1 <= orbit.Tbar * (1 + 1e-12):
        raise ValueError(
            f"'t0' and 't1' must satisfy 0 <= t0 < t1 <= Tbar, but ({t0}, {t1}) "
            "was given."
        )
    return


def area_rule_angle(orbit: Orbit, t0: float, t1: float) -> float:
    """Predicts the rotation of the Euler line between two collinear times.

    The shape curve of the orbit on ``[t0, t1]`` is closed along the equator
    and the prediction is ``-2A`` modulo π.
    """
    _check_window(orbit, t0, t1)
    times = orbit.times
    inside = (times > t0) & (times < t1)
    shapes = np.concatenate(
        [
            [orbit.shape_at(t0)],
            orbit.shape_curve()[inside],
            [orbit.shape_at(t1)],
        ]
    )
    area = spherical_area(close_along_equator(shapes))
    return float(np.mod(-2 * area, np.pi))


def _line_angle(c: Configuration) -> float:
    if not is_collinear(c, eps=COLLINEAR_EPS):
        raise ValueError(f"The configuration {c} is not collinear.")
    # direction between the two bodies farthest apart
    positions = c.positions
    dists = np.linalg.norm(positions[:, None] - positions[None], axis=-1)
    i, j = np.unravel_index(np.argmax(dists), dists.shape)
    direction = positions[j] - positions[i]
    return float(np.arctan2(direction[1], direction[0]))


def euler_line_angle(orbit: Orbit, t0: float, t1: float) -> float:
    """Returns the angle modulo π between the lines of two collinear
    configurations of the orbit.

    Raises
    ------
    ValueError
        If the configuration at ``t0`` or ``t1`` is not collinear.
    """
    _check_window(orbit, t0, t1)
    angle = _line_angle(orbit.at(t1)) - _line_angle(orbit.at(t0))
    return float(np.mod(angle, np.pi))


def angle_distance(a: float, b: float) -> float:
    """Distance between two angles defined modulo π."""
    delta = np.mod(a - b, np.pi)
    return float(min(delta, np.pi - delta))
