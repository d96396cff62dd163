"""Sign and monotonicity of the angular momentum ``q ∧ q̇`` of one body.

Along the figure-eight, ``q ∧ q̇`` vanishes only when the body passes through
the origin. It keeps one sign on each lobe, so each lobe is starshaped with
respect to the origin.
"""

from __future__ import annotations

import numpy as np

from ..orbits import Orbit
from ..shapes import State, wedge
from .report import CheckResult, lower_check, upper_check

ORIGIN_EPS = 1e-4
EULER_TOL = 1e-6
# sign of q ∧ q̇ on the first half period: the first lobe is run clockwise
ORIENTATION = -1.0


def angular_momentum_curve(orbit: Orbit) -> np.ndarray:
    """Returns ``q ∧ q̇`` on the grid of the orbit."""
    return wedge(orbit.q, orbit.curve(orbit.times, derivative=1))


def _align_to_crossing(orbit: Orbit) -> tuple[int, np.ndarray, np.ndarray]:
    # the origin passage closest to t = 0, not the one half a period later
    radius = np.linalg.norm(orbit.q, axis=1)
    window = orbit.m // 12
    candidates = np.r_[0 : window + 1, orbit.m - window : orbit.m]
    start = int(candidates[np.argmin(radius[candidates])])
    momentum = np.roll(angular_momentum_curve(orbit), -start)
    return start, momentum, np.roll(orbit.q, -start, axis=0)


def _offending_time(orbit: Orbit, start: int, indices: np.ndarray) -> str:
    if len(indices) == 0:
        return ""
    index = (start + int(indices[0])) % orbit.m
    return f"first violation at t = {orbit.times[index]:.6g}"


def starshape_check(orbit: Orbit, origin_eps: float = ORIGIN_EPS) -> list[CheckResult]:
    """Checks that ``q ∧ q̇`` has a fixed strict sign on each half period.

    The grid is shifted so that it starts at the closest approach of ``q`` to
    the origin near ``t = 0``. In this frame ``q ∧ q̇`` must be negative on
    ``(0, Tbar/2)`` and positive on ``(Tbar/2, Tbar)``, so mirrored or
    time-reversed copies of the eight fail; the sign found on the first half
    is recorded in the details. Samples with ``|q| < origin_eps·max|q|`` are
    the origin passages and are excluded.

    Besides the sign, the check verifies that ``q ∧ q̇`` decreases on
    ``(0, Tbar/6)`` and increases on ``(Tbar/6, Tbar/4)``, and that the polar
    angle of ``q`` decreases strictly on ``(0, Tbar/2)``.
    """
    m = orbit.m
    start, momentum, q = _align_to_crossing(orbit)
    radius = np.linalg.norm(q, axis=1)
    away = radius >= origin_eps * radius.max()
    orientation = ORIENTATION
    detail = f"orientation {float(np.sign(momentum[m // 4])):+.0f}"

    index = np.arange(m)
    first = index[(index > 0) & (index < m // 2) & away]
    second = index[(index > m // 2) & away]
    crossings = index[~away]

    checks = []
    for name, indices, sign in [
        ("starshape.first_half", first, orientation),
        ("starshape.second_half", second, -orientation),
    ]:
        values = sign * momentum[indices]
        bad = indices[values <= 0]
        info = _offending_time(orbit, start, bad)
        checks.append(
            lower_check(name, values.min(), 0.0, f"{detail} {info}".strip())
        )
    checks.append(
        CheckResult(
            "starshape.origin_crossings",
            float(len(crossings)),
            2.0,
            crossings.tolist() == [0, m // 2],
            f"samples {crossings.tolist()}",
        )
    )

    # monotone up to the collinear configuration at Tbar/6, then down to Tbar/4
    noise = 1e-9 * np.max(np.abs(momentum))
    steps = np.diff(orientation * momentum[: m // 4 + 1])
    rising, falling = steps[: m // 6], steps[m // 6 :]
    violations = np.sum(rising < -noise) + np.sum(falling > noise)
    checks.append(
        upper_check("starshape.monotone", float(violations), 0.5, "violating steps")
    )

    angle = np.unwrap(np.arctan2(q[first, 1], q[first, 0]))
    turning = orientation * np.diff(angle)
    checks.append(
        lower_check("starshape.polar_angle", turning.min(), 0.0, "min angle step")
    )
    return checks


def derivative_identity_check(orbit: Orbit, rtol: float = 1e-4) -> CheckResult:
    """Compares central differences of ``q ∧ q̇`` with
    ``(1/r13³ - 1/r23³)(x3 ∧ x1)``, where ``q`` is the curve of body 3.
    """
    x = orbit.x
    momentum = wedge(x[:, 2], orbit.positions_at(orbit.times, derivative=1)[:, 2])
    numerical = (np.roll(momentum, -1) - np.roll(momentum, 1)) / (2 * orbit.h)

    r13 = np.linalg.norm(x[:, 2] - x[:, 0], axis=1)
    r23 = np.linalg.norm(x[:, 2] - x[:, 1], axis=1)
    exact = (1 / r13**3 - 1 / r23**3) * wedge(x[:, 2], x[:, 0])
    scale = max(np.max(np.abs(exact)), np.finfo(float).tiny)
    error = np.max(np.abs(numerical - exact)) / scale
    return upper_check("starshape.derivative_identity", error, rtol)


def euler_velocity_constraint(s: State, tol: float = EULER_TOL) -> float:
    """Returns ``|v_a - v_b| + |v_a + v_m/2|`` at a collinear configuration
    whose middle body ``m`` sits at the origin between ``a`` and ``b``.

    Raises
    ------
    ValueError
        If no body is within ``tol·max|x|`` of the origin.
    """
    positions, velocities = s.q.positions, s.v.positions
    radius = np.linalg.norm(positions, axis=1)
    middle = int(np.argmin(radius))
    if radius[middle] > tol * radius.max():
        raise ValueError(
            "The state is not at an Euler configuration with the middle body at "
            f"the origin, the closest body is at distance {radius[middle]:.3e}."
        )
    a, b = [body for body in range(3) if body != middle]
    va, vb, vm = velocities[a], velocities[b], velocities[middle]
    return float(np.linalg.norm(va - vb) + np.linalg.norm(va + vm / 2))
