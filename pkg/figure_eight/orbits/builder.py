from __future__ import annotations

import logging

import numpy as np
from scipy.interpolate import CubicSpline

from ..minimizer import DiscretePath, boundary_residuals
from ..shapes import as_complex, from_complex, potential_gradient
from ..util.errors import JunctionError
from .orbit import NUM_ARCS, Orbit, choreography_residual
from .symmetries import SymmetryOp, euler_junction, isosceles_junction

logger = logging.getLogger(__name__)

BOUNDARY_TOL = 1e-8
JUNCTION_TOL = 1e-6


def align_arc(arc: DiscretePath) -> np.ndarray:
    """Rotates the arc so that body 1 lies on the positive x-axis at its end.

    The isosceles end configuration is then symmetric under ``(x, y) ↦ (x, -y)``.
    """
    end = as_complex(arc.positions[-1, 0])
    if abs(end) == 0:
        raise ValueError("Body 1 sits at the center of mass at the end of the arc.")
    rotation = np.conj(end) / abs(end)
    return from_complex(rotation * as_complex(arc.positions))


def junction_symmetry(positions: np.ndarray, index: int) -> SymmetryOp:
    """Returns the symmetry that continues the orbit through the junction
    ``index``: a half twist at even junctions (collinear configurations) and
    a meridian reflection at odd ones (isosceles configurations).
    """
    if index % 2 == 0:
        return euler_junction(positions)
    return isosceles_junction(positions)


def _end_velocity(x: np.ndarray, h: float) -> np.ndarray:
    return (x[-1] - x[-2]) / h + 0.5 * h * potential_gradient(x[-1])


def _start_velocity(x: np.ndarray, h: float) -> np.ndarray:
    return (x[1] - x[0]) / h - 0.5 * h * potential_gradient(x[0])


def assemble(arc: DiscretePath) -> tuple[np.ndarray, list[float]]:
    """Continues an aligned arc through its endpoints until it closes up.

    Segment ``j + 1`` is the image of segment ``j`` traversed backwards under
    the symmetry fixing the configuration at the junction ``t_j = jT``.

    Returns
    -------
    positions
        Array of shape ``(12 n + 1, 3, 2)`` covering one full period.
    mismatches
        Velocity jump at each of the 12 junctions, including the one where
        the loop closes.
    """
    n, h = arc.n, arc.h
    positions = np.empty((NUM_ARCS * n + 1, 3, 2))
    positions[: n + 1] = align_arc(arc)

    mismatches = []
    for j in range(1, NUM_ARCS):
        center = j * n
        op = junction_symmetry(positions[center], j)
        positions[center : center + n + 1] = op.apply(
            positions[center - n : center + 1][::-1]
        )
        left = _end_velocity(positions[center - 1 : center + 1], h)
        right = _start_velocity(positions[center : center + 2], h)
        mismatches.append(float(np.max(np.abs(right - left))))
        logger.debug("junction %d (%s): velocity jump %.3e", j, op, mismatches[-1])

    left = _end_velocity(positions[-2:], h)
    right = _start_velocity(positions[:2], h)
    mismatches.append(float(np.max(np.abs(right - left))))
    return positions, mismatches


def _resample(positions: np.ndarray, Tbar: float, samples: int) -> np.ndarray:
    times = np.linspace(0, Tbar, len(positions))
    values = np.array(positions)
    values[-1] = values[0]
    spline = CubicSpline(times, values, axis=0, bc_type="periodic")
    return spline(np.arange(samples) * Tbar / samples)


def build_orbit(
    arc: DiscretePath,
    samples: int | None = None,
    junction_tol: float = JUNCTION_TOL,
) -> Orbit:
    """Builds the periodic orbit generated by a minimizing arc.

    Parameters
    ----------
    arc
        Converged minimizer from an Euler configuration ``E3`` to an isosceles
        configuration ``M1``, of duration ``T``.
    samples
        Number of samples of the orbit, a multiple of 12. By default the
        ``12 n`` nodes of the assembled arcs are used without interpolation.
    junction_tol
        Largest velocity jump allowed at the junctions of the arcs.

    Returns
    -------
    orbit
        Orbit of period ``12 T`` with ``q`` the curve of body 3, which passes
        through the origin at ``t = 0``. The isosceles configuration at
        ``t = T`` is symmetric across the x-axis.

    Raises
    ------
    ValueError
        If the endpoints are off their boundary manifolds or ``samples`` is
        not a positive multiple of 12.
    JunctionError
        If the arcs do not join smoothly, i.e. the arc is not a stationary
        point of the action.
    """
    if not isinstance(arc, DiscretePath):
        raise TypeError(f"'arc' must be a DiscretePath, but {type(arc)} was given.")
    if samples is not None and (
        not isinstance(samples, int) or samples <= 0 or samples % NUM_ARCS != 0
    ):
        raise ValueError(
            f"'samples' must be a positive multiple of {NUM_ARCS}, "
            f"but {samples} was given."
        )
    residuals = boundary_residuals(arc)
    scale = np.sqrt(np.sum(arc.positions[0] ** 2))
    if max(residuals.values()) > BOUNDARY_TOL * scale:
        raise ValueError(f"The arc endpoints are off their manifolds: {residuals}.")

    positions, mismatches = assemble(arc)
    mismatch = max(mismatches)
    logger.info("Assembled %d arcs, largest velocity jump %.3e", NUM_ARCS, mismatch)
    if mismatch > junction_tol:
        raise JunctionError(
            f"The arcs do not join smoothly (velocity jump {mismatch:.3e} > "
            f"{junction_tol:.3e}); the arc is not a converged minimizer.",
            mismatch=mismatch,
        )

    Tbar = NUM_ARCS * arc.T
    if samples is None or samples == NUM_ARCS * arc.n:
        x = positions[:-1]
    else:
        x = _resample(positions, Tbar, samples)

    orbit = Orbit(Tbar, x[:, 2], x)
    logger.debug("choreography residual %.3e", choreography_residual(orbit))
    return orbit
