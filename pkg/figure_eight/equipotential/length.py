from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.integrate import trapezoid
from scipy.optimize import brentq

from ..util.errors import ConvergenceError
from ..util.io import write_csv
from .curve import (
    EquipotentialSample,
    arc_arrays,
    implicit_F,
    newton_phi,
    refine_arc,
    saddle_slope,
    slope,
    trace_arc,
)

logger = logging.getLogger(__name__)

# published bracket of the Euler equipotential length
ELL0_LOWER = np.pi / 5.082553924511
ELL0_UPPER = np.pi / 5.082553924509

SAMPLE_COLUMNS = ("theta", "phi", "phi_prime")


@dataclass(frozen=True)
class LengthResult:
    """Length ``ℓ₀`` of the Euler equipotential arc from ``E1`` to ``M2``.

    ``samples`` is the number of quadrature points of the last refinement
    level and ``estimated_error`` the Richardson estimate of its error.
    """

    ell0: float
    samples: int
    estimated_error: float


def arc_integrand(phi: np.ndarray, phi_prime: np.ndarray) -> np.ndarray:
    """Returns the speed ``½√(cos²φ + φ'²)`` on the sphere of radius 1/2."""
    return 0.5 * np.sqrt(np.cos(phi) ** 2 + phi_prime**2)


def euler_length(
    n_base: int = 64, refinements: int = 14, tol: float = 1e-12
) -> LengthResult:
    """Computes ``ℓ₀ = ½∫₀^{π/3} √(cos²φ + φ'²) dθ`` with the trapezoid rule.

    The grid is doubled until two successive values differ by less than
    ``tol``. The new midpoints of each level are solved by Newton's method
    seeded from the previous level.

    Parameters
    ----------
    n_base
        Number of intervals of the first level, at least 8.
    refinements
        Maximum number of doublings.
    tol
        Stopping threshold on the difference of successive values.

    Returns
    -------
    LengthResult
        Value of the last level. Its ``estimated_error`` is a third of the
        last difference.

    Raises
    ------
    ConvergenceError
        If the values have not settled after ``refinements`` doublings. The
        error carries the best value and the last difference.
    """
    if not isinstance(n_base, int) or n_base < 8:
        raise ValueError(f"'n_base' must be an int >= 8, but {n_base} was given.")
    if not isinstance(refinements, int) or refinements < 1:
        raise ValueError(
            f"'refinements' must be a positive int, but {refinements} was given."
        )
    if tol <= 0:
        raise ValueError(f"'tol' must be positive, but {tol} was given.")

    theta, phi, phi_prime = arc_arrays(trace_arc(n_base)).T
    value = trapezoid(arc_integrand(phi, phi_prime), theta)

    gap = np.inf
    for _ in range(refinements):
        num_intervals = 2 * (len(theta) - 1)
        new_theta = np.linspace(0, np.pi / 3, num_intervals + 1)
        mid_phi, mid_slope = refine_arc(theta, phi, new_theta[1::2])

        new_phi = np.empty_like(new_theta)
        new_phi[0::2], new_phi[1::2] = phi, mid_phi
        new_phi_prime = np.empty_like(new_theta)
        new_phi_prime[0::2], new_phi_prime[1::2] = phi_prime, mid_slope

        new_value = trapezoid(arc_integrand(new_phi, new_phi_prime), new_theta)
        gap = abs(new_value - value)
        logger.debug(
            "ell0 with %d intervals: %r, gap %.3e", num_intervals, new_value, gap
        )

        theta, phi, phi_prime, value = new_theta, new_phi, new_phi_prime, new_value
        if gap < tol:
            logger.info("ell0 = %r with %d samples", value, len(theta))
            return LengthResult(
                ell0=float(value), samples=len(theta), estimated_error=gap / 3
            )

    raise ConvergenceError(
        f"The Euler length did not settle below {tol} after {refinements} "
        "refinements.",
        best=float(value),
        gap=float(gap),
    )


def trace_segment(k: int, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Traces the ``k``-th lobe of the whole equipotential.

    Lobe ``k`` joins the Euler points at longitudes ``2πk/3`` and
    ``2π(k + 1)/3`` and lies above the equator for even ``k`` and below it
    for odd ``k``. The curve is solved directly, by continuation from the
    middle of the lobe towards both Euler points.

    Returns
    -------
    theta, phi, phi_prime
        Arrays with ``n + 1`` points.
    """
    if n % 2:
        raise ValueError(f"'n' must be even, but {n} was given.")
    sign = (-1) ** k
    theta = 2 * np.pi * k / 3 + np.linspace(0, 2 * np.pi / 3, n + 1)
    phi = np.zeros(n + 1)

    mid = n // 2
    top = brentq(lambda p: implicit_F(theta[mid], p), 1e-3, np.pi / 2, xtol=1e-15)
    phi[mid] = newton_phi(theta[mid], sign * top)
    for j in range(mid + 1, n):
        phi[j] = newton_phi(theta[j], phi[j - 1])
    for j in range(mid - 1, 0, -1):
        phi[j] = newton_phi(theta[j], phi[j + 1])

    phi_prime = np.empty(n + 1)
    phi_prime[1:-1] = slope(theta[1:-1], phi[1:-1])
    phi_prime[0] = sign * saddle_slope()
    phi_prime[-1] = -sign * saddle_slope()
    return theta, phi, phi_prime


def full_curve_length(n_per_segment: int = 256) -> float:
    """Returns the length of the whole Euler equipotential.

    The curve closes after its longitude has grown by ``4π``; it is made of
    six lobes, each traced independently with ``trace_segment``. The result
    equals ``12 ℓ₀``.
    """
    total = 0.0
    for k in range(6):
        theta, phi, phi_prime = trace_segment(k, n_per_segment)
        total += trapezoid(arc_integrand(phi, phi_prime), theta)
    return float(total)


def write_samples_csv(
    samples: list[EquipotentialSample], filename: str | Path
) -> None:
    """Stores the samples in a CSV file with columns ``theta, phi, phi_prime``."""
    write_csv(filename, SAMPLE_COLUMNS, arc_arrays(samples))
    return
