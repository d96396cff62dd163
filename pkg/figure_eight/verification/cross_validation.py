"""Comparison of two orbits up to rotation, reflection and time shift."""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.spatial.distance import directed_hausdorff

from ..integrator import Trajectory
from ..orbits import Orbit
from ..orbits.orbit import NUM_ARCS
from ..shapes import as_complex, from_complex

logger = logging.getLogger(__name__)

COARSE_SAMPLES = 720
FINE_SAMPLES = 4800
HAUSDORFF_TOL = 1e-3


def orbit_from_trajectory(
    trajectory: Trajectory, m: int = FINE_SAMPLES, period: float | None = None
) -> Orbit:
    """Samples one period of a trajectory starting at ``t = 0`` as an orbit.

    The common curve ``q`` is the path of body 3 and ``x`` keeps the
    integrated positions of the three bodies.
    """
    if m % NUM_ARCS != 0:
        raise ValueError(f"'m' must be a multiple of {NUM_ARCS}, but {m} was given.")
    period = trajectory.t_end if period is None else period
    times = period * np.arange(m) / m
    positions = trajectory.resample(times).positions
    return Orbit(float(period), positions[:, 2], positions)


@dataclass(frozen=True)
class CrossValidation:
    """Best match of orbit ``a`` onto orbit ``b``.

    ``b(t) ≈ e^{i·rotation} · R(a(±(t + shift)))`` where ``R`` is complex
    conjugation when ``reflected``, and ``t`` runs backwards when ``reversed``.
    """

    hausdorff: float
    max_pointwise: float
    rotation: float
    shift: float
    reflected: bool
    reversed: bool
    scale: float

    @property
    def passed(self) -> bool:
        return self.hausdorff < HAUSDORFF_TOL

    def to_dict(self) -> dict[str, object]:
        return {**asdict(self), "passed": self.passed}


def _variant(orbit: Orbit, reflected: bool, reversed_: bool):
    sign = -1.0 if reversed_ else 1.0

    def curve(t: np.ndarray) -> np.ndarray:
        z = as_complex(orbit.curve(sign * t))
        return np.conj(z) if reflected else z

    return curve


def _best_rotation(a: np.ndarray, b: np.ndarray) -> tuple[complex, float]:
    # least squares rotation e^{iθ} minimizing Σ|b - e^{iθ} a|²
    product = np.vdot(a, b)
    residual = np.sum(np.abs(a) ** 2) + np.sum(np.abs(b) ** 2) - 2 * np.abs(product)
    return product, float(residual)


def cross_validate(
    orbit_a: Orbit,
    orbit_b: Orbit,
    coarse: int = COARSE_SAMPLES,
    fine: int = FINE_SAMPLES,
) -> CrossValidation:
    """Fits a rotation, a reflection and a time shift of ``orbit_a`` onto
    ``orbit_b`` and measures the Hausdorff distance of their curves.

    ``orbit_a`` is first rescaled to the period of ``orbit_b``. The time
    shift is located on a coarse grid through the cross-correlation of the
    two curves and refined with a bounded scalar minimization.
    """
    period = orbit_b.Tbar
    scale = (period / orbit_a.Tbar) ** (2 / 3)
    a_orbit = orbit_a.rescaled(period)

    coarse_t = period * np.arange(coarse) / coarse
    b_coarse = as_complex(orbit_b.curve(coarse_t))

    best = None
    for reflected in (False, True):
        for reversed_ in (False, True):
            curve = _variant(a_orbit, reflected, reversed_)
            a_coarse = curve(coarse_t)
            # correlation[s] = Σ_k conj(a(t_k + s h)) b(t_k)
            correlation = np.array(
                [np.vdot(np.roll(a_coarse, -s), b_coarse) for s in range(coarse)]
            )
            s = int(np.argmax(np.abs(correlation)))
            if best is None or abs(correlation[s]) > best[0]:
                best = (abs(correlation[s]), reflected, reversed_, s * period / coarse)

    _, reflected, reversed_, shift = best
    curve = _variant(a_orbit, reflected, reversed_)
    fine_t = period * np.arange(fine) / fine
    b_fine = as_complex(orbit_b.curve(fine_t))

    def residual(delta: float) -> float:
        return _best_rotation(curve(fine_t + delta), b_fine)[1]

    step = period / coarse
    result = minimize_scalar(
        residual,
        bounds=(shift - step, shift + step),
        method="bounded",
        options=dict(xatol=1e-12),
    )
    shift = float(np.mod(result.x, period))
    a_fine = curve(fine_t + shift)
    product, _ = _best_rotation(a_fine, b_fine)
    rotation = float(np.angle(product))
    aligned = np.exp(1j * rotation) * a_fine

    u, v = from_complex(aligned), from_complex(b_fine)
    hausdorff = max(directed_hausdorff(u, v)[0], directed_hausdorff(v, u)[0])
    match = CrossValidation(
        hausdorff=float(hausdorff),
        max_pointwise=float(np.max(np.abs(aligned - b_fine))),
        rotation=rotation,
        shift=shift,
        reflected=reflected,
        reversed=reversed_,
        scale=float(scale),
    )
    logger.info(
        "Cross-validation: Hausdorff distance %.3e, rotation %.6f, shift %.6f",
        match.hausdorff,
        match.rotation,
        match.shift,
    )
    return match
