"""The Euler equipotential curve on the unit shape sphere.

The level set ``Ũ = √I·U = 5/√2`` through the three Euler points is the
zero set of ``F(θ, φ)``. On ``[0, π/3]`` it is the graph of a function
``φ(θ) ≥ 0`` that starts at the saddle ``E1 = (0, 0)`` and reaches its maximum
latitude above the collision point ``C2`` at ``θ = π/3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import brentq

from ..shapes import SCALED_U_EULER
from ..util.errors import ConvergenceError

# phase offsets 2kπ/3 of the three side terms
OFFSETS = 2 * np.pi * np.arange(3) / 3

RESIDUAL_TOL = 1e-13
MAX_NEWTON_ITER = 50


@dataclass(frozen=True)
class EquipotentialSample:
    """Point ``(θ, φ(θ))`` of the Euler equipotential with its slope ``φ'(θ)``."""

    theta: float
    phi: float
    phi_prime: float


class Partials(NamedTuple):
    F_theta: np.ndarray
    F_phi: np.ndarray
    F_theta_theta: np.ndarray
    F_theta_phi: np.ndarray
    F_phi_phi: np.ndarray


def _terms(theta, phi) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    theta = np.asarray(theta, dtype=float)[..., None] + OFFSETS
    phi = np.asarray(phi, dtype=float)[..., None]
    c, s = np.cos(theta), np.sin(theta)
    g = 1 + np.cos(phi) * c
    return c, s, g, phi


def implicit_F(theta: float | np.ndarray, phi: float | np.ndarray) -> np.ndarray:
    """Returns ``Σ_k (1 + cos φ cos(θ + 2kπ/3))^(-1/2) - 5/√2``.

    The three terms are the inverse side lengths of the triangle with shape
    ``(θ, φ)`` at ``I = 1``. Collision points give ``inf``.

    Parameters
    ----------
    theta
        Longitude(s) on the shape sphere.
    phi
        Latitude(s) on the shape sphere, broadcastable with ``theta``.

    Returns
    -------
    F
        Scalar ``float`` for scalar inputs, otherwise an array.
    """
    _, _, g, _ = _terms(theta, phi)
    with np.errstate(divide="ignore"):
        values = np.where(g > 0, 1 / np.sqrt(np.abs(g)), np.inf)
    F = np.sum(values, axis=-1) - SCALED_U_EULER
    if F.ndim == 0:
        return float(F)
    return F


def implicit_F_partials(theta: float | np.ndarray, phi: float | np.ndarray) -> Partials:
    """Returns the first and second partial derivatives of ``implicit_F``."""
    c, s, g, phi = _terms(theta, phi)
    cos_phi, sin_phi = np.cos(phi), np.sin(phi)
    g3 = g**-1.5
    g5 = g**-2.5

    F_theta = 0.5 * cos_phi * s * g3
    F_phi = 0.5 * sin_phi * c * g3
    F_tt = 0.5 * cos_phi * (c * g3 + 1.5 * cos_phi * s**2 * g5)
    F_tp = 0.5 * sin_phi * s * (-g3 + 1.5 * cos_phi * c * g5)
    F_pp = 0.5 * (cos_phi * c * g3 + 1.5 * sin_phi**2 * c**2 * g5)

    sums = (np.sum(d, axis=-1) for d in (F_theta, F_phi, F_tt, F_tp, F_pp))
    return Partials(*sums)


def newton_phi(
    theta: np.ndarray, seed: np.ndarray, max_iter: int = MAX_NEWTON_ITER
) -> np.ndarray:
    """Vectorised Newton iteration on ``F(θ, ·) = 0`` started at ``seed``.

    Raises
    ------
    ConvergenceError
        If some residual is still above ``RESIDUAL_TOL`` after ``max_iter``
        iterations.
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.array(seed, dtype=float)
    for _ in range(max_iter):
        F = implicit_F(theta, phi)
        converged = np.max(np.abs(F)) < RESIDUAL_TOL
        phi = phi - F / implicit_F_partials(theta, phi).F_phi
        if converged:
            break

    residual = np.max(np.abs(implicit_F(theta, phi)))
    if not residual < RESIDUAL_TOL:
        raise ConvergenceError(
            f"Newton did not reach |F| < {RESIDUAL_TOL} in {max_iter} iterations.",
            best=phi,
            gap=float(residual),
        )
    return phi


def slope(theta: float | np.ndarray, phi: float | np.ndarray) -> np.ndarray:
    """Returns ``φ'(θ) = -F_θ/F_φ`` by implicit differentiation."""
    partials = implicit_F_partials(theta, phi)
    return -partials.F_theta / partials.F_phi


def saddle_slope() -> float:
    """Returns the slope ``φ'(0) = √(-F_θθ/F_φφ)`` of the curve at ``E1``.

    Both first partials of ``F`` vanish at the saddle, so the two branches of
    the level set through ``E1`` have slopes ``±√(-F_θθ/F_φφ)``.
    """
    partials = implicit_F_partials(0.0, 0.0)
    return float(np.sqrt(-partials.F_theta_theta / partials.F_phi_phi))


def solve_phi(theta: float, seed: float | None = None) -> EquipotentialSample:
    """Solves ``F(θ, φ) = 0`` for the root ``φ ∈ (0, π/2)``.

    Parameters
    ----------
    theta
        Longitude in ``(0, π/3]``. Use ``solve_phi_at_euler`` for ``θ = 0``.
    seed
        Starting point for Newton's method. If ``None``, the root is first
        bracketed with ``scipy.optimize.brentq``.

    Returns
    -------
    EquipotentialSample
        Root with residual below ``RESIDUAL_TOL`` and its slope.

    Raises
    ------
    ValueError
        If ``theta`` is outside ``(0, π/3]``.
    ConvergenceError
        If Newton's method does not converge in ``MAX_NEWTON_ITER`` iterations.
    """
    if not 0 < theta <= np.pi / 3 + 1e-15:
        raise ValueError(f"'theta' must be in (0, π/3], but {theta} was given.")

    if seed is None:
        lower = 0.0 if np.isfinite(implicit_F(theta, 0.0)) else 1e-3
        seed = brentq(lambda p: implicit_F(theta, p), lower, np.pi / 2, xtol=1e-15)

    phi = float(newton_phi(np.array(theta), np.array(seed)))
    return EquipotentialSample(
        theta=float(theta), phi=phi, phi_prime=float(slope(theta, phi))
    )


def solve_phi_at_euler() -> EquipotentialSample:
    """Returns the saddle endpoint ``θ = φ = 0`` with the crossing slope."""
    return EquipotentialSample(theta=0.0, phi=0.0, phi_prime=saddle_slope())


def trace_arc(n: int) -> list[EquipotentialSample]:
    """Traces the curve on the uniform grid ``θ_j = jπ/(3n)``, ``j = 0, ..., n``.

    The roots are found by continuation from ``θ = π/3`` down to ``θ = 0``,
    each Newton solve seeded with the previous root.

    Parameters
    ----------
    n
        Number of grid intervals.

    Returns
    -------
    samples
        List of ``n + 1`` samples in increasing ``θ``.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"'n' must be a positive int, but {n} was given.")

    thetas = np.linspace(0, np.pi / 3, n + 1)
    samples = [solve_phi(np.pi / 3)]
    for theta in thetas[-2:0:-1]:
        samples.append(solve_phi(theta, seed=samples[-1].phi))
    samples.append(solve_phi_at_euler())
    return samples[::-1]


def arc_arrays(samples: list[EquipotentialSample]) -> np.ndarray:
    """Returns the samples as an array with columns ``theta, phi, phi_prime``."""
    return np.array([[s.theta, s.phi, s.phi_prime] for s in samples])


def refine_arc(
    theta: np.ndarray, phi: np.ndarray, new_theta: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Solves the curve at ``new_theta ⊂ [0, π/3]`` seeded from a coarser grid.

    Returns the arrays ``phi`` and ``phi_prime`` at ``new_theta``. The point
    ``θ = 0`` gets the saddle values.
    """
    new_theta = np.asarray(new_theta, dtype=float)
    new_phi = np.zeros_like(new_theta)
    new_slope = np.full_like(new_theta, saddle_slope())

    inside = new_theta > 0
    seed = np.interp(new_theta[inside], theta, phi)
    new_phi[inside] = newton_phi(new_theta[inside], seed)
    new_slope[inside] = slope(new_theta[inside], new_phi[inside])
    return new_phi, new_slope


def arc_grid(n: int, n_trace: int = 64) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Returns ``theta, phi, phi_prime`` on ``n + 1`` uniform points of ``[0, π/3]``.

    The curve is first traced with ``trace_arc(n_trace)`` and then solved on the
    requested grid by ``refine_arc``.
    """
    coarse = arc_arrays(trace_arc(n_trace))
    theta = np.linspace(0, np.pi / 3, n + 1)
    phi, phi_prime = refine_arc(coarse[:, 0], coarse[:, 1], theta)
    return theta, phi, phi_prime
