"""Discrete action of a path and its exact gradient.

The action ``∫₀ᵀ (½K + U) dt`` is discretised with forward differences for the
kinetic term and the trapezoid rule for the potential,

    A = Σ_k |x_{k+1} - x_k|²/(2h) + h Σ_k w_k U(x_k),

with ``w_0 = w_n = 1/2`` and ``w_k = 1`` otherwise. Its stationary points with
fixed endpoints are the Störmer-Verlet solutions of Newton's equations.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ..shapes import SIDES, pairwise_distances, potential_array, potential_gradient
from .path import DiscretePath


def trapezoid_weights(n: int) -> np.ndarray:
    weights = np.ones(n + 1)
    weights[[0, -1]] = 0.5
    return weights


def kinetic_term(positions: np.ndarray, h: float) -> float:
    steps = np.diff(positions, axis=0)
    return float(np.sum(steps**2) / (2 * h))


def potential_term(positions: np.ndarray, h: float) -> float:
    weights = trapezoid_weights(len(positions) - 1)
    return float(h * np.sum(weights * potential_array(positions)))


def discrete_action(path: DiscretePath) -> float:
    """Returns the discrete action of the path.

    A collision at some node gives ``inf``.
    """
    x, h = path.positions, path.h
    return kinetic_term(x, h) + potential_term(x, h)


def action_gradient(path: DiscretePath) -> np.ndarray:
    """Returns the gradient of ``discrete_action`` with respect to every node.

    Returns
    -------
    gradient
        Array of shape ``(n + 1, 3, 2)``. Row ``k`` is
        ``(2x_k - x_{k-1} - x_{k+1})/h + h w_k ∇U(x_k)``, with the missing
        neighbour dropped at the endpoints.
    """
    return gradient_array(path.positions, path.h)


def gradient_array(x: np.ndarray, h: float) -> np.ndarray:
    """Array version of ``action_gradient`` for positions ``(n + 1, 3, 2)``."""
    steps = np.diff(x, axis=0)
    weights = trapezoid_weights(len(x) - 1)[:, None, None]

    gradient = h * weights * potential_gradient(x)
    gradient[:-1] -= steps / h
    gradient[1:] += steps / h
    return gradient


def relative_action(reference: np.ndarray, delta: np.ndarray, h: float) -> float:
    """Returns ``A(reference + delta) - A(reference)`` without cancellation.

    Every difference of squares and of inverse distances is expanded so that
    the rounding error scales with ``delta`` instead of with the action.

    Parameters
    ----------
    reference
        Positions of shape ``(n + 1, 3, 2)``.
    delta
        Displacement of the same shape.
    h
        Time step.
    """
    steps = np.diff(reference, axis=0)
    delta_steps = np.diff(delta, axis=0)
    kinetic = np.sum(delta_steps * (2 * steps + delta_steps)) / (2 * h)

    weights = trapezoid_weights(len(reference) - 1)
    potential = 0.0
    for i, j in SIDES:
        d = reference[:, j] - reference[:, i]
        e = delta[:, j] - delta[:, i]
        r = np.linalg.norm(d, axis=-1)
        r_new = np.linalg.norm(d + e, axis=-1)
        # 1/|d + e| - 1/|d| = -(2 d·e + e·e) / (|d| |d + e| (|d| + |d + e|))
        numerator = np.sum(e * (2 * d + e), axis=-1)
        diff = -numerator / (r * r_new * (r + r_new))
        potential += h * np.sum(weights * diff)
    return float(kinetic + potential)


def three_mass_action(masses: Sequence[float], path: DiscretePath) -> float:
    """Returns the discrete action with masses ``(m1, m2, m3)``.

    The kinetic term is ``½ Σ_i m_i |ẋ_i|²`` and the potential
    ``Σ_{i<j} m_i m_j / r_ij``. Pairs with a zero mass product are skipped, so
    their bodies may collide. With unit masses this is ``discrete_action``.
    """
    masses = np.asarray(masses, dtype=float)
    if masses.shape != (3,) or np.any(masses < 0):
        raise ValueError(
            f"'masses' must be three nonnegative numbers, but {masses} was given."
        )
    x, h = path.positions, path.h
    steps = np.diff(x, axis=0)
    kinetic = np.sum(masses[:, None] * np.sum(steps**2, axis=0)) / (2 * h)

    weights = trapezoid_weights(path.n)
    dists = pairwise_distances(x)
    potential = 0.0
    for side, (i, j) in enumerate(SIDES):
        product = masses[i] * masses[j]
        if product == 0:
            continue
        with np.errstate(divide="ignore"):
            potential += product * h * np.sum(weights / dists[:, side])
    return float(kinetic + potential)
