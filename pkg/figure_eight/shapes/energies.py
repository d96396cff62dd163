from __future__ import annotations

import numpy as np

from ..util.errors import CollisionError
from .configuration import Configuration, State, wedge

# scaled potential √I·U at the Euler, Lagrange and two-body collision shapes
SCALED_U_EULER = 5 / np.sqrt(2)
SCALED_U_LAGRANGE = 3.0
SCALED_U_BINARY = 1 / np.sqrt(2)

# bodies (i, j) of the side opposite to body k, in the order (r23, r31, r12)
SIDES = ((1, 2), (2, 0), (0, 1))


def pairwise_distances(positions: np.ndarray) -> np.ndarray:
    """Returns ``(r23, r31, r12)`` for positions of shape ``(..., 3, 2)``."""
    positions = np.asarray(positions, dtype=float)
    dists = [
        np.linalg.norm(positions[..., j, :] - positions[..., i, :], axis=-1)
        for i, j in SIDES
    ]
    return np.stack(dists, axis=-1)


def potential_array(positions: np.ndarray) -> np.ndarray:
    """Vectorised force function ``U = 1/r12 + 1/r13 + 1/r23``.

    Collisions give ``inf``.
    """
    dists = pairwise_distances(positions)
    with np.errstate(divide="ignore"):
        return np.sum(1 / dists, axis=-1)


def potential_gradient(positions: np.ndarray) -> np.ndarray:
    """Vectorised gradient of ``U`` with respect to the positions.

    For unit masses this is also the acceleration of each body,
    ``Σ_{j≠i} (x_j - x_i)/r_ij³``. The output has the shape of ``positions``.
    """
    positions = np.asarray(positions, dtype=float)
    diff = positions[..., None, :, :] - positions[..., :, None, :]
    dist = np.linalg.norm(diff, axis=-1)
    with np.errstate(divide="ignore", invalid="ignore"):
        inv3 = np.where(dist > 0, 1 / dist**3, 0.0)
    return np.sum(diff * inv3[..., None], axis=-2)


def potential(c: Configuration) -> float:
    """Returns the force function ``U`` of a configuration.

    Notes
    -----
    A collision gives ``inf``; it is the caller who decides what to do with it.
    """
    return float(potential_array(c.positions))


def scaled_potential(c: Configuration) -> float:
    """Returns ``√I·U``, which only depends on the shape of ``c``."""
    return float(np.sqrt(moment_of_inertia(c)) * potential(c))


def min_separation(positions: np.ndarray) -> float:
    """Returns the smallest pairwise distance over an array of positions."""
    return float(np.min(pairwise_distances(positions)))


def hermitian_product(x: Configuration, y: Configuration) -> tuple[float, float]:
    """Returns the real and imaginary parts of ``Σ x̄_k y_k``.

    The real part is the mass scalar product ``x·y`` and the imaginary part the
    symplectic form ``ω(x, y)``.
    """
    dot = float(np.sum(x.positions * y.positions))
    omega = float(np.sum(wedge(x.positions, y.positions)))
    return dot, omega


def moment_of_inertia(c: Configuration) -> float:
    return float(np.sum(c.positions**2))


def kinetic_energy(v: Configuration) -> float:
    """Returns ``K = v·v``, twice the usual kinetic energy."""
    return float(np.sum(v.positions**2))


def dilation(s: State) -> float:
    """Returns ``J = x·v``, half the time derivative of ``I``."""
    return hermitian_product(s.q, s.v)[0]


def angular_momentum(s: State) -> float:
    """Returns the total angular momentum ``ω(x, v)``."""
    return hermitian_product(s.q, s.v)[1]


def energy(s: State) -> float:
    """Returns ``H = K/2 - U``."""
    return 0.5 * kinetic_energy(s.v) - potential(s.q)


def lagrangian(s: State) -> float:
    """Returns ``L = K/2 + U``."""
    return 0.5 * kinetic_energy(s.v) + potential(s.q)


def reduced_kinetic(c: Configuration, v: Configuration) -> float:
    """Returns the reduced kinetic energy ``|v|² - ω(x, v)²/|x|²``.

    This is the part of ``K`` that deforms the triangle, the rest
    ``ω(x, v)²/I`` only rotates it.

    Parameters
    ----------
    c
        Configuration (foot point).
    v
        Tangent vector at ``c``.

    Raises
    ------
    CollisionError
        If ``c`` is the triple collision ``0``.
    """
    inertia = moment_of_inertia(c)
    if inertia == 0:
        raise CollisionError("The reduced kinetic energy is undefined at x = 0.")
    omega = hermitian_product(c, v)[1]
    return kinetic_energy(v) - omega**2 / inertia
