from __future__ import annotations

import numpy as np
from scipy.integrate import cumulative_trapezoid

from ..minimizer.path import DiscretePath
from ..shapes import section_array
from .curve import arc_grid, refine_arc
from .length import arc_integrand

# minimum size of the grid used to tabulate the arclength
MIN_FINE_GRID = 4096


def arclength_table(n_fine: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Returns ``theta``, ``phi`` and the cumulative arclength ``s`` of the arc
    ``[0, π/3]`` on the sphere of radius 1/2, on ``n_fine + 1`` points.
    """
    theta, phi, phi_prime = arc_grid(n_fine)
    s = cumulative_trapezoid(arc_integrand(phi, phi_prime), theta, initial=0)
    return theta, phi, s


def horizontal_lift(positions: np.ndarray) -> np.ndarray:
    """Rotates every node so that consecutive nodes have zero angular momentum.

    Node ``k + 1`` is rotated so that ``Σ x̄_k x_{k+1}`` is real and positive,
    which is ``ω(x_k, x_{k+1} - x_k) = 0``. Node 0 is left unchanged.

    Parameters
    ----------
    positions
        Array of shape ``(n + 1, 3, 2)``.
    """
    y = positions[..., 0] + 1j * positions[..., 1]
    overlaps = np.sum(np.conj(y[:-1]) * y[1:], axis=-1)
    angles = np.concatenate([[0.0], -np.cumsum(np.angle(overlaps))])
    x = np.exp(1j * angles)[:, None] * y
    return np.stack([x.real, x.imag], axis=-1)


def reduced_test_path(I0: float, T: float, n: int) -> DiscretePath:
    """Returns the equipotential test path from ``E3`` to the ``M1`` crossing.

    The shape runs at constant speed along the Euler equipotential, from the
    Euler point ``E3`` (longitude 2π/3) up to the meridian ``M1`` (longitude
    π), at constant moment of inertia ``I0``. The configurations are lifted
    horizontally, so the path has zero angular momentum.

    Parameters
    ----------
    I0
        Moment of inertia of every node.
    T
        Duration of the path.
    n
        Number of time steps, at least 2.

    Returns
    -------
    DiscretePath
        Path with ``n + 1`` nodes whose shape covers an arclength
        ``ℓ₀ k/n`` of the equipotential at node ``k``.
    """
    if not I0 > 0:
        raise ValueError(f"'I0' must be positive, but {I0} was given.")
    if not T > 0:
        raise ValueError(f"'T' must be positive, but {T} was given.")
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"'n' must be an int >= 2, but {n} was given.")

    fine_theta, fine_phi, s = arclength_table(max(8 * n, MIN_FINE_GRID))
    targets = s[-1] * np.arange(n + 1) / n
    theta = np.interp(targets, s, fine_theta)
    theta[-1] = np.pi / 3
    phi, _ = refine_arc(fine_theta, fine_phi, theta)

    longitude = 2 * np.pi / 3 + theta
    u = I0 * np.stack(
        [
            np.cos(phi) * np.cos(longitude),
            np.cos(phi) * np.sin(longitude),
            np.sin(phi),
        ],
        axis=-1,
    )
    return DiscretePath(T, horizontal_lift(section_array(u)))
