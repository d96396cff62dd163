"""Collision-ejection Kepler orbit of two unit masses.

The separation ``ρ`` of two unit masses obeys ``ρ̈ = -μ/ρ²`` with ``μ = 2``.
Released from rest, the bodies collide after a time ``T`` along the degenerate
ellipse

    ρ = a (1 - cos E),    t = √(a³/μ) (E - sin E),

with ``a³ = μT²/π²``. Its action ``∫ (¼ρ̇² + 1/ρ) dt`` over ``[0, T]`` is the
collision bound ``A2(T)``.
"""

from __future__ import annotations

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

MU = 2.0


def semi_major_axis(T: float) -> float:
    """Returns the semi-major axis of the orbit that falls from rest to
    collision in time ``T``.
    """
    if not T > 0:
        raise ValueError(f"'T' must be positive, but {T} was given.")
    return float((MU * T**2 / np.pi**2) ** (1 / 3))


def kepler_ejection_action(T: float) -> float:
    """Returns the action of two unit masses falling from rest to collision
    in time ``T``, by quadrature over the eccentric anomaly.
    """
    a = semi_major_axis(T)
    scale = np.sqrt(a**3 / MU)

    def integrand(E: float) -> float:
        # removable 0/0 at E = 0, where quad never evaluates
        kinetic = a**2 * np.sin(E) ** 2 / (4 * scale * (1 - np.cos(E)))
        potential = scale / a
        return kinetic + potential

    value, _ = quad(integrand, 0, np.pi, epsabs=1e-14, epsrel=1e-13)
    return float(value)


def kepler_ejection_separation(tau: float | np.ndarray, T: float) -> np.ndarray:
    """Returns the separation ``ρ`` at time ``tau ∈ [0, T]`` after the release.

    Kepler's equation is solved for ``E ∈ [π, 2π]`` with ``brentq``. Collision
    happens at ``tau = T``.
    """
    a = semi_major_axis(T)
    scale = np.sqrt(a**3 / MU)
    tau = np.atleast_1d(np.asarray(tau, dtype=float))
    if np.any(tau < 0) or np.any(tau > T * (1 + 1e-12)):
        raise ValueError(f"'tau' must lie in [0, {T}], but {tau} was given.")
    tau = np.minimum(tau, T)

    anomalies = np.empty_like(tau)
    for k, t in enumerate(tau):
        target = t / scale + np.pi
        anomalies[k] = brentq(
            lambda E: E - np.sin(E) - target, np.pi, 3 * np.pi, xtol=1e-15
        )
    return a * (1 - np.cos(anomalies))
