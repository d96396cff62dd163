"""Jacobi, Hopf and spherical coordinates of the three-body configurations.

The Jacobi map sends a configuration to ``(z1, z2)`` in ℂ² isometrically,
the Hopf map sends ``(z1, z2)`` to the shape vector ``u`` in ℝ³ with
``|u| = |z1|² + |z2|² = I``. On the unit shape sphere the longitude ``θ`` is
measured from the Euler point ``E1`` and the latitude ``φ`` from the equator
of collinear shapes.
"""

from __future__ import annotations

import numpy as np

from .configuration import (
    Configuration,
    JacobiCoords,
    ShapeVector,
    SphericalShape,
    as_complex,
    from_complex,
)

SQRT2 = np.sqrt(2)
SQRT3 = np.sqrt(3)
SQRT_2_3 = np.sqrt(2 / 3)
SQRT_3_2 = np.sqrt(3 / 2)

NAMED_POINTS = {
    "C1": (-1.0, 0.0, 0.0),
    "C2": (0.5, SQRT3 / 2, 0.0),
    "C3": (0.5, -SQRT3 / 2, 0.0),
    "E1": (1.0, 0.0, 0.0),
    "E2": (-0.5, -SQRT3 / 2, 0.0),
    "E3": (-0.5, SQRT3 / 2, 0.0),
    "L+": (0.0, 0.0, 1.0),
    "L-": (0.0, 0.0, -1.0),
}
COLLISION_POINTS = np.array([NAMED_POINTS[f"C{i}"] for i in (1, 2, 3)])

# collinearity threshold on |u3| at I = 1
COLLINEAR_EPS = 1e-10


def named_points() -> dict[str, ShapeVector]:
    """Returns the collision, Euler and Lagrange points of the unit shape sphere.

    Returns
    -------
    points
        Dictionary with keys ``"C1"``, ``"C2"``, ``"C3"``, ``"E1"``, ``"E2"``,
        ``"E3"``, ``"L+"`` and ``"L-"``.
    """
    return {name: ShapeVector(*point) for name, point in NAMED_POINTS.items()}


def jacobi_array(positions: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised Jacobi map on arrays of shape ``(..., 3, 2)``.

    Returns ``z1`` and ``z2`` as complex arrays of shape ``(...)``.
    """
    x = as_complex(positions)
    x1, x2, x3 = x[..., 0], x[..., 1], x[..., 2]
    z1 = (x3 - x2) / SQRT2
    z2 = SQRT_2_3 * (x1 - (x2 + x3) / 2)
    return z1, z2


def jacobi_inverse_array(z1: np.ndarray, z2: np.ndarray) -> np.ndarray:
    """Inverse of ``jacobi_array``, returns positions of shape ``(..., 3, 2)``."""
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    x1 = SQRT_2_3 * z2
    x2 = (-SQRT2 * z1 - SQRT_2_3 * z2) / 2
    x3 = (SQRT2 * z1 - SQRT_2_3 * z2) / 2
    return from_complex(np.stack([x1, x2, x3], axis=-1))


def hopf_array(z1: np.ndarray, z2: np.ndarray) -> np.ndarray:
    """Vectorised Hopf map, returns shape vectors of shape ``(..., 3)``."""
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    w = 2 * np.conj(z1) * z2
    u1 = np.abs(z1) ** 2 - np.abs(z2) ** 2
    return np.stack([u1, w.real, w.imag], axis=-1)


def shape_array(positions: np.ndarray) -> np.ndarray:
    """Returns the shape vectors of an array of positions ``(..., 3, 2)``."""
    return hopf_array(*jacobi_array(positions))


def jacobi_map(c: Configuration) -> JacobiCoords:
    """Maps a configuration to its Jacobi coordinates.

    Parameters
    ----------
    c
        Configuration with zero center of mass.

    Returns
    -------
    JacobiCoords
        ``z1 = (x3 - x2)/√2`` and ``z2 = √(2/3) (x1 - (x2 + x3)/2)``.
    """
    z1, z2 = jacobi_array(c.positions)
    return JacobiCoords.from_complex(complex(z1), complex(z2))


def jacobi_inverse(j: JacobiCoords) -> Configuration:
    """Inverse of ``jacobi_map``."""
    z1, z2 = j.as_complex()
    return Configuration(jacobi_inverse_array(z1, z2))


def hopf_map(j: JacobiCoords) -> ShapeVector:
    """Maps Jacobi coordinates to the shape vector ``(|z1|² - |z2|², 2 z̄1 z2)``."""
    z1, z2 = j.as_complex()
    return ShapeVector.from_array(hopf_array(z1, z2))


def shape_of(c: Configuration) -> ShapeVector:
    """Returns the shape vector of a configuration."""
    return hopf_map(jacobi_map(c))


def shape_to_sides(u: ShapeVector, tol: float = 1e-9) -> tuple[float, float, float]:
    """Returns the side lengths ``(r23, r31, r12)`` of the triangle with shape ``u``.

    Parameters
    ----------
    u
        Shape vector on the unit sphere.
    tol
        Allowed deviation of ``|u|`` from 1.

    Returns
    -------
    sides
        ``r23 = √(1 - C1·u)``, ``r31 = √(1 - C2·u)``, ``r12 = √(1 - C3·u)``.

    Raises
    ------
    ValueError
        If ``u`` is not normalised. The caller must normalise it.
    """
    if abs(u.norm - 1) > tol:
        raise ValueError(
            f"'u' must lie on the unit shape sphere, but |u| = {u.norm} was given."
        )
    values = 1 - COLLISION_POINTS @ u.as_array()
    r23, r31, r12 = np.sqrt(np.clip(values, 0, None))
    return float(r23), float(r31), float(r12)


def to_spherical(u: ShapeVector) -> SphericalShape:
    """Returns the ``(r, θ, φ)`` form of a shape vector, with ``r² = |u|``."""
    norm = u.norm
    if norm == 0:
        return SphericalShape(0.0, 0.0, 0.0)
    phi = float(np.arcsin(np.clip(u.u3 / norm, -1, 1)))
    theta = float(np.arctan2(u.u2, u.u1))
    return SphericalShape(float(np.sqrt(norm)), theta, phi)


def from_spherical(s: SphericalShape) -> ShapeVector:
    """Returns ``r² (cos φ cos θ, cos φ sin θ, sin φ)``."""
    r2 = s.r**2
    return ShapeVector(
        r2 * np.cos(s.phi) * np.cos(s.theta),
        r2 * np.cos(s.phi) * np.sin(s.theta),
        r2 * np.sin(s.phi),
    )


def section_array(u: np.ndarray) -> np.ndarray:
    """Vectorised ``shape_section`` on shape vectors of shape ``(..., 3)``."""
    u = np.asarray(u, dtype=float)
    norm = np.linalg.norm(u, axis=-1)
    u1, w = u[..., 0], u[..., 1] + 1j * u[..., 2]
    a = np.sqrt(np.clip(norm + u1, 0, None) / 2)
    with np.errstate(divide="ignore", invalid="ignore"):
        z2 = np.where(a > 0, w / (2 * a), np.sqrt(np.clip(norm - u1, 0, None) / 2))
    return jacobi_inverse_array(a, z2)


def shape_section(u: ShapeVector) -> Configuration:
    """Returns one configuration whose shape vector is ``u``.

    The preimage is fixed by requiring ``z1`` to be real and nonnegative
    (``z2`` real and nonnegative when ``z1 = 0``). All other preimages are
    rotations of this one.
    """
    return Configuration(section_array(u.as_array()))


def is_collinear(c: Configuration, eps: float = COLLINEAR_EPS) -> bool:
    """Checks ``|u3| < eps·I``, i.e. whether the three bodies are aligned."""
    u = shape_of(c)
    norm = u.norm
    if norm == 0:
        return True
    return abs(u.u3) < eps * norm
