from __future__ import annotations

from collections.abc import Sequence
from dataclasses import InitVar, dataclass

import numpy as np

# absolute tolerance for the zero-sum constraint, relative to the size of the bodies
ZERO_SUM_TOL = 1e-12


def as_complex(positions: np.ndarray) -> np.ndarray:
    """Views an array of planar vectors with shape ``(..., 2)`` as complex numbers."""
    arr = np.asarray(positions, dtype=float)
    return arr[..., 0] + 1j * arr[..., 1]


def from_complex(values: np.ndarray) -> np.ndarray:
    """Inverse of ``as_complex``, returns an array of shape ``(..., 2)``."""
    values = np.asarray(values, dtype=complex)
    return np.stack([values.real, values.imag], axis=-1)


def wedge(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Returns the planar wedge product ``a ∧ b`` of arrays of shape ``(..., 2)``."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def _check_triple(array: Sequence | np.ndarray, name: str) -> np.ndarray:
    arr = np.array(array, dtype=float)
    if arr.shape != (3, 2):
        raise ValueError(f"'{name}' must have shape (3, 2), but {arr.shape} was given.")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"'{name}' must contain finite values, but {arr} was given.")

    scale = max(1.0, float(np.max(np.abs(arr))))
    residual = float(np.max(np.abs(arr.sum(axis=0))))
    if residual > ZERO_SUM_TOL * scale:
        raise ValueError(
            f"'{name}' must add up to zero, but the sum has size {residual:.3e}. "
            "Use 'recenter=True' to move the center of mass to the origin."
        )

    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Configuration:
    """Three planar positions with their center of mass at the origin.

    Parameters
    ----------
    positions
        Array of shape ``(3, 2)``. Row ``i`` is the position of body ``i + 1``.

    Raises
    ------
    ValueError
        If ``positions`` does not have shape ``(3, 2)`` or does not add up
        to zero within ``ZERO_SUM_TOL``.
    """

    positions: np.ndarray
    name: InitVar[str] = "positions"

    def __post_init__(self, name: str) -> None:
        positions = _check_triple(self.positions, name)
        object.__setattr__(self, "positions", positions)
        return

    @classmethod
    def from_bodies(
        cls, x1: Sequence[float], x2: Sequence[float], x3: Sequence[float], **kargs
    ) -> Configuration:
        return cls.from_array(np.array([x1, x2, x3], dtype=float), **kargs)

    @classmethod
    def from_array(
        cls, positions: np.ndarray, recenter: bool = False, name: str = "positions"
    ) -> Configuration:
        """Builds a configuration, optionally subtracting the center of mass.

        ``name`` labels the array in error messages.
        """
        positions = np.array(positions, dtype=float)
        if recenter:
            positions = positions - positions.mean(axis=0)
        return cls(positions, name)

    @classmethod
    def from_complex(cls, values: Sequence[complex], **kargs) -> Configuration:
        return cls.from_array(from_complex(values), **kargs)

    @classmethod
    def from_flat(cls, values: Sequence[float], **kargs) -> Configuration:
        """Builds a configuration from ``[x1re, x1im, x2re, x2im, x3re, x3im]``."""
        positions = np.reshape(np.asarray(values, dtype=float), (3, 2))
        return cls.from_array(positions, **kargs)

    @classmethod
    def zeros(cls) -> Configuration:
        return cls(np.zeros((3, 2)))

    @property
    def x1(self) -> np.ndarray:
        return self.positions[0]

    @property
    def x2(self) -> np.ndarray:
        return self.positions[1]

    @property
    def x3(self) -> np.ndarray:
        return self.positions[2]

    def as_complex(self) -> np.ndarray:
        return as_complex(self.positions)

    def flatten(self) -> np.ndarray:
        return self.positions.reshape(6).copy()

    def rotated(self, angle: float) -> Configuration:
        """Returns the configuration rotated by ``angle`` around the origin."""
        return Configuration(from_complex(np.exp(1j * angle) * self.as_complex()))

    def scaled(self, factor: float) -> Configuration:
        return Configuration(factor * self.positions)

    def __add__(self, other: Configuration) -> Configuration:
        return Configuration(self.positions + other.positions)

    def __sub__(self, other: Configuration) -> Configuration:
        return Configuration(self.positions - other.positions)

    def __repr__(self) -> str:
        return f"Configuration({self.positions.tolist()})"


@dataclass(frozen=True, eq=False)
class State:
    """A phase-space point: a configuration ``q`` and its velocity ``v``."""

    q: Configuration
    v: Configuration

    def __post_init__(self) -> None:
        if not isinstance(self.q, Configuration):
            raise TypeError(
                f"'q' must be a Configuration, but {type(self.q)} was given."
            )
        if not isinstance(self.v, Configuration):
            raise TypeError(
                f"'v' must be a Configuration, but {type(self.v)} was given."
            )
        return

    @classmethod
    def from_flat(cls, values: Sequence[float], recenter: bool = False) -> State:
        """Builds a state from the 12 numbers ``[x1re, ..., x3im, v1re, ..., v3im]``."""
        values = np.asarray(values, dtype=float)
        if values.shape != (12,):
            raise ValueError(
                f"A state needs 12 numbers, but shape {values.shape} was given."
            )
        q = Configuration.from_flat(values[:6], recenter=recenter)
        v = Configuration.from_flat(values[6:], recenter=recenter, name="velocities")
        return cls(q, v)

    def flatten(self) -> np.ndarray:
        return np.concatenate([self.q.flatten(), self.v.flatten()])

    def __repr__(self) -> str:
        return f"State(q={self.q.positions.tolist()}, v={self.v.positions.tolist()})"


@dataclass(frozen=True, eq=False)
class JacobiCoords:
    """Jacobi coordinates ``(z1, z2)``, each a planar vector."""

    z1: np.ndarray
    z2: np.ndarray

    def __post_init__(self) -> None:
        for name in ("z1", "z2"):
            vec = np.array(getattr(self, name), dtype=float)
            if vec.shape != (2,):
                raise ValueError(
                    f"'{name}' must be a planar vector, but {vec.shape} was given."
                )
            vec.setflags(write=False)
            object.__setattr__(self, name, vec)
        return

    @classmethod
    def from_complex(cls, z1: complex, z2: complex) -> JacobiCoords:
        return cls(np.array([z1.real, z1.imag]), np.array([z2.real, z2.imag]))

    def as_complex(self) -> tuple[complex, complex]:
        return complex(*self.z1), complex(*self.z2)

    @property
    def norm2(self) -> float:
        """Returns ``|z1|² + |z2|²``, i.e. the moment of inertia of the source."""
        return float(self.z1 @ self.z1 + self.z2 @ self.z2)


@dataclass(frozen=True)
class ShapeVector:
    """Point ``(u1, u2, u3)`` of the reduced shape space."""

    u1: float
    u2: float
    u3: float

    @classmethod
    def from_array(cls, values: Sequence[float]) -> ShapeVector:
        u1, u2, u3 = (float(v) for v in values)
        return cls(u1, u2, u3)

    def as_array(self) -> np.ndarray:
        return np.array([self.u1, self.u2, self.u3])

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))

    def normalized(self) -> ShapeVector:
        norm = self.norm
        if norm == 0:
            raise ValueError("The zero shape vector (triple collision) has no axis.")
        return ShapeVector.from_array(self.as_array() / norm)


@dataclass(frozen=True)
class SphericalShape:
    """Spherical form ``(r, θ, φ)`` of a shape vector, with ``r = √I``."""

    r: float
    theta: float
    phi: float

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError(f"'r' must be nonnegative, but {self.r} was given.")
        if abs(self.phi) > np.pi / 2 + 1e-15:
            raise ValueError(f"'phi' must be in [-π/2, π/2], but {self.phi} was given.")
        object.__setattr__(self, "theta", float(np.mod(self.theta, 2 * np.pi)))
        return
