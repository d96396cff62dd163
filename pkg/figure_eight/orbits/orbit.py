from __future__ import annotations

from functools import cached_property
from pathlib import Path

import numpy as np
from scipy.interpolate import CubicSpline
from xarray import DataArray, Dataset

from ..shapes import Configuration, shape_array, wedge
from ..util.io import read_json, write_json

NUM_ARCS = 12


class Orbit:
    """Periodic three-body choreography sampled on a uniform time grid.

    Parameters
    ----------
    Tbar
        Period of the orbit.
    q
        Array of shape ``(m, 2)`` with the common curve at ``t_k = k Tbar/m``.
        ``m`` must be a positive multiple of 12.
    x
        Array of shape ``(m, 3, 2)`` with the three-body loop as assembled.
        By default it is induced from ``q`` by
        ``x(t) = (q(t + 2Tbar/3), q(t + Tbar/3), q(t))``.

    Notes
    -----
    Evaluations between grid points use a periodic cubic spline of ``q``.
    """

    def __init__(self, Tbar: float, q: np.ndarray, x: np.ndarray | None = None):
        if not isinstance(Tbar, (float, int)) or isinstance(Tbar, bool):
            raise TypeError(f"'Tbar' must be a float, but {type(Tbar)} was given.")
        if not Tbar > 0:
            raise ValueError(f"'Tbar' must be positive, but {Tbar} was given.")

        q = np.array(q, dtype=float)
        if q.ndim != 2 or q.shape[1] != 2:
            raise ValueError(f"'q' must have shape (m, 2), but {q.shape} was given.")
        if len(q) == 0 or len(q) % NUM_ARCS != 0:
            raise ValueError(
                f"The number of samples must be a positive multiple of {NUM_ARCS}, "
                f"but {len(q)} was given."
            )
        if not np.all(np.isfinite(q)):
            raise ValueError("'q' must contain finite values.")

        self._Tbar = float(Tbar)
        self._q = q
        self._q.setflags(write=False)

        if x is None:
            x = self.induced_positions()
        x = np.array(x, dtype=float)
        if x.shape != (len(q), 3, 2):
            raise ValueError(
                f"'x' must have shape {(len(q), 3, 2)}, but {x.shape} was given."
            )
        x.setflags(write=False)
        self._x = x
        return

    @property
    def Tbar(self) -> float:
        return self._Tbar

    @property
    def m(self) -> int:
        """Number of samples per period."""
        return len(self._q)

    @property
    def h(self) -> float:
        return self._Tbar / self.m

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.m) * self.h

    @property
    def q(self) -> np.ndarray:
        return self._q

    @property
    def x(self) -> np.ndarray:
        return self._x

    @cached_property
    def _spline(self) -> CubicSpline:
        times = np.append(self.times, self._Tbar)
        values = np.concatenate([self._q, self._q[:1]])
        return CubicSpline(times, values, axis=0, bc_type="periodic")

    def induced_positions(self) -> np.ndarray:
        """Returns ``(q(t + 2Tbar/3), q(t + Tbar/3), q(t))`` on the grid."""
        third = self.m // 3
        bodies = [np.roll(self._q, -shift, axis=0) for shift in (2 * third, third, 0)]
        return np.stack(bodies, axis=1)

    def curve(self, t: float | np.ndarray, derivative: int = 0) -> np.ndarray:
        """Evaluates ``q`` (or one of its derivatives) at arbitrary times."""
        t = np.mod(np.asarray(t, dtype=float), self._Tbar)
        return self._spline(t, nu=derivative)

    def positions_at(self, t: float | np.ndarray, derivative: int = 0) -> np.ndarray:
        """Returns the positions (or velocities) at ``t`` with shape ``(..., 3, 2)``."""
        t = np.asarray(t, dtype=float)
        shifts = (2 * self._Tbar / 3, self._Tbar / 3, 0.0)
        bodies = [self.curve(t + shift, derivative) for shift in shifts]
        return np.stack(bodies, axis=-2)

    def at(self, t: float) -> Configuration:
        return Configuration.from_array(self.positions_at(t), recenter=True)

    def velocity_at(self, t: float) -> Configuration:
        return Configuration.from_array(self.positions_at(t, 1), recenter=True)

    def shape_curve(self) -> np.ndarray:
        """Returns the unit shape vectors of the samples, shape ``(m, 3)``."""
        shapes = shape_array(self._x)
        return shapes / np.linalg.norm(shapes, axis=-1, keepdims=True)

    def shape_at(self, t: float) -> np.ndarray:
        shape = shape_array(self.at(t).positions)
        return shape / np.linalg.norm(shape)

    def segment_signs(self) -> list[int]:
        """Returns the sign of ``u3`` at the middle of each twelfth of the period."""
        step = self.m // NUM_ARCS
        middles = np.arange(NUM_ARCS) * step + step // 2
        return [int(s) for s in np.sign(shape_array(self._x[middles])[:, 2])]

    def angular_momenta(self) -> np.ndarray:
        """Returns ``ω(x_k, (x_{k+1} - x_k)/h)`` for every sample of the period."""
        steps = (np.roll(self._x, -1, axis=0) - self._x) / self.h
        return np.sum(wedge(self._x, steps), axis=-1)

    def rescaled(self, Tbar: float) -> Orbit:
        """Returns the orbit with period ``Tbar`` given by ``x → λx, t → λ^{3/2}t``."""
        if not Tbar > 0:
            raise ValueError(f"'Tbar' must be positive, but {Tbar} was given.")
        factor = (Tbar / self._Tbar) ** (2 / 3)
        return Orbit(Tbar, factor * self._q, factor * self._x)

    def to_dict(self) -> dict[str, object]:
        return {
            "Tbar": self._Tbar,
            "q": self._q,
            "x": self._x.reshape(-1, 6),
        }

    @classmethod
    def from_dict(cls, data: dict[str, object]) -> Orbit:
        if "Tbar" not in data or "q" not in data:
            raise ValueError("An orbit needs the keys 'Tbar' and 'q'.")
        x = data.get("x")
        if x is not None:
            x = np.array(x, dtype=float).reshape(-1, 3, 2)
        return cls(float(data["Tbar"]), np.array(data["q"], dtype=float), x)

    def to_json(self, filename: str | Path) -> None:
        write_json(self.to_dict(), filename)
        return

    @classmethod
    def from_json(cls, filename: str | Path) -> Orbit:
        return cls.from_dict(read_json(filename))

    def to_dataset(self) -> Dataset:
        """Returns a dataset with variables ``q`` and ``x`` and coordinates
        ``time``, ``body`` and ``coord``.
        """
        q = DataArray(data=self._q, dims=["time", "coord"])
        x = DataArray(data=self._x, dims=["time", "body", "coord"])
        return Dataset(
            data_vars=dict(q=q, x=x),
            coords=dict(time=self.times, body=[1, 2, 3], coord=["re", "im"]),
            attrs=dict(Tbar=self._Tbar),
        )

    def __repr__(self) -> str:
        return f"Orbit(Tbar={self._Tbar!r}, m={self.m})"


def choreography_residual(orbit: Orbit) -> float:
    """Returns ``max |x(t) - (q(t + 2Tbar/3), q(t + Tbar/3), q(t))|`` on the grid."""
    return float(np.max(np.abs(orbit.x - orbit.induced_positions())))


def klein_residuals(orbit: Orbit) -> dict[str, float]:
    """Returns the residuals of ``q(t + Tbar/2) = σ q(t)`` and
    ``q(Tbar/2 - t) = τ q(t)`` with ``σ(x, y) = (-x, y)``, ``τ(x, y) = (x, -y)``.
    """
    q, half = orbit.q, orbit.m // 2
    sigma_q = q * np.array([-1.0, 1.0])
    tau_q = q * np.array([1.0, -1.0])
    shifted = np.roll(q, -half, axis=0)
    reversed_ = np.roll(q[::-1], half + 1, axis=0)
    return {
        "sigma": float(np.max(np.abs(shifted - sigma_q))),
        "tau": float(np.max(np.abs(reversed_ - tau_q))),
    }


def isosceles_return_residual(orbit: Orbit) -> float:
    """Compares the isosceles configuration at ``Tbar/12`` with the one half a
    period later, which must be its image under ``(x, y) ↦ (-x, y)``.
    """
    k = orbit.m // NUM_ARCS
    later = orbit.x[k + orbit.m // 2]
    return float(np.max(np.abs(later - orbit.x[k] * np.array([-1.0, 1.0]))))


def mean_position(orbit: Orbit) -> np.ndarray:
    """Returns the time average of ``x`` over the period, shape ``(3, 2)``."""
    return orbit.x.mean(axis=0)
