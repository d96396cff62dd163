"""Adaptive integration of the planar three-body equations with unit masses."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from pathlib import Path

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import CubicHermiteSpline
from xarray import DataArray, Dataset

from ..shapes import (
    Configuration,
    State,
    min_separation,
    potential_array,
    potential_gradient,
    wedge,
)
from ..util.errors import CollisionError, IntegrationError
from ..util.io import read_csv, write_csv

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
DEFAULT_METHOD = "DOP853"

STATE_COLUMNS = [
    f"{kind}{body}_{part}"
    for kind in ("x", "v")
    for body in (1, 2, 3)
    for part in ("re", "im")
]
CSV_COLUMNS = ["t", *STATE_COLUMNS, "I", "U", "H", "C"]
INVARIANTS = ("I", "U", "K", "H", "C", "J")


def accelerations(c: Configuration) -> Configuration:
    """Returns ``ẍ_i = Σ_{j≠i} (x_j - x_i)/r_ij³`` for unit masses.

    Raises
    ------
    CollisionError
        If two bodies coincide.
    """
    separation = min_separation(c.positions)
    if separation == 0:
        raise CollisionError("The accelerations are undefined at a collision.")
    return Configuration(potential_gradient(c.positions))


def equations_of_motion(t: float, y: np.ndarray) -> np.ndarray:
    """Right-hand side for the state ``y = [x1re, ..., x3im, v1re, ..., v3im]``."""
    positions = y[:6].reshape(3, 2)
    return np.concatenate([y[6:], potential_gradient(positions).reshape(6)])


def invariants_array(positions: np.ndarray, velocities: np.ndarray) -> dict:
    """Returns ``I, U, K, H, C, J`` for arrays of shape ``(..., 3, 2)``."""
    inertia = np.sum(positions**2, axis=(-2, -1))
    potential = potential_array(positions)
    kinetic = np.sum(velocities**2, axis=(-2, -1))
    return dict(
        I=inertia,
        U=potential,
        K=kinetic,
        H=0.5 * kinetic - potential,
        C=np.sum(wedge(positions, velocities), axis=-1),
        J=np.sum(positions * velocities, axis=(-2, -1)),
    )


class Trajectory:
    """Samples of a solution of the three-body equations.

    Parameters
    ----------
    times
        Increasing (or decreasing) sample times of shape ``(k,)``.
    positions
        Array of shape ``(k, 3, 2)``.
    velocities
        Array of shape ``(k, 3, 2)``.
    dense
        Continuous solution ``t ↦ y(t)`` from the integrator. Without it,
        ``state_at`` interpolates the samples with cubic Hermite splines.
    stats
        Integrator statistics, e.g. ``nfev``, ``steps``, ``tol`` and ``method``.
    """

    def __init__(
        self,
        times: Sequence[float],
        positions: np.ndarray,
        velocities: np.ndarray,
        dense: Callable[[float], np.ndarray] | None = None,
        stats: dict | None = None,
    ) -> None:
        times = np.array(times, dtype=float)
        positions = np.array(positions, dtype=float)
        velocities = np.array(velocities, dtype=float)
        if times.ndim != 1 or len(times) < 2:
            raise ValueError("'times' must be a 1D array with at least two times.")
        shape = (len(times), 3, 2)
        for name, array in [("positions", positions), ("velocities", velocities)]:
            if array.shape != shape:
                raise ValueError(
                    f"'{name}' must have shape {shape}, but {array.shape} was given."
                )
        steps = np.diff(times)
        if not (np.all(steps > 0) or np.all(steps < 0)):
            raise ValueError("'times' must be strictly monotonic.")

        for array in (times, positions, velocities):
            array.setflags(write=False)
        self._times = times
        self._positions = positions
        self._velocities = velocities
        self._dense = dense
        self.stats = dict(stats) if stats else {}
        self._invariants = None
        return

    @classmethod
    def from_flat(cls, times: np.ndarray, states: np.ndarray, **kargs) -> Trajectory:
        """Builds a trajectory from states of shape ``(k, 12)``."""
        states = np.asarray(states, dtype=float)
        positions = states[:, :6].reshape(-1, 3, 2)
        velocities = states[:, 6:].reshape(-1, 3, 2)
        return cls(times, positions, velocities, **kargs)

    @classmethod
    def from_path(cls, path) -> Trajectory:
        """Samples of a discrete path with its Verlet-consistent velocities."""
        return cls(path.times, path.positions, path.velocities())

    @classmethod
    def from_orbit(cls, orbit) -> Trajectory:
        """One period of an orbit, both endpoints included."""
        times = np.append(orbit.times, orbit.Tbar)
        return cls(times, orbit.positions_at(times), orbit.positions_at(times, 1))

    @property
    def times(self) -> np.ndarray:
        return self._times

    @property
    def positions(self) -> np.ndarray:
        return self._positions

    @property
    def velocities(self) -> np.ndarray:
        return self._velocities

    @property
    def t_end(self) -> float:
        return float(self._times[-1])

    @property
    def flat_states(self) -> np.ndarray:
        return np.concatenate(
            [self._positions.reshape(-1, 6), self._velocities.reshape(-1, 6)], axis=1
        )

    def __len__(self) -> int:
        return len(self._times)

    def state(self, index: int) -> State:
        return State(
            Configuration.from_array(self._positions[index], recenter=True),
            Configuration.from_array(self._velocities[index], recenter=True),
        )

    def _interpolant(self) -> Callable[[float | np.ndarray], np.ndarray]:
        if self._dense is None:
            order = np.argsort(self._times)
            times = self._times[order]
            flat = self.flat_states[order]
            derivatives = np.array(
                [equations_of_motion(s, y) for s, y in zip(times, flat)]
            )
            spline = CubicHermiteSpline(times, flat, derivatives, axis=0)
            self._dense = lambda t: spline(t).T
        return self._dense

    def _check_times(self, times: float | np.ndarray) -> None:
        low, high = sorted((self._times[0], self._times[-1]))
        times = np.asarray(times)
        if np.any(times < low) or np.any(times > high):
            raise ValueError(
                f"Times must be in [{low}, {high}], but {times} were given."
            )
        return

    def state_at(self, t: float) -> State:
        """Returns the state at any time inside the span of the trajectory."""
        self._check_times(t)
        return State.from_flat(self._interpolant()(t), recenter=True)

    def resample(self, times: Sequence[float]) -> Trajectory:
        """Interpolates the trajectory at the given times, e.g. a uniform grid."""
        times = np.asarray(times, dtype=float)
        self._check_times(times)
        states = self._interpolant()(times).T
        return Trajectory.from_flat(times, states, stats=self.stats)

    def invariants(self) -> dict[str, np.ndarray]:
        """Returns ``I, U, K, H, C, J`` at every sample."""
        if self._invariants is None:
            self._invariants = invariants_array(self._positions, self._velocities)
        return self._invariants

    def drift(self, name: str) -> float:
        """Returns ``max_t |f(t) - f(0)|`` for one of the invariants."""
        values = self.invariants()[name]
        return float(np.max(np.abs(values - values[0])))

    def relative_variation(self, name: str) -> float:
        """Returns ``(max f - min f)/|mean f|`` for one of the invariants."""
        values = self.invariants()[name]
        return float((values.max() - values.min()) / abs(values.mean()))

    def momentum_drift(self) -> float:
        """Returns the largest change of the total momentum ``v1 + v2 + v3``."""
        momentum = self._velocities.sum(axis=1)
        return float(np.max(np.abs(momentum - momentum[0])))

    def periodicity_defect(self) -> float:
        """Returns ``max |y(t_end) - y(0)|`` over the 12 phase coordinates."""
        states = self.flat_states
        return float(np.max(np.abs(states[-1] - states[0])))

    def to_dataset(self) -> Dataset:
        """Returns a dataset with variables ``position``, ``velocity``, ``I``,
        ``U``, ``H``, ``C``, ``J`` and ``K``.
        """
        dims = ["time", "body", "coord"]
        data_vars = dict(
            position=DataArray(data=self._positions, dims=dims),
            velocity=DataArray(data=self._velocities, dims=dims),
        )
        for name in ("I", "U", "H", "C", "J", "K"):
            data_vars[name] = DataArray(data=self.invariants()[name], dims=["time"])
        return Dataset(
            data_vars=data_vars,
            coords=dict(time=self._times, body=[1, 2, 3], coord=["re", "im"]),
            attrs={k: v for k, v in self.stats.items() if isinstance(v, (int, float))},
        )

    def to_netcdf(self, filename: str | Path) -> None:
        self.to_dataset().to_netcdf(filename)
        return

    def to_csv(self, filename: str | Path) -> None:
        """Stores the samples with the columns ``t``, the 12 phase coordinates,
        ``I``, ``U``, ``H`` and ``C``.
        """
        invariants = self.invariants()
        data = np.column_stack(
            [self._times, self.flat_states]
            + [invariants[name] for name in ("I", "U", "H", "C")]
        )
        write_csv(filename, CSV_COLUMNS, data)
        return

    def __repr__(self) -> str:
        return f"Trajectory(t_end={self.t_end!r}, samples={len(self)})"


def read_trajectory_csv(filename: str | Path) -> Trajectory:
    """Loads the samples stored by ``Trajectory.to_csv``."""
    columns, data = read_csv(filename)
    missing = [name for name in ["t", *STATE_COLUMNS] if name not in columns]
    if missing:
        raise ValueError(f"The file {filename} lacks the columns {missing}.")
    index = [columns.index(name) for name in STATE_COLUMNS]
    return Trajectory.from_flat(data[:, columns.index("t")], data[:, index])


def check_initial_state(s0: State) -> None:
    if not isinstance(s0, State):
        raise TypeError(f"'s0' must be a State, but {type(s0)} was given.")
    separation = min_separation(s0.q.positions)
    if separation == 0:
        raise CollisionError(
            "The initial state has a collision.", separation=separation
        )
    return


def integrate(
    s0: State,
    t_end: float,
    tol: float = DEFAULT_TOL,
    samples: int | None = None,
    method: str = DEFAULT_METHOD,
    fixed_step: float | None = None,
) -> Trajectory:
    """Integrates the three-body equations from ``s0`` up to ``t_end``.

    Parameters
    ----------
    s0
        Collision-free initial state.
    t_end
        Final time, negative values integrate backwards.
    tol
        Relative and absolute tolerance of the local error per step.
    samples
        Number of uniform time steps at which the solution is sampled. By
        default the samples are the steps taken by the integrator.
    method
        Method of ``scipy.integrate.solve_ivp``, by default the explicit
        Runge-Kutta pair of order 8(5,3).
    fixed_step
        When given, every step has this size and ``tol`` is ignored.

    Returns
    -------
    trajectory
        Samples with dense output attached.

    Raises
    ------
    CollisionError
        If ``s0`` has a collision.
    IntegrationError
        If the step size underflows, e.g. near a close approach.
    """
    check_initial_state(s0)
    if not isinstance(t_end, (float, int)) or t_end == 0:
        raise ValueError(f"'t_end' must be a nonzero float, but {t_end} was given.")
    if not tol > 0:
        raise ValueError(f"'tol' must be positive, but {tol} was given.")
    if samples is not None and (not isinstance(samples, int) or samples < 1):
        raise ValueError(f"'samples' must be a positive int, but {samples} was given.")

    options = dict(rtol=tol, atol=tol)
    if fixed_step is not None:
        if not fixed_step > 0:
            raise ValueError(
                f"'fixed_step' must be positive, but {fixed_step} was given."
            )
        # the error estimate never rejects a step and the growth is capped
        options = dict(rtol=1e3, atol=1e3, first_step=fixed_step, max_step=fixed_step)

    t_eval = None
    if samples is not None:
        t_eval = np.linspace(0, t_end, samples + 1)

    solution = solve_ivp(
        equations_of_motion,
        (0.0, float(t_end)),
        s0.flatten(),
        method=method,
        t_eval=t_eval,
        dense_output=True,
        **options,
    )
    if solution.status != 0:
        time = float(solution.t[-1]) if len(solution.t) else 0.0
        raise IntegrationError(
            f"The integration stopped at t = {time}: {solution.message}", time=time
        )

    stats = dict(
        nfev=int(solution.nfev),
        steps=len(solution.sol.ts) - 1,
        tol=float(tol),
        method=method,
    )
    trajectory = Trajectory.from_flat(
        solution.t, solution.y.T, dense=solution.sol, stats=stats
    )
    logger.info(
        "%s integration to t = %g: %d steps, %d evaluations, energy drift %.3e",
        method,
        t_end,
        stats["steps"],
        stats["nfev"],
        trajectory.drift("H"),
    )
    logger.debug(
        "Angular momentum drift %.3e, total momentum drift %.3e",
        trajectory.drift("C"),
        trajectory.momentum_drift(),
    )
    return trajectory


def estimate_order(steps: Sequence[float], errors: Sequence[float]) -> float:
    """Returns the slope of ``log(error)`` against ``log(step)``."""
    if len(steps) != len(errors) or len(steps) < 2:
        raise ValueError("At least two step sizes with their errors are needed.")
    slope, _ = np.polyfit(np.log(steps), np.log(errors), 1)
    return float(slope)
