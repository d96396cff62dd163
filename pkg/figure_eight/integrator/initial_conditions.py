"""Initial states of the three-body integrator."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from ..shapes import Configuration, State, min_separation
from ..util.errors import CollisionError
from ..util.io import read_csv, read_json
from .integrator import STATE_COLUMNS

# published initial conditions of the figure-eight (unit masses, G = 1)
SIMO_X1 = (0.97000436, -0.24308753)
SIMO_V3 = (-0.93240737, -0.86473146)
SIMO_PERIOD = 6.32591398

# cube roots of unity, one per body
ROOTS = np.exp(2j * np.pi * np.arange(3) / 3)


def simo_initial_state() -> State:
    """Returns ``x1 = -x2 = SIMO_X1``, ``x3 = 0``, ``v3 = -2v1 = -2v2 = SIMO_V3``."""
    x1 = np.array(SIMO_X1)
    v3 = np.array(SIMO_V3)
    q = Configuration.from_bodies(x1, -x1, np.zeros(2))
    v = Configuration.from_bodies(-v3 / 2, -v3 / 2, v3)
    return State(q, v)


def lagrange_angular_velocity(radius: float) -> float:
    """Angular velocity of the rigidly rotating equilateral solution."""
    if not radius > 0:
        raise ValueError(f"'radius' must be positive, but {radius} was given.")
    # the attraction 1/(√3 r²) on each body balances ω²r
    return 3 ** (-0.25) * radius ** (-1.5)


def lagrange_rotating_solution(t: float, radius: float = 1.0) -> State:
    """Closed-form state of the equilateral triangle of circumradius ``radius``
    rotating counter-clockwise about its center.
    """
    omega = lagrange_angular_velocity(radius)
    x = radius * ROOTS * np.exp(1j * omega * t)
    return State(
        Configuration.from_complex(x, recenter=True),
        Configuration.from_complex(1j * omega * x, recenter=True),
    )


def lagrange_rotating_state(radius: float = 1.0) -> State:
    return lagrange_rotating_solution(0.0, radius)


def load_state(filename: str | Path) -> State:
    """Reads 12 numbers ``[x1re, ..., x3im, v1re, ..., v3im]`` from a file.

    JSON files hold either a list of 12 numbers or a dictionary with the
    keys ``q`` and ``v`` (each a list of 3 points). CSV files hold one row
    with the columns ``x1_re, ..., v3_im``; extra columns and rows are ignored.

    Raises
    ------
    ValueError
        If the file does not hold 12 finite numbers.
    CollisionError
        If two bodies coincide.
    """
    filename = Path(filename)
    if filename.suffix == ".json":
        data = read_json(filename)
        if isinstance(data, dict):
            if "q" not in data or "v" not in data:
                raise ValueError(f"{filename} must have the keys 'q' and 'v'.")
            data = [*np.ravel(data["q"]), *np.ravel(data["v"])]
        values = np.array(data, dtype=float).ravel()
    elif filename.suffix == ".csv":
        columns, data = read_csv(filename)
        if all(name in columns for name in STATE_COLUMNS):
            values = data[0, [columns.index(name) for name in STATE_COLUMNS]]
        else:
            values = data[0]
    else:
        raise ValueError(
            f"'filename' must be a .json or .csv file, but {filename} was given."
        )

    if values.shape != (12,) or not np.all(np.isfinite(values)):
        raise ValueError(f"{filename} must hold 12 finite numbers.")
    state = State.from_flat(values, recenter=True)
    separation = min_separation(state.q.positions)
    if separation == 0:
        raise CollisionError(
            f"The state in {filename} has a collision.", separation=separation
        )
    return state
