"""Curve dumps of an orbit as CSV, JSON or a static SVG figure."""

from __future__ import annotations

from pathlib import Path

import numpy as np
from matplotlib import rc_context
from matplotlib.figure import Figure

from ..orbits import Orbit, plot_orbit, plot_shape_curve
from ..orbits.plotter import shape_coordinates
from ..util.io import read_csv, write_csv

FORMATS = ("csv", "json", "svg")
CURVE_COLUMNS = (
    "t",
    "q_re",
    "q_im",
    "x1_re",
    "x1_im",
    "x2_re",
    "x2_im",
    "x3_re",
    "x3_im",
    "theta",
    "phi",
)
# the salt fixes the element ids of the SVG
SVG_PARAMS = {"svg.hashsalt": "figure-eight"}


def curve_table(orbit: Orbit) -> np.ndarray:
    """Returns the rows of the closed curve, the first sample repeated at
    ``t = Tbar``.
    """
    times = np.append(orbit.times, orbit.Tbar)
    q = np.concatenate([orbit.q, orbit.q[:1]])
    x = np.concatenate([orbit.x, orbit.x[:1]]).reshape(-1, 6)
    shapes = shape_coordinates(orbit)
    shapes = np.concatenate([shapes, shapes[:1]])
    return np.column_stack([times, q, x, shapes])


def read_curve_csv(filename: str | Path) -> Orbit:
    """Loads an orbit stored by ``export_curve`` in CSV format."""
    columns, data = read_csv(filename)
    if list(columns) != list(CURVE_COLUMNS):
        raise ValueError(f"The file {filename} does not hold an orbit curve.")
    Tbar = float(data[-1, 0])
    q = data[:-1, 1:3]
    x = data[:-1, 3:9].reshape(-1, 3, 2)
    return Orbit(Tbar, q, x)


def export_svg(orbit: Orbit, filename: str | Path) -> None:
    """Draws the eight ``q`` in the plane next to its shape curve in ``(θ, φ)``."""
    with rc_context(SVG_PARAMS):
        fig = Figure(figsize=(11, 4))
        ax_plane, ax_shape = fig.subplots(1, 2)
        plot_orbit(ax_plane, orbit)
        plot_shape_curve(ax_shape, orbit)
        fig.tight_layout()
        fig.savefig(filename, format="svg", metadata={"Date": None})
    return


def export_curve(orbit: Orbit, filename: str | Path, fmt: str | None = None) -> Path:
    """Stores the curve of ``orbit``.

    Parameters
    ----------
    orbit
        Orbit to export.
    filename
        Output file.
    fmt
        One of ``"csv"``, ``"json"`` or ``"svg"``. By default it is taken
        from the suffix of ``filename``.

    Returns
    -------
    filename
        The file that was written.
    """
    if not isinstance(orbit, Orbit):
        raise TypeError(f"'orbit' must be an Orbit, but {type(orbit)} was given.")
    filename = Path(filename)
    fmt = filename.suffix.lstrip(".").lower() if fmt is None else fmt
    if fmt not in FORMATS:
        raise ValueError(f"'fmt' must be one of {FORMATS}, but {fmt!r} was given.")

    if fmt == "csv":
        write_csv(filename, CURVE_COLUMNS, curve_table(orbit))
    elif fmt == "json":
        orbit.to_json(filename)
    else:
        export_svg(orbit, filename)
    return filename
