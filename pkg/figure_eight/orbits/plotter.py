from collections.abc import Iterable

import numpy as np
from matplotlib.axes import Axes
from matplotlib.lines import Line2D
from matplotlib.patches import Circle

from .orbit import Orbit

CoordRange = tuple[float, float]

# Order in which to draw the elements, bodies on top of the curves
ZORDERS = dict(curve=1, marker=2, body=3)

COLORS = {
    "red": "#e41a1cff",
    "green": "#4daf4aff",
    "blue": "#377eb8ff",
    "orange": "#ff9933ff",
    "purple": "#984ea3ff",
    "grey": "#999999ff",
}
BODY_COLORS = (COLORS["red"], COLORS["green"], COLORS["blue"])

# (θ, φ) of the collision and Euler points of the shape sphere
SHAPE_MARKERS = {
    "C1": (np.pi, 0),
    "C2": (np.pi / 3, 0),
    "C3": (-np.pi / 3, 0),
    "E1": (0, 0),
    "E2": (-2 * np.pi / 3, 0),
    "E3": (2 * np.pi / 3, 0),
}


def get_curve(coordinates: np.ndarray, closed: bool = False, **kwargs) -> Line2D:
    """Draws a polyline through an array of planar points.

    Parameters
    ----------
    coordinates
        Array of shape ``(k, 2)``.
    closed
        Flag to join the last point with the first one.
    **kargs
        Extra arguments for ``matplotlib.lines.Line2D``.
    """
    coordinates = np.asarray(coordinates)
    if closed:
        coordinates = np.concatenate([coordinates, coordinates[:1]])
    return Line2D(*coordinates.T, zorder=ZORDERS["curve"], **kwargs)


def body_artists(positions: np.ndarray, radius: float = 0.04) -> Iterable[Circle]:
    for body, center in enumerate(positions):
        yield Circle(
            center,
            radius=radius,
            facecolor=BODY_COLORS[body],
            edgecolor="black",
            zorder=ZORDERS["body"],
        )


def _padded_range(values: np.ndarray, pad: float) -> CoordRange:
    return float(values.min() - pad), float(values.max() + pad)


def plot_orbit(
    ax: Axes, orbit: Orbit, time: float | None = 0.0, pad: float = 0.1, **kwargs
) -> Axes:
    """Plots the curve ``q`` of the choreography in the inertial plane.

    Parameters
    ----------
    ax
        The axis to plot the orbit on.
    orbit
        The orbit to plot.
    time
        Time at which the three bodies are drawn, ``None`` to skip them.
    pad
        Padding around the curve.
    **kargs
        Extra arguments for the curve's ``matplotlib.lines.Line2D``.

    Returns
    -------
    ax
        The axis the orbit was plotted on.
    """
    params = dict(color=COLORS["grey"], linewidth=1.5)
    params.update(kwargs)
    ax.add_line(get_curve(orbit.q, closed=True, **params))

    if time is not None:
        for artist in body_artists(orbit.at(time).positions):
            ax.add_patch(artist)

    ax.set_xlim(*_padded_range(orbit.q[:, 0], pad))
    ax.set_ylim(*_padded_range(orbit.q[:, 1], pad))
    ax.set_xlabel("$x$")
    ax.set_ylabel("$y$")
    ax.set_aspect("equal")
    return ax


def shape_coordinates(orbit: Orbit) -> np.ndarray:
    """Returns the longitude ``θ`` and latitude ``φ`` of the shape curve."""
    u = orbit.shape_curve()
    theta = np.arctan2(u[:, 1], u[:, 0])
    phi = np.arcsin(np.clip(u[:, 2], -1, 1))
    return np.stack([theta, phi], axis=1)


def plot_shape_curve(ax: Axes, orbit: Orbit, add_markers: bool = True) -> Axes:
    """Plots the shape curve of the orbit in the ``(θ, φ)`` plane.

    The curve is split where ``θ`` wraps around, so that no line crosses
    the whole plot.
    """
    coords = shape_coordinates(orbit)
    coords = np.concatenate([coords, coords[:1]])
    breaks = np.flatnonzero(np.abs(np.diff(coords[:, 0])) > np.pi) + 1
    for piece in np.split(coords, breaks):
        if len(piece) > 1:
            ax.add_line(get_curve(piece, color=COLORS["blue"], linewidth=1.5))

    if add_markers:
        for name, (theta, phi) in SHAPE_MARKERS.items():
            color = COLORS["red"] if name.startswith("C") else COLORS["orange"]
            ax.plot(theta, phi, "o", color=color, zorder=ZORDERS["marker"])
            ax.annotate(name, (theta, phi), textcoords="offset points", xytext=(4, 4))

    ax.set_xlim(-np.pi, np.pi)
    ax.set_ylim(-np.pi / 2, np.pi / 2)
    ax.set_xlabel(r"$\theta$")
    ax.set_ylabel(r"$\varphi$")
    return ax
