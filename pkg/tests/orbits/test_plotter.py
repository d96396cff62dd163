import matplotlib.pyplot as plt
import numpy as np

from figure_eight.orbits import Orbit, plot_orbit, plot_shape_curve
from figure_eight.orbits.plotter import shape_coordinates


def lemniscate(m: int) -> Orbit:
    s = 2 * np.pi * np.arange(m) / m
    return Orbit(2 * np.pi, np.stack([np.sin(s), np.sin(s) * np.cos(s)], axis=1))


def test_plot_orbit(show_figures):
    _, ax = plt.subplots()
    orbit = lemniscate(240)

    ax = plot_orbit(ax, orbit, time=0.4)
    assert len(ax.lines) == 1
    assert len(ax.patches) == 3

    if show_figures:
        plt.show()
    plt.close()
    return


def test_plot_shape_curve(show_figures):
    _, ax = plt.subplots()
    orbit = lemniscate(240)

    coords = shape_coordinates(orbit)
    assert coords.shape == (240, 2)
    assert np.all(np.abs(coords[:, 1]) <= np.pi / 2)

    plot_shape_curve(ax, orbit)

    if show_figures:
        plt.show()
    plt.close()
    return


def test_plot_built_orbit(built_orbit, show_figures):
    _, (ax_plane, ax_shape) = plt.subplots(ncols=2)
    plot_orbit(ax_plane, built_orbit, time=None)
    plot_shape_curve(ax_shape, built_orbit)

    if show_figures:
        plt.show()
    plt.close()
    return
