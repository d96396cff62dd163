import numpy as np

from figure_eight.bounds import bounds_report
from figure_eight.equipotential import euler_length, reduced_test_path
from figure_eight.minimizer import minimize_multilevel
from figure_eight.orbits import build_orbit
from figure_eight.verification import VerificationReport, verify_orbit


def test_README_example():
    PERIOD = 2 * np.pi / 12  # one twelfth of the period

    # collision bounds and optimal test path
    ell0 = euler_length().ell0
    bounds = bounds_report(ell0, PERIOD)
    assert bounds.gate_passed  # the action minimizer has no collisions

    # minimize the action on 64, 128 and 256 segments
    initial = reduced_test_path(bounds.I0_star, PERIOD, 64)
    levels = minimize_multilevel(initial, levels=3)

    # assemble the twelve arcs and check the orbit
    orbit = build_orbit(levels[-1].path)
    report = verify_orbit(orbit, ell0)
    report.summary()

    assert isinstance(report, VerificationReport)
    assert levels[-1].path.n == 256
    return
