import numpy as np
import pytest

from figure_eight.bounds import optimal_test_action
from figure_eight.equipotential import euler_length, reduced_test_path
from figure_eight.minimizer import minimize_multilevel
from figure_eight.integrator import SIMO_PERIOD, integrate, simo_initial_state
from figure_eight.orbits import build_orbit

PERIOD = 2 * np.pi / 12


def pytest_addoption(parser):
    parser.addoption("--show-figures", action="store_true")


def pytest_generate_tests(metafunc):
    # This is called for every test. Only get/set command line arguments
    # if the argument is specified in the list of test "fixturenames".
    # The hyphens in the arguments are substutited by underscores.
    option_value = metafunc.config.option.show_figures
    if "show_figures" in metafunc.fixturenames and option_value is not None:
        metafunc.parametrize("show_figures", [bool(option_value)])


@pytest.fixture(scope="session")
def euler_result():
    return euler_length()


@pytest.fixture(scope="session")
def ell0(euler_result):
    return euler_result.ell0


@pytest.fixture(scope="session")
def minimized_levels(ell0):
    """Minimizers on n = 64, 128, 256, 512 and 1024 steps for T = 2π/12."""
    I0_star, _ = optimal_test_action(ell0, PERIOD)
    initial = reduced_test_path(I0_star, PERIOD, 64)
    return minimize_multilevel(initial, levels=5, tol=1e-9, max_iter=50000)


@pytest.fixture(scope="session")
def minimized_arc(minimized_levels):
    return minimized_levels[-1]


@pytest.fixture(scope="session")
def built_orbit(minimized_arc):
    return build_orbit(minimized_arc.path)


@pytest.fixture(scope="session")
def simo_trajectory():
    """One period of the figure-eight from the published initial conditions."""
    return integrate(simo_initial_state(), SIMO_PERIOD, tol=1e-12)
