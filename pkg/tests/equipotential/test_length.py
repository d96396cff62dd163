import numpy as np
import pytest

from figure_eight.equipotential import (
    LengthResult,
    ELL0_LOWER,
    ELL0_UPPER,
    arc_integrand,
    euler_length,
    trace_arc,
    trace_segment,
    full_curve_length,
    write_samples_csv,
    implicit_F,
    saddle_slope,
)
from figure_eight.util import read_csv
from figure_eight.util.errors import ConvergenceError


def test_arc_integrand():
    assert np.isclose(arc_integrand(0.0, 0.0), 0.5)
    assert np.isclose(arc_integrand(np.pi / 2, 1.0), 0.5)
    assert np.isclose(arc_integrand(0.0, np.sqrt(3)), 1.0)
    return


def test_euler_length(euler_result):
    assert isinstance(euler_result, LengthResult)
    assert ELL0_LOWER <= euler_result.ell0 <= ELL0_UPPER
    assert euler_result.ell0 < np.pi / 5
    assert euler_result.estimated_error < 1e-12
    assert euler_result.samples > 64
    return


def test_euler_length_errors():
    with pytest.raises(ValueError):
        euler_length(n_base=4)
    with pytest.raises(ValueError):
        euler_length(refinements=0)
    with pytest.raises(ValueError):
        euler_length(tol=0)

    with pytest.raises(ConvergenceError) as error:
        euler_length(n_base=16, refinements=1, tol=1e-30)
    assert abs(error.value.best - np.pi / 5.08255392451) < 1e-3
    assert error.value.gap > 0
    return


def test_trace_segment():
    theta, phi, phi_prime = trace_segment(0, 64)
    assert np.isclose(theta[0], 0) and np.isclose(theta[-1], 2 * np.pi / 3)
    assert phi[0] == 0 and phi[-1] == 0
    assert np.all(phi[1:-1] > 0)
    assert np.max(np.abs(implicit_F(theta[1:-1], phi[1:-1]))) < 1e-13
    assert np.isclose(phi_prime[0], saddle_slope())

    # the first half of lobe 0 is the working arc
    samples = trace_arc(32)
    assert np.allclose(phi[:33], [s.phi for s in samples], atol=1e-13)

    theta, phi, phi_prime = trace_segment(1, 64)
    assert np.isclose(theta[0], 2 * np.pi / 3)
    assert np.all(phi[1:-1] < 0)
    assert np.isclose(phi_prime[0], -saddle_slope())

    with pytest.raises(ValueError):
        trace_segment(0, 63)
    return


def test_full_curve_length(ell0):
    total = full_curve_length(1024)
    assert abs(total / 12 - ell0) < 1e-10
    return


def test_write_samples_csv(tmp_path):
    samples = trace_arc(8)
    filename = tmp_path / "arc.csv"
    write_samples_csv(samples, filename)

    columns, data = read_csv(filename)
    assert tuple(columns) == ("theta", "phi", "phi_prime")
    assert data.shape == (9, 3)
    assert np.array_equal(data[:, 1], [s.phi for s in samples])
    return
