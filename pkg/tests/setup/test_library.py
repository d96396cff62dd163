import numpy as np

from figure_eight.integrator import SIMO_PERIOD
from figure_eight.setup import DefaultRunConfig, SimoRunConfig


def test_DefaultRunConfig():
    config = DefaultRunConfig()
    assert np.isclose(config.param("period"), 2 * np.pi / 12)
    assert config.name == "Default run"

    config = DefaultRunConfig(segments=64, levels=2)
    assert config.param("segments") == 64
    return


def test_SimoRunConfig():
    config = SimoRunConfig()
    assert config.param("period") == SIMO_PERIOD / 12
    assert config.param("t_end") == SIMO_PERIOD

    config = SimoRunConfig(t_end=2 * SIMO_PERIOD)
    assert config.param("t_end") == 2 * SIMO_PERIOD
    return
