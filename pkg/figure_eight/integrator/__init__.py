"""Integration of the three-body equations, initial states and monodromy."""

from .integrator import (
    Trajectory,
    accelerations,
    integrate,
    estimate_order,
    read_trajectory_csv,
    invariants_array,
    CSV_COLUMNS,
)
from .initial_conditions import (
    simo_initial_state,
    lagrange_angular_velocity,
    lagrange_rotating_state,
    lagrange_rotating_solution,
    load_state,
    SIMO_PERIOD,
)
from .monodromy import MonodromyResult, monodromy, refine_period

__all__ = [
    "Trajectory",
    "accelerations",
    "integrate",
    "estimate_order",
    "read_trajectory_csv",
    "invariants_array",
    "CSV_COLUMNS",
    "simo_initial_state",
    "lagrange_angular_velocity",
    "lagrange_rotating_state",
    "lagrange_rotating_solution",
    "load_state",
    "SIMO_PERIOD",
    "MonodromyResult",
    "monodromy",
    "refine_period",
]
