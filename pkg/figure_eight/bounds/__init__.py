from .action_bounds import (
    BoundsReport,
    DEFAULT_PERIOD,
    collision_bound_A2,
    triple_collision_bound_A3,
    test_action,
    optimal_test_action,
    bounds_report,
    simo_action_values,
    scaled_potential_constants,
)
from .kepler import semi_major_axis, kepler_ejection_action, kepler_ejection_separation

__all__ = [
    "BoundsReport",
    "DEFAULT_PERIOD",
    "collision_bound_A2",
    "triple_collision_bound_A3",
    "test_action",
    "optimal_test_action",
    "bounds_report",
    "simo_action_values",
    "scaled_potential_constants",
    "semi_major_axis",
    "kepler_ejection_action",
    "kepler_ejection_separation",
]
