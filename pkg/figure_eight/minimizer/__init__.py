from .path import DiscretePath, boundary_residuals
from .action import (
    discrete_action,
    action_gradient,
    gradient_array,
    relative_action,
    three_mass_action,
    trapezoid_weights,
)
from .minimizer import (
    MinimizeReport,
    SEPARATION_FLOOR,
    minimize,
    minimize_multilevel,
    newton_polish,
    observed_order,
    path_energy,
    path_to_params,
    params_to_positions,
    params_displacement,
    params_gradient,
    parameter_gradient_norm,
    angular_momenta,
)

__all__ = [
    "DiscretePath",
    "boundary_residuals",
    "discrete_action",
    "action_gradient",
    "gradient_array",
    "relative_action",
    "three_mass_action",
    "trapezoid_weights",
    "MinimizeReport",
    "SEPARATION_FLOOR",
    "minimize",
    "minimize_multilevel",
    "newton_polish",
    "observed_order",
    "path_energy",
    "path_to_params",
    "params_to_positions",
    "params_displacement",
    "params_gradient",
    "parameter_gradient_norm",
    "angular_momenta",
]
