"""Assembly of the periodic orbit, its symmetries and the area rule."""

from .symmetries import (
    SymmetryOp,
    identity,
    permute,
    swap,
    plane_rotation,
    plane_reflect,
    plane_half_turn,
    reflect_meridian,
    half_twist,
    time_reverse,
    apply_symmetry,
    apply_symmetry_state,
)
from .orbit import (
    Orbit,
    choreography_residual,
    klein_residuals,
    isosceles_return_residual,
    mean_position,
)
from .builder import build_orbit, assemble
from .area import (
    spherical_area,
    close_along_equator,
    area_rule_angle,
    euler_line_angle,
    angle_distance,
)
from .plotter import plot_orbit, plot_shape_curve

__all__ = [
    "SymmetryOp",
    "identity",
    "permute",
    "swap",
    "plane_rotation",
    "plane_reflect",
    "plane_half_turn",
    "reflect_meridian",
    "half_twist",
    "time_reverse",
    "apply_symmetry",
    "apply_symmetry_state",
    "Orbit",
    "choreography_residual",
    "klein_residuals",
    "isosceles_return_residual",
    "mean_position",
    "build_orbit",
    "assemble",
    "spherical_area",
    "close_along_equator",
    "area_rule_angle",
    "euler_line_angle",
    "angle_distance",
    "plot_orbit",
    "plot_shape_curve",
]
