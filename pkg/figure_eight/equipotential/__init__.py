"""The Euler equipotential on the shape sphere and its length."""

from .curve import (
    EquipotentialSample,
    Partials,
    implicit_F,
    implicit_F_partials,
    newton_phi,
    slope,
    saddle_slope,
    solve_phi,
    solve_phi_at_euler,
    trace_arc,
    arc_arrays,
    refine_arc,
    arc_grid,
)
from .length import (
    LengthResult,
    ELL0_LOWER,
    ELL0_UPPER,
    arc_integrand,
    euler_length,
    trace_segment,
    full_curve_length,
    write_samples_csv,
)
from .reduced_path import arclength_table, horizontal_lift, reduced_test_path

__all__ = [
    "EquipotentialSample",
    "Partials",
    "implicit_F",
    "implicit_F_partials",
    "newton_phi",
    "slope",
    "saddle_slope",
    "solve_phi",
    "solve_phi_at_euler",
    "trace_arc",
    "arc_arrays",
    "refine_arc",
    "arc_grid",
    "LengthResult",
    "ELL0_LOWER",
    "ELL0_UPPER",
    "arc_integrand",
    "euler_length",
    "trace_segment",
    "full_curve_length",
    "write_samples_csv",
    "arclength_table",
    "horizontal_lift",
    "reduced_test_path",
]
