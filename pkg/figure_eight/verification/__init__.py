"""Quantitative checks of the orbit and of the mean-value estimates."""

from .report import CheckResult, VerificationReport, upper_check, lower_check, record
from .means import (
    MeanValues,
    mean_values,
    path_means,
    reference_constants,
    lemma8_check,
    lagrange_jacobi_check,
    poincare_check,
    action_identity_check,
    boundary_dilation_check,
    sundman_margins,
    sundman_check,
)
from .starshape import (
    angular_momentum_curve,
    starshape_check,
    derivative_identity_check,
    euler_velocity_constraint,
)
from .cross_validation import CrossValidation, cross_validate, orbit_from_trajectory
from .verify import (
    choreography_check,
    klein_check,
    isosceles_return_check,
    angular_momentum_check,
    verify_path,
    verify_orbit,
    verify_trajectory,
)

__all__ = [
    "CheckResult",
    "VerificationReport",
    "upper_check",
    "lower_check",
    "record",
    "MeanValues",
    "mean_values",
    "path_means",
    "reference_constants",
    "lemma8_check",
    "lagrange_jacobi_check",
    "poincare_check",
    "action_identity_check",
    "boundary_dilation_check",
    "sundman_margins",
    "sundman_check",
    "angular_momentum_curve",
    "starshape_check",
    "derivative_identity_check",
    "euler_velocity_constraint",
    "CrossValidation",
    "cross_validate",
    "orbit_from_trajectory",
    "choreography_check",
    "klein_check",
    "isosceles_return_check",
    "angular_momentum_check",
    "verify_path",
    "verify_orbit",
    "verify_trajectory",
]
