"""Configurations, Jacobi and shape coordinates, and the potential."""

from .configuration import (
    Configuration,
    State,
    JacobiCoords,
    ShapeVector,
    SphericalShape,
    as_complex,
    from_complex,
    wedge,
)
from .maps import (
    named_points,
    jacobi_map,
    jacobi_inverse,
    hopf_map,
    shape_of,
    shape_to_sides,
    to_spherical,
    from_spherical,
    shape_section,
    section_array,
    is_collinear,
    jacobi_array,
    jacobi_inverse_array,
    hopf_array,
    shape_array,
)
from .energies import (
    potential,
    scaled_potential,
    potential_array,
    potential_gradient,
    pairwise_distances,
    min_separation,
    hermitian_product,
    moment_of_inertia,
    kinetic_energy,
    dilation,
    angular_momentum,
    energy,
    lagrangian,
    reduced_kinetic,
    SCALED_U_EULER,
    SCALED_U_LAGRANGE,
    SCALED_U_BINARY,
    SIDES,
)

__all__ = [
    "Configuration",
    "State",
    "JacobiCoords",
    "ShapeVector",
    "SphericalShape",
    "as_complex",
    "from_complex",
    "wedge",
    "named_points",
    "jacobi_map",
    "jacobi_inverse",
    "hopf_map",
    "shape_of",
    "shape_to_sides",
    "to_spherical",
    "from_spherical",
    "shape_section",
    "section_array",
    "is_collinear",
    "jacobi_array",
    "jacobi_inverse_array",
    "hopf_array",
    "shape_array",
    "potential",
    "scaled_potential",
    "potential_array",
    "potential_gradient",
    "pairwise_distances",
    "min_separation",
    "hermitian_product",
    "moment_of_inertia",
    "kinetic_energy",
    "dilation",
    "angular_momentum",
    "energy",
    "lagrangian",
    "reduced_kinetic",
    "SCALED_U_EULER",
    "SCALED_U_LAGRANGE",
    "SCALED_U_BINARY",
    "SIDES",
]
