"""Main figure-eight module."""

__version__ = "0.1.0"

from . import shapes, equipotential, bounds, minimizer, orbits, integrator, util
from . import verification, setup, cli
from .setup import RunConfig
from .orbits import Orbit
from .integrator import Trajectory
from .verification import VerificationReport

__all__ = [
    "shapes",
    "equipotential",
    "bounds",
    "minimizer",
    "orbits",
    "integrator",
    "util",
    "verification",
    "setup",
    "cli",
    "RunConfig",
    "Orbit",
    "Trajectory",
    "VerificationReport",
]
