from .errors import (
    CollisionError,
    ConvergenceError,
    IntegrationError,
    JunctionError,
    StageError,
)
from .io import (
    format_float,
    dumps_json,
    write_json,
    read_json,
    write_csv,
    read_csv,
)

__all__ = [
    "CollisionError",
    "ConvergenceError",
    "IntegrationError",
    "JunctionError",
    "StageError",
    "format_float",
    "dumps_json",
    "write_json",
    "read_json",
    "write_csv",
    "read_csv",
]
