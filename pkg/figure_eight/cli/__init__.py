"""Command line interface and pipeline of the ``eight`` script."""

from .export import export_curve, read_curve_csv
from .pipeline import run_pipeline, verify_all
from .main import main, build_parser

__all__ = [
    "export_curve",
    "read_curve_csv",
    "run_pipeline",
    "verify_all",
    "main",
    "build_parser",
]
