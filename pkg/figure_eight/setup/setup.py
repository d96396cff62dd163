from __future__ import annotations

import os
from copy import deepcopy
from pathlib import Path

import numpy as np
import yaml

THREADS_VARIABLE = "EIGHT_THREADS"

TOLERANCES = ("length_tol", "minimize_tol", "integrate_tol", "monodromy_tol")
POSITIVE_INTS = ("segments", "levels", "max_iter", "threads", "trajectory_samples")


def default_threads() -> int:
    """Reads ``EIGHT_THREADS``, falling back to a single thread."""
    value = os.environ.get(THREADS_VARIABLE)
    if value is None:
        return 1
    if not value.strip().isdigit() or int(value) < 1:
        raise ValueError(
            f"'{THREADS_VARIABLE}' must be a positive int, but {value!r} was given."
        )
    return int(value)


class RunConfig:
    """Parameters of a run of the figure-eight pipeline.

    Values not given in the configuration are looked up in ``PARENTS`` first,
    then in ``FILE_NAMES`` (relative to ``output_dir``) and finally in
    ``DEFAULTS``.
    """

    DEFAULTS = {
        "period": 2 * np.pi / 12,
        "segments": 512,
        "levels": 4,
        "length_tol": 1e-12,
        "minimize_tol": 1e-9,
        "max_iter": 50000,
        "integrate_tol": 1e-12,
        "samples": None,
        "trajectory_samples": 1200,
        "ics": "simo",
        "t_end": None,
        "refine_period": False,
        "ell0": "auto",
        "output_dir": ".",
        "netcdf": False,
    }
    PARENTS = {
        "monodromy_tol": "integrate_tol",
    }
    FILE_NAMES = {
        "length_file": "length.json",
        "bounds_file": "bounds.json",
        "arc_file": "arc.json",
        "orbit_file": "orbit.json",
        "trajectory_file": "trajectory.csv",
        "netcdf_file": "trajectory.nc",
        "report_file": "report.json",
        "svg_file": "eight.svg",
    }

    def __init__(self, config: dict[str, object] | None = None) -> None:
        """Initialises the ``RunConfig`` class.

        Parameters
        ----------
        config
            Dictionary with the configuration. The parameters go in the
            optional key ``"run"``; ``"name"`` and ``"description"`` are
            optional too. Unknown parameters raise a ``KeyError``.
        """
        _config = deepcopy(config) if config is not None else {}
        if not isinstance(_config, dict):
            raise TypeError(f"'config' must be a dict, but {type(config)} was given.")
        self.name = _config.pop("name", None)
        self.description = _config.pop("description", None)
        params = _config.pop("run", None) or {}
        if _config:
            raise KeyError(f"Unknown configuration keys: {sorted(_config)}.")
        if not isinstance(params, dict):
            raise TypeError(
                f"'config['run']' must be a dict, but {type(params)} was given."
            )

        self._params = dict()
        for param, val in params.items():
            self.set_param(param, val)
        return

    @classmethod
    def known_params(cls) -> list[str]:
        return [*cls.DEFAULTS, *cls.PARENTS, *cls.FILE_NAMES, "threads"]

    @classmethod
    def from_yaml(cls: type[RunConfig], filename: str | Path) -> RunConfig:
        """Create new ``figure_eight.setup.RunConfig`` instance from YAML
        configuration file.

        Parameters
        ----------
        filename
            The YAML file name.

        Returns
        -------
        RunConfig
            The initialised ``figure_eight.setup.RunConfig`` object based on
            the yaml.
        """
        with open(filename, "r") as file:
            config = yaml.safe_load(file)
            return cls(config)

    def to_dict(self) -> dict[str, object]:
        """Returns a dictionary that can be used to initialize ``RunConfig``."""
        config = dict()
        config["name"] = self.name
        config["description"] = self.description
        config["run"] = deepcopy(self._params)
        return config

    def to_yaml(self, filename: str | Path) -> None:
        """Stores the configuration in the given file in YAML format.

        Parameters
        ----------
        filename
            Name of the file in which to store the configuration.
        """
        config = self.to_dict()

        with open(filename, "w") as file:
            yaml.dump(config, file, default_flow_style=False)
        return

    def set_param(self, param: str, val: object) -> None:
        """Sets the given value to the given parameter after validating it.

        Parameters
        ----------
        param
            Name of the parameter.
        val
            Value to set to ``param``. Numpy scalars are stored as Python
            numbers.
        """
        if not isinstance(param, str):
            raise TypeError(f"'param' must be a str, but {type(param)} was given.")
        if param not in self.known_params():
            raise KeyError(f"Unknown parameter '{param}'.")
        if isinstance(val, np.generic):
            val = val.item()
        if isinstance(val, Path):
            val = str(val)
        _check_param(param, val)
        self._params[param] = val
        return

    def param(self, param: str) -> object:
        """Returns the value of the given parameter.

        Parameters
        ----------
        param
            Name of the parameter.

        Returns
        -------
        val
            Value of the parameter. Output files are returned as ``Path``.
        """
        if not isinstance(param, str):
            raise TypeError(f"'param' must be a str, but {type(param)} was given.")

        if param in self._params:
            val = self._params[param]
        elif param in self.PARENTS:
            return self.param(self.PARENTS[param])
        elif param in self.FILE_NAMES:
            return Path(self.param("output_dir")) / self.FILE_NAMES[param]
        elif param == "threads":
            return default_threads()
        elif param in self.DEFAULTS:
            val = self.DEFAULTS[param]
        else:
            raise KeyError(f"Parameter {param} not defined")

        if param in self.FILE_NAMES:
            return Path(val)
        return val

    def __getitem__(self, param: str) -> object:
        return self.param(param)

    def __repr__(self) -> str:
        return f"RunConfig(name={self.name!r}, run={self._params!r})"


def _check_param(param: str, val: object) -> None:
    if param in TOLERANCES or param in ("period", "t_end"):
        if param == "t_end" and val is None:
            return
        if not isinstance(val, (float, int)) or isinstance(val, bool):
            raise TypeError(f"'{param}' must be a float, but {type(val)} was given.")
        if not val > 0:
            raise ValueError(f"'{param}' must be positive, but {val} was given.")
    elif param in POSITIVE_INTS:
        if not isinstance(val, int) or isinstance(val, bool):
            raise TypeError(f"'{param}' must be an int, but {type(val)} was given.")
        lower = 2 if param == "segments" else 1
        if val < lower:
            raise ValueError(
                f"'{param}' must be at least {lower}, but {val} was given."
            )
    elif param == "samples":
        if val is None:
            return
        if not isinstance(val, int) or isinstance(val, bool):
            raise TypeError(f"'samples' must be an int, but {type(val)} was given.")
        if val <= 0 or val % 12 != 0:
            raise ValueError(
                f"'samples' must be a positive multiple of 12, but {val} was given."
            )
    elif param == "ell0":
        if val == "auto":
            return
        if not isinstance(val, (float, int)) or isinstance(val, bool):
            raise TypeError(
                f"'ell0' must be 'auto' or a float, but {type(val)} was given."
            )
        if not val > 0:
            raise ValueError(f"'ell0' must be positive, but {val} was given.")
    elif param in ("refine_period", "netcdf"):
        if not isinstance(val, bool):
            raise TypeError(f"'{param}' must be a bool, but {type(val)} was given.")
    elif not isinstance(val, str):
        # ics, output_dir and the output files
        raise TypeError(f"'{param}' must be a str, but {type(val)} was given.")
    return
