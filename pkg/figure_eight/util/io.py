from __future__ import annotations

import json
from collections.abc import Sequence
from pathlib import Path

import numpy as np

FLOAT_FORMAT = ".17g"


def format_float(value: float) -> str:
    """Formats a float with 17 significant digits, enough for a lossless
    round trip of doubles. Non-finite values use the JSON extensions
    ``NaN``, ``Infinity`` and ``-Infinity`` that ``json.loads`` accepts.
    """
    value = float(value)
    if np.isnan(value):
        return "NaN"
    if np.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    text = format(value, FLOAT_FORMAT)
    if "e" not in text and "." not in text:
        text += ".0"
    return text


def _is_scalar(obj: object) -> bool:
    return obj is None or isinstance(obj, (bool, int, float, str, np.generic))


def _dump_scalar(obj: object) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    raise TypeError(f"Cannot serialize object of type {type(obj)}.")


def dumps_json(obj: object, indent: int = 2, _level: int = 0) -> str:
    """Serializes ``obj`` deterministically.

    Dictionaries keep their insertion order, floats are written with
    ``format_float`` and lists of scalars are written on a single line.
    Numpy arrays are converted with ``tolist``.

    Parameters
    ----------
    obj
        Nested structure of ``dict``, ``list``, ``tuple``, ``np.ndarray`` and
        scalars.
    indent
        Number of spaces per nesting level.

    Returns
    -------
    text
        JSON text, identical for identical inputs.
    """
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if _is_scalar(obj):
        return _dump_scalar(obj)

    pad = " " * (indent * (_level + 1))
    end_pad = " " * (indent * _level)

    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{pad}{json.dumps(str(key))}: {dumps_json(value, indent, _level + 1)}"
            for key, value in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + end_pad + "}"

    if isinstance(obj, (list, tuple)):
        if all(_is_scalar(item) for item in obj):
            return "[" + ", ".join(_dump_scalar(item) for item in obj) + "]"
        items = [f"{pad}{dumps_json(item, indent, _level + 1)}" for item in obj]
        return "[\n" + ",\n".join(items) + "\n" + end_pad + "]"

    raise TypeError(f"Cannot serialize object of type {type(obj)}.")


def write_json(obj: object, filename: str | Path) -> None:
    """Stores ``obj`` in ``filename`` using ``dumps_json``."""
    with open(filename, "w") as file:
        file.write(dumps_json(obj) + "\n")
    return


def read_json(filename: str | Path) -> object:
    with open(filename, "r") as file:
        return json.load(file)


def write_csv(filename: str | Path, columns: Sequence[str], data: np.ndarray) -> None:
    """Stores a 2D array as CSV with a header row and 17 significant digits.

    Parameters
    ----------
    filename
        Name of the file in which to store the data.
    columns
        Column names, one per column of ``data``.
    data
        Array of shape ``(rows, len(columns))``.
    """
    data = np.atleast_2d(np.asarray(data, dtype=float))
    if data.shape[1] != len(columns):
        raise ValueError(
            f"'data' has {data.shape[1]} columns, but {len(columns)} names were given."
        )
    np.savetxt(
        filename,
        data,
        fmt=f"%{FLOAT_FORMAT}",
        delimiter=",",
        header=",".join(columns),
        comments="",
    )
    return


def read_csv(filename: str | Path) -> tuple[list[str], np.ndarray]:
    """Reads a file written by ``write_csv``.

    Returns
    -------
    columns
        Column names from the header row.
    data
        Array of shape ``(rows, len(columns))``.
    """
    with open(filename, "r") as file:
        columns = file.readline().strip().split(",")
    data = np.loadtxt(filename, delimiter=",", skiprows=1, ndmin=2)
    return columns, data
