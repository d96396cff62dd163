import json

import numpy as np
import pytest

from figure_eight.util import dumps_json, format_float, read_csv, write_csv


def test_format_float():
    assert format_float(0.1) == "0.10000000000000001"
    assert format_float(2) == "2.0"
    assert format_float(np.float32(0.5)) == "0.5"
    assert format_float(np.nan) == "NaN"
    assert format_float(-np.inf) == "-Infinity"
    assert float(format_float(np.pi)) == np.pi
    return


def test_dumps_json():
    obj = {
        "b": np.float64(1 / 3),
        "a": [1, 2.5, True, None],
        "nested": {"array": np.eye(2), "name": "ℓ₀"},
        "empty": {},
    }
    text = dumps_json(obj)
    assert text == dumps_json(obj)
    assert text.index('"b"') < text.index('"a"')
    assert '"a": [1, 2.5, true, null]' in text

    data = json.loads(text)
    assert data["b"] == 1 / 3
    assert data["nested"]["array"] == [[1.0, 0.0], [0.0, 1.0]]
    assert data["nested"]["name"] == "ℓ₀"

    assert np.isnan(json.loads(dumps_json([np.nan]))[0])
    with pytest.raises(TypeError):
        dumps_json({"set": {1, 2}})
    return


def test_csv(tmp_path):
    data = np.array([[0.0, np.pi], [1e-300, -2.5]])
    write_csv(tmp_path / "data.csv", ["t", "x"], data)
    columns, loaded = read_csv(tmp_path / "data.csv")
    assert columns == ["t", "x"]
    assert np.array_equal(loaded, data)

    write_csv(tmp_path / "row.csv", ["t", "x"], [1.0, 2.0])
    _, loaded = read_csv(tmp_path / "row.csv")
    assert loaded.shape == (1, 2)

    with pytest.raises(ValueError):
        write_csv(tmp_path / "bad.csv", ["t"], data)
    return
