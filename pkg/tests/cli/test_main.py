import json

import numpy as np
import pytest

from figure_eight.cli import build_parser, main
from figure_eight.cli.main import EXIT_INVALID, EXIT_PASS, load_input
from figure_eight.integrator import SIMO_PERIOD, Trajectory
from figure_eight.minimizer import DiscretePath
from figure_eight.orbits import Orbit
from figure_eight.setup import RunConfig
from figure_eight.util.io import read_csv, read_json, write_json


def test_build_parser():
    parser = build_parser()
    args = parser.parse_args(["minimize", "--segments", "64", "--ell0", "auto"])
    assert args.command == "minimize"
    assert args.segments == 64
    assert args.ell0 == "auto"

    args = parser.parse_args(["-vv", "bounds", "--ell0", "0.6"])
    assert args.verbose == 2
    assert args.ell0 == 0.6

    with pytest.raises(SystemExit):
        parser.parse_args(["shrink"])
    return


def test_length(euler_result, tmp_path, capsys):
    csv = tmp_path / "arc.csv"
    out = tmp_path / "length.json"
    assert main(["length", "--csv", str(csv), "--points", "8", "--out", str(out)]) == 0

    printed = json.loads(capsys.readouterr().out)
    assert printed["ell0"] == euler_result.ell0
    assert read_json(out) == printed
    _, data = read_csv(csv)
    assert len(data) == 9
    return


def test_bounds(ell0, capsys):
    assert main(["bounds", "--ell0", repr(ell0)]) == EXIT_PASS
    printed = json.loads(capsys.readouterr().out)
    assert np.isclose(printed["A2"], 2.0583255, rtol=0, atol=1e-6)
    assert np.isclose(printed["a"], 2.0359763, rtol=0, atol=1e-7)
    return


def test_config_file(ell0, tmp_path, capsys):
    config = RunConfig({"name": "test", "run": {"period": 1.0, "ell0": ell0}})
    config.to_yaml(tmp_path / "config.yaml")

    assert main(["--config", str(tmp_path / "config.yaml"), "bounds"]) == EXIT_PASS
    printed = json.loads(capsys.readouterr().out)
    assert printed["T"] == 1.0
    return


def test_invalid_input(tmp_path, capsys):
    assert main(["bounds", "--period", "0", "--ell0", "0.6"]) == EXIT_INVALID
    assert "period" in capsys.readouterr().err

    ics = tmp_path / "collision.json"
    write_json([0.5, 0, 0.5, 0, -1, 0, 0, 1, 0, -1, 0, 0], ics)
    assert main(["integrate", "--ics", str(ics)]) == EXIT_INVALID
    assert "collision" in capsys.readouterr().err

    assert main(["verify", "--in", str(tmp_path / "missing.json")]) == EXIT_INVALID
    (tmp_path / "arc.txt").write_text("1, 2")
    assert main(["export", "--in", str(tmp_path / "arc.txt"), "--out", "a.svg"]) == 2
    return


def test_integrate_and_verify(ell0, tmp_path, capsys):
    out = tmp_path / "trajectory.csv"
    args = ["integrate", "--samples", "1200", "--out", str(out)]
    assert main(args) == EXIT_PASS
    printed = json.loads(capsys.readouterr().out)
    assert printed["t_end"] == SIMO_PERIOD
    assert printed["periodicity_defect"] < 1e-5

    trajectory = load_input(out)
    assert isinstance(trajectory, Trajectory)
    assert len(trajectory) == 1201

    report = tmp_path / "report.json"
    args = ["verify", "--in", str(out), "--ell0", repr(ell0), "--report", str(report)]
    assert main(args) == EXIT_PASS
    assert "checks passed" in capsys.readouterr().out
    assert read_json(report)["passed"]
    return


def test_verify_orbit_files(built_orbit, minimized_arc, ell0, tmp_path):
    built_orbit.to_json(tmp_path / "orbit.json")
    minimized_arc.path.to_json(tmp_path / "arc.json")
    assert isinstance(load_input(tmp_path / "orbit.json"), Orbit)
    assert isinstance(load_input(tmp_path / "arc.json"), DiscretePath)

    for name in ("orbit.json", "arc.json"):
        assert main(["verify", "--in", str(tmp_path / name), "--ell0", repr(ell0)]) == 0

    # the CSV curve holds the orbit without loss
    csv = tmp_path / "eight.csv"
    orbit = str(tmp_path / "orbit.json")
    assert main(["export", "--in", orbit, "--out", str(csv)]) == EXIT_PASS
    assert isinstance(load_input(csv), Orbit)
    assert main(["verify", "--in", str(csv), "--ell0", repr(ell0)]) == EXIT_PASS
    return


def test_minimize_build_export(ell0, tmp_path, capsys):
    arc = tmp_path / "arc.json"
    args = ["minimize", "--segments", "64", "--levels", "2", "--ell0", repr(ell0)]
    assert main(args + ["--out", str(arc)]) == EXIT_PASS
    printed = json.loads(capsys.readouterr().out)
    assert printed["n"] == 64
    assert printed["converged"]
    assert len(printed["level_actions"]) == 2

    orbit = tmp_path / "orbit.json"
    args = ["build", "--in", str(arc), "--out", str(orbit), "--samples", "1200"]
    assert main(args) == EXIT_PASS
    assert Orbit.from_json(orbit).m == 1200

    svg = tmp_path / "eight.svg"
    assert main(["export", "--in", str(orbit), "--out", str(svg)]) == EXIT_PASS
    assert svg.exists()
    return
