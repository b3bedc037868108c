import csv
import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from mmdelay.cli import main
from mmdelay.emit import emit, nice_ticks, parse_formats, read_json, write_csv, write_svg
from mmdelay.sweeps import CurveResult

SVG_NS = "{http://www.w3.org/2000/svg}"


@pytest.fixture
def curves():
    rng = np.random.default_rng(0)
    a = CurveResult.from_trials("N=3", "delay_zR", "visibility", [0.0, 0.5, 1.0],
                                rng.uniform(0.3, 1.0, size=(3, 4)), [11, 12, 13, 14], {"note": "a"})
    b = CurveResult.from_trials("N=6", "delay_zR", "visibility", [0.0, 0.5, 1.0],
                                rng.uniform(0.3, 1.0, size=(3, 4)) / 3, [11, 12, 13, 14])
    return [a, b]


def test_csv_layout(curves, tmp_path):
    path = write_csv(curves[0], tmp_path / "c.csv")
    raw = path.read_bytes()
    assert b"\r" not in raw
    rows = list(csv.reader(raw.decode("utf-8").splitlines()))
    assert rows[0] == ["delay_zR", "mean", "stderr", "trial_0", "trial_1", "trial_2", "trial_3"]
    assert len(rows) == 1 + 3
    assert [float(v) for v in rows[2][3:]] == curves[0].per_trial[1]


def test_json_round_trip_bit_exact(curves, tmp_path):
    emit(curves, {"json"}, tmp_path, "run")
    back = read_json(tmp_path / "run.json")
    assert back == curves
    doc = json.loads((tmp_path / "run.json").read_text())
    assert {"label", "abscissa", "mean", "stderr", "per_trial", "seeds", "metadata"} <= doc["curves"][0].keys()


def test_svg_is_standalone_with_one_polyline_per_curve(curves, tmp_path):
    path = write_svg(curves, tmp_path / "p.svg")
    root = ET.parse(path).getroot()
    assert root.tag == SVG_NS + "svg" and root.get("version") == "1.1"
    assert len(root.findall(SVG_NS + "polyline")) == 2
    labels = [t.text for t in root.findall(SVG_NS + "text")]
    assert "delay, z_R" in labels and "visibility" in labels


def test_emit_file_set(curves, tmp_path):
    paths = emit(curves, {"csv", "json", "svg"}, tmp_path / "deep" / "dir", "s")
    assert sorted(p.name for p in paths) == ["s.json", "s.svg", "s_N_3.csv", "s_N_6.csv"]
    one = emit(curves[:1], {"csv"}, tmp_path, "single")
    assert one[0].name == "single.csv"


def test_unwritable_output(curves, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    with pytest.raises(OSError):
        emit(curves, {"csv"}, blocker / "sub", "s")


def test_formats_and_ticks():
    assert parse_formats("csv, SVG") == {"csv", "svg"}
    with pytest.raises(ValueError):
        parse_formats("csv,xlsx")
    assert nice_ticks(0, 2) == [0.0, 0.5, 1.0, 1.5, 2.0]
    assert nice_ticks(0, 1) == [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]


def _write(tmp_path, text):
    p = tmp_path / "cfg.ini"
    p.write_text(text)
    return str(p)


SMALL = """
[sweep]
kind = delay-rayleigh
trials = 3
master_seed = 77
[beam]
n_highest = 4
[delays]
unit = rayleigh
values = 0, 0.5, 1.0
[grid]
samples = 128
"""


def test_cli_delay_sweep_reproducible(tmp_path, capsys):
    cfg = _write(tmp_path, SMALL)
    assert main(["delay-sweep", "--config", cfg, "--out", str(tmp_path / "a")]) == 0
    assert main(["delay-sweep", "--config", cfg, "--out", str(tmp_path / "b"), "--workers", "3"]) == 0
    a = (tmp_path / "a" / "delay-rayleigh.csv").read_bytes()
    assert a == (tmp_path / "b" / "delay-rayleigh.csv").read_bytes()
    assert (tmp_path / "a" / "delay-rayleigh.svg").exists()
    doc = json.loads((tmp_path / "a" / "delay-rayleigh.json").read_text())
    assert doc["curves"][0]["metadata"]["config"]["master_seed"] == 77


def test_cli_overrides(tmp_path):
    cfg = _write(tmp_path, SMALL)
    assert main(["delay-sweep", "--config", cfg, "--out", str(tmp_path), "--trials", "2",
                 "--seed", "5", "--grid", "64", "--formats", "json"]) == 0
    (curve,) = read_json(tmp_path / "delay-rayleigh.json")
    assert len(curve.per_trial[0]) == 2
    assert curve.metadata["config"]["master_seed"] == 5
    assert curve.metadata["grid"]["samples"] == 64


def test_cli_exit_codes(tmp_path):
    assert main(["delay-sweep", "--config", _write(tmp_path, "[sweep]\nkind=bogus\n")]) == 2
    assert main(["mode-sweep", "--config", _write(tmp_path, SMALL)]) == 2
    assert main(["delay-sweep", "--config", str(tmp_path / "missing.ini")]) == 4
    tight = SMALL.replace("samples = 128", "samples = 128\nhalf_extent = 2")
    assert main(["delay-sweep", "--config", _write(tmp_path, tight), "--out", str(tmp_path)]) == 3
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    assert main(["delay-sweep", "--config", _write(tmp_path, SMALL), "--out", str(blocker / "x")]) == 4
    assert main(["delay-sweep", "--config", _write(tmp_path, SMALL), "--formats", "pdf"]) == 2


def test_cli_wavelength_and_images(tmp_path, capsys):
    assert main(["wavelength-sweep", "--out", str(tmp_path)]) == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert "wavelength.json" in names and "wavelength.svg" in names
    assert main(["beam-image", "--out", str(tmp_path / "img"), "--grid", "64"]) == 0
    assert len(list((tmp_path / "img").glob("*.png"))) == 3


def test_cli_validate(capsys):
    assert main(["validate"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and out.count("PASS") >= 7
