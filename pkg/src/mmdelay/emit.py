"""Write sweep results as CSV, JSON and SVG."""
from __future__ import annotations

import csv
import json
import math
import re
from dataclasses import asdict
from pathlib import Path
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

from .sweeps import CurveResult

FORMATS = ("csv", "json", "svg")

AXIS_LABELS = {
    "delay_zR": "delay, z_R",
    "delay_ns": "delay, ns",
    "n_highest": "highest mode order N",
    "wavelength_nm": "wavelength, nm",
    "visibility": "visibility",
}

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf", "#7f7f7f")


def slug(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9.]+", "_", text).strip("_")


def parse_formats(text: str) -> set[str]:
    formats = {f.strip().lower() for f in text.split(",") if f.strip()}
    unknown = formats - set(FORMATS)
    if unknown:
        raise ValueError(f"unknown output formats: {sorted(unknown)}")
    return formats


def write_csv(curve: CurveResult, path) -> Path:
    path = Path(path)
    trials = len(curve.per_trial[0]) if curve.per_trial else 0
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([curve.x_quantity, "mean", "stderr"] + [f"trial_{t}" for t in range(trials)])
        for x, m, s, row in zip(curve.abscissa, curve.mean, curve.stderr, curve.per_trial):
            writer.writerow([repr(float(x)), repr(float(m)), repr(float(s))] + [repr(float(v)) for v in row])
    return path


def write_json(curves: Sequence[CurveResult], path, extra: dict | None = None) -> Path:
    path = Path(path)
    doc = {"curves": [asdict(c) for c in curves]}
    doc.update(extra or {})
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")
    return path


def read_json(path) -> list[CurveResult]:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    return [CurveResult(**c) for c in doc["curves"]]


def nice_ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / max(target - 1, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    step = next(k * mag for k in (1, 2, 2.5, 5, 10) if k * mag >= raw)
    first = math.floor(lo / step + 1e-9) * step
    ticks = []
    t = first
    while t <= hi + 1e-9 * step:
        if t >= lo - 1e-9 * step:
            ticks.append(round(t, 12))
        t += step
    return ticks


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def write_svg(curves: Sequence[CurveResult], path, title: str = "") -> Path:
    """Standalone SVG 1.1 line chart, one polyline per curve."""
    path = Path(path)
    width, height = 640, 420
    left, right, top, bottom = 70, 170, 30, 55
    pw, ph = width - left - right, height - top - bottom

    xs = [x for c in curves for x in c.abscissa]
    ys = [y for c in curves for y in c.mean]
    xlo, xhi = min(xs), max(xs)
    if curves and curves[0].y_quantity == "visibility":
        ylo, yhi = 0.0, 1.0
    else:
        ylo, yhi = min(0.0, min(ys)), max(ys)
    xticks, yticks = nice_ticks(xlo, xhi), nice_ticks(ylo, yhi)
    xlo, xhi = min(xlo, xticks[0]), max(xhi, xticks[-1])
    ylo, yhi = min(ylo, yticks[0]), max(yhi, yticks[-1])
    if xhi == xlo:
        xhi = xlo + 1.0
    if yhi == ylo:
        yhi = ylo + 1.0

    def px(x):
        return left + (x - xlo) / (xhi - xlo) * pw

    def py(y):
        return top + ph - (y - ylo) / (yhi - ylo) * ph

    xq = curves[0].x_quantity if curves else ""
    yq = curves[0].y_quantity if curves else ""
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f"<title>{escape(title)}</title>",
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for t in xticks:
        x = px(t)
        out.append(f'<line x1="{_fmt(x)}" y1="{top + ph}" x2="{_fmt(x)}" y2="{top + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{_fmt(x)}" y="{top + ph + 18}" text-anchor="middle">{_fmt(t)}</text>')
    for t in yticks:
        y = py(t)
        out.append(f'<line x1="{left - 5}" y1="{_fmt(y)}" x2="{left}" y2="{_fmt(y)}" stroke="black"/>')
        out.append(f'<text x="{left - 8}" y="{_fmt(y + 4)}" text-anchor="end">{_fmt(t)}</text>')
    out.append(f'<text x="{left + pw / 2}" y="{height - 12}" text-anchor="middle">'
               f"{escape(AXIS_LABELS.get(xq, xq))}</text>")
    out.append(f'<text x="18" y="{top + ph / 2}" text-anchor="middle" '
               f'transform="rotate(-90 18 {top + ph / 2})">{escape(AXIS_LABELS.get(yq, yq))}</text>')
    for i, c in enumerate(curves):
        color = _PALETTE[i % len(_PALETTE)]
        pts = " ".join(f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in zip(c.abscissa, c.mean))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>')
        ly = top + 14 + 18 * i
        out.append(f'<line x1="{left + pw + 10}" y1="{ly}" x2="{left + pw + 30}" y2="{ly}" '
                   f'stroke="{color}" stroke-width="1.5"/>')
        out.append(f'<text x="{left + pw + 35}" y="{ly + 4}">{escape(c.label)}</text>')
    out.append("</svg>")
    path.write_text("\n".join(out) + "\n", encoding="utf-8")
    return path


def emit(curves: Sequence[CurveResult], formats: Iterable[str], out_dir, stem: str) -> list[Path]:
    """Write ``curves`` under ``out_dir``; one CSV per curve, one JSON and SVG per run."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    formats = set(formats)
    paths = []
    if "csv" in formats:
        for c in curves:
            name = f"{stem}.csv" if len(curves) == 1 else f"{stem}_{slug(c.label)}.csv"
            paths.append(write_csv(c, out / name))
    if "json" in formats:
        paths.append(write_json(curves, out / f"{stem}.json"))
    if "svg" in formats:
        paths.append(write_svg(curves, out / f"{stem}.svg", title=stem))
    return paths
