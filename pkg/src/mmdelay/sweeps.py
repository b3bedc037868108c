"""Monte Carlo sweeps over delay, mode order, waist and wavelength.

Each trial owns one beam realization, seeded by the trial's child seed of the
master seed, and that realization is held fixed over the whole delay grid.
Trials are independent, so they may run on a thread pool; results are
assembled in trial order.
"""
from __future__ import annotations

import configparser
import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .beams import evaluate_beam, intensity_image, synthesize_beam, trial_seed
from .errors import ConfigError, InvalidParameterError
from .interference import visibility
from .modes import Grid2D, check_grid, default_grid
from .units import (
    DelaySpec,
    DelayUnit,
    FiberProfile,
    FiberSpec,
    OpticalConfig,
    convert_delay,
    fiber_mode_order,
)

REUSE_NOTE = "one beam realization per trial, reused across every delay point; z1 = 0"


class SweepKind(enum.Enum):
    DELAY_RAYLEIGH = "delay-rayleigh"
    DELAY_TIME = "delay-time"
    MODE_ORDER = "mode-order"
    WAVELENGTH_N = "wavelength"
    BEAM_IMAGE = "beam-image"


@dataclass(frozen=True)
class SweepConfig:
    kind: SweepKind
    n_highest: tuple[int, ...] = (10,)
    waists: tuple[float, ...] = (1.85e-3,)
    wavelength: float = 1550e-9
    fibers: tuple[FiberSpec, ...] = ()
    delays: tuple[DelaySpec, ...] = ()
    wavelengths: tuple[float, ...] = ()
    trials: int = 20
    master_seed: int = 0
    grid_samples: Optional[int] = None
    grid_half_extent: Optional[float] = None
    image_seeds: tuple[int, ...] = (1, 2, 3)
    image_z: float = 0.0
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if not self.n_highest or min(self.n_highest) < 1:
            raise ConfigError(f"highest mode orders must be >= 1, got {self.n_highest}")
        if self.kind in (SweepKind.DELAY_RAYLEIGH, SweepKind.DELAY_TIME, SweepKind.MODE_ORDER):
            if not self.delays:
                raise ConfigError("delay sweeps need a non-empty delay grid")
        if self.kind is SweepKind.DELAY_TIME:
            if any(d.unit is DelayUnit.RAYLEIGH_UNITS for d in self.delays):
                raise ConfigError("delay-time sweeps take delays in seconds, path or mirror shift")
            if not self.waists:
                raise ConfigError("delay-time sweeps need at least one waist")
            for w in self.waists:
                OpticalConfig(self.wavelength, w)
        if self.kind is SweepKind.MODE_ORDER and any(d.unit is not DelayUnit.RAYLEIGH_UNITS for d in self.delays):
            raise ConfigError("mode-order sweeps take delays in Rayleigh units")
        if self.kind is SweepKind.WAVELENGTH_N:
            if not self.fibers or not self.wavelengths:
                raise ConfigError("wavelength sweeps need fibers and wavelengths")
            if min(self.wavelengths) <= 0:
                raise ConfigError("wavelengths must be positive")
        if self.grid_samples is not None and (self.grid_samples < 2 or self.grid_samples % 2):
            raise ConfigError(f"grid samples must be even and >= 2, got {self.grid_samples}")

    def grid_for(self, n_highest: int, z_max: float) -> Grid2D:
        samples = self.grid_samples or 512
        if self.grid_half_extent is not None:
            return Grid2D(self.grid_half_extent, samples)
        return default_grid(n_highest, z_max, samples)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["kind"] = self.kind.value
        d["fibers"] = [
            {"name": f.name, "numerical_aperture": f.numerical_aperture,
             "core_radius": f.core_radius, "profile": f.profile.value}
            for f in self.fibers
        ]
        d["delays"] = [{"value": s.value, "unit": s.unit.value} for s in self.delays]
        return {k: list(v) if isinstance(v, tuple) else v for k, v in d.items()}


@dataclass
class CurveResult:
    """One averaged curve.

    ``per_trial[i][t]`` is trial ``t`` at ``abscissa[i]``. For wavelength
    sweeps the ordinate is the highest mode order and there is one "trial".
    """

    label: str
    x_quantity: str
    y_quantity: str
    abscissa: list
    mean: list
    stderr: list
    per_trial: list
    seeds: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    @property
    def mean_visibility(self) -> list:
        return self.mean

    @classmethod
    def from_trials(cls, label, x_quantity, y_quantity, abscissa, per_trial, seeds=(), metadata=None):
        arr = np.asarray(per_trial, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != len(abscissa):
            raise ValueError("per_trial must have one row per abscissa point")
        mean, stderr = summarize(arr)
        return cls(label, x_quantity, y_quantity, [float(a) for a in abscissa],
                   mean.tolist(), stderr.tolist(), arr.tolist(), [int(s) for s in seeds],
                   dict(metadata or {}))


def summarize(per_trial: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Row-wise mean and standard error (sample std / sqrt(trials); 0 for one trial)."""
    trials = per_trial.shape[1]
    mean = per_trial.mean(axis=1)
    if trials < 2:
        return mean, np.zeros_like(mean)
    return mean, per_trial.std(axis=1, ddof=1) / math.sqrt(trials)


def _map_trials(fn, trials: int, workers: int) -> list:
    if workers <= 1:
        return [fn(t) for t in range(trials)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(trials)))


def _metadata(config: SweepConfig, **extra) -> dict:
    meta = {"config": config.to_dict(), "version": __version__, "assumption": REUSE_NOTE}
    meta.update(extra)
    return meta


def delay_curve(n_highest: int, delays_zr: Sequence[float], trials: int, master_seed: int,
                grid: Optional[Grid2D] = None, workers: int = 1) -> tuple[np.ndarray, list[int], Grid2D]:
    """Visibility matrix (delays x trials) for one mode order, z1 = 0 and z2 = each delay."""
    z_max = max(delays_zr)
    grid = grid or default_grid(n_highest, z_max)
    check_grid(grid, n_highest, z_max)
    seeds = [trial_seed(master_seed, t) for t in range(trials)]

    def one_trial(t):
        beam = synthesize_beam(n_highest, seeds[t])
        alpha = evaluate_beam(beam, grid, 0.0)
        return [visibility(alpha, evaluate_beam(beam, grid, dz)).visibility for dz in delays_zr]

    cols = _map_trials(one_trial, trials, workers)
    return np.array(cols, dtype=float).T, seeds, grid


def run_delay_sweep(config: SweepConfig, n_highest: Optional[int] = None,
                    waist: Optional[float] = None) -> CurveResult:
    """Mean visibility against delay for one (N, waist) pair of ``config``."""
    n = n_highest if n_highest is not None else config.n_highest[0]
    if config.kind is SweepKind.DELAY_TIME:
        w0 = waist if waist is not None else config.waists[0]
        optics = OpticalConfig(config.wavelength, w0)
        records = [convert_delay(d, optics) for d in config.delays]
        z = [r.rayleigh_units for r in records]
        abscissa = [r.seconds / 1e-9 for r in records]
        x_quantity = "delay_ns"
        label = f"N={n}, w0={w0 * 1e3:g}mm"
        extra = {"waist": w0, "wavelength": config.wavelength,
                 "rayleigh_length": optics.rayleigh_length, "delay_rayleigh_units": z}
    else:
        z = []
        for d in config.delays:
            if d.unit is not DelayUnit.RAYLEIGH_UNITS:
                raise ConfigError("delay-rayleigh sweeps take delays in Rayleigh units")
            z.append(d.value)
        abscissa = list(z)
        x_quantity = "delay_zR"
        label = f"N={n}"
        extra = {}
    grid = config.grid_for(n, max(z))
    per_trial, seeds, grid = delay_curve(n, z, config.trials, config.master_seed, grid, config.workers)
    meta = _metadata(config, n_highest=n, grid=grid.summary(), **extra)
    return CurveResult.from_trials(label, x_quantity, "visibility", abscissa, per_trial, seeds, meta)


def run_mode_order_sweep(config: SweepConfig) -> list[CurveResult]:
    """One curve per fixed delay (Rayleigh units), abscissa the highest mode order N."""
    z = [d.value for d in config.delays]
    rows = {}
    seeds = [trial_seed(config.master_seed, t) for t in range(config.trials)]
    grids = {}
    for n in config.n_highest:
        grid = config.grid_for(n, max(z))
        per_trial, _, grid = delay_curve(n, z, config.trials, config.master_seed, grid, config.workers)
        rows[n] = per_trial
        grids[n] = grid.summary()
    curves = []
    for i, dz in enumerate(z):
        per_trial = [rows[n][i] for n in config.n_highest]
        meta = _metadata(config, delay_zR=dz, grids={str(k): v for k, v in grids.items()})
        curves.append(CurveResult.from_trials(f"dz={dz:g}zR", "n_highest", "visibility",
                                              list(config.n_highest), per_trial, seeds, meta))
    return curves


def run_wavelength_sweep(fibers: Sequence[FiberSpec], wavelengths: Sequence[float],
                         config: Optional[SweepConfig] = None) -> list[CurveResult]:
    """Highest mode order N against wavelength (nm), one stepwise curve per fiber."""
    if not wavelengths or min(wavelengths) <= 0:
        raise InvalidParameterError("wavelengths must be positive")
    nm = [w * 1e9 for w in wavelengths]
    curves = []
    for fiber in fibers:
        orders = [[float(fiber_mode_order(fiber, w))] for w in wavelengths]
        meta = {"version": __version__, "fiber": {"name": fiber.name,
                "numerical_aperture": fiber.numerical_aperture,
                "core_radius": fiber.core_radius, "profile": fiber.profile.value}}
        if config is not None:
            meta["config"] = config.to_dict()
        curves.append(CurveResult.from_trials(fiber.label, "wavelength_nm", "n_highest", nm, orders, (), meta))
    return curves


def beam_images(config: SweepConfig) -> list[np.ndarray]:
    """Peak-normalized intensity images, one per seed in ``config.image_seeds``."""
    n = config.n_highest[0]
    grid = config.grid_for(n, config.image_z)
    check_grid(grid, n, config.image_z)
    images = []
    for seed in config.image_seeds:
        img = intensity_image(evaluate_beam(synthesize_beam(n, seed), grid, config.image_z))
        images.append(img / img.max())
    return images


def render_beam_images(config: SweepConfig, out_dir) -> list:
    """Write one 8-bit grayscale PNG per seed; returns the paths."""
    from pathlib import Path

    from PIL import Image

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for seed, img in zip(config.image_seeds, beam_images(config)):
        # row 0 of the array is the most negative y; put +y at the top
        pixels = np.round(np.flipud(img) * 255.0).astype(np.uint8)
        path = out / f"beam_N{config.n_highest[0]}_seed{seed}.png"
        Image.fromarray(pixels, mode="L").save(path)
        paths.append(path)
    return paths


def run_sweep(config: SweepConfig) -> list[CurveResult]:
    """Dispatch on ``config.kind``; delay sweeps yield one curve per (N, waist)."""
    if config.kind is SweepKind.DELAY_RAYLEIGH:
        return [run_delay_sweep(config, n) for n in config.n_highest]
    if config.kind is SweepKind.DELAY_TIME:
        return [run_delay_sweep(config, n, w) for n in config.n_highest for w in config.waists]
    if config.kind is SweepKind.MODE_ORDER:
        return run_mode_order_sweep(config)
    if config.kind is SweepKind.WAVELENGTH_N:
        return run_wavelength_sweep(config.fibers, config.wavelengths, config)
    raise ConfigError(f"{config.kind.value} does not produce curves")


# -- configuration files ---------------------------------------------------

def _floats(text: str) -> tuple[float, ...]:
    return tuple(float(v) for v in text.replace(";", ",").split(",") if v.strip())


def _ints(text: str) -> tuple[int, ...]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return tuple(out)


def _range(section) -> tuple[float, ...]:
    if "values" in section:
        return _floats(section["values"])
    start, stop = float(section["start"]), float(section["stop"])
    if "step" in section:
        step = float(section["step"])
        count = int(round((stop - start) / step)) + 1
        return tuple(start + k * step for k in range(count))
    num = int(section["num"])
    return tuple(np.linspace(start, stop, num).tolist())


def parse_config(text: str) -> SweepConfig:
    """Build a :class:`SweepConfig` from INI text.

    Sections: ``[sweep]`` (kind, trials, master_seed, workers), ``[beam]``
    (n_highest, waists, wavelength), ``[delays]`` (unit plus values or
    start/stop/step), ``[grid]``, ``[wavelengths]``, ``[image]`` and one
    ``[fiber:<name>]`` per fiber.
    """
    cp = configparser.ConfigParser(inline_comment_prefixes=("#",))
    try:
        cp.read_string(text)
        sweep = cp["sweep"]
        kind = SweepKind(sweep.get("kind", "delay-rayleigh").strip())
        kw: dict = {"kind": kind}
        if "trials" in sweep:
            kw["trials"] = sweep.getint("trials")
        if "master_seed" in sweep:
            kw["master_seed"] = sweep.getint("master_seed")
        if "workers" in sweep:
            kw["workers"] = sweep.getint("workers")
        if cp.has_section("beam"):
            beam = cp["beam"]
            if "n_highest" in beam:
                kw["n_highest"] = _ints(beam["n_highest"])
            if "waists" in beam:
                kw["waists"] = _floats(beam["waists"])
            if "wavelength" in beam:
                kw["wavelength"] = float(beam["wavelength"])
        if cp.has_section("delays"):
            unit = DelayUnit.parse(cp["delays"].get("unit", "rayleigh"))
            kw["delays"] = tuple(DelaySpec(v, unit) for v in _range(cp["delays"]))
        if cp.has_section("grid"):
            g = cp["grid"]
            if "samples" in g:
                kw["grid_samples"] = g.getint("samples")
            if "half_extent" in g:
                kw["grid_half_extent"] = g.getfloat("half_extent")
        if cp.has_section("wavelengths"):
            kw["wavelengths"] = _range(cp["wavelengths"])
        if cp.has_section("image"):
            img = cp["image"]
            if "seeds" in img:
                kw["image_seeds"] = _ints(img["seeds"])
            if "z" in img:
                kw["image_z"] = img.getfloat("z")
        fibers = []
        for name in cp.sections():
            if name.startswith("fiber:"):
                f = cp[name]
                fibers.append(FiberSpec(f.getfloat("numerical_aperture"), f.getfloat("core_radius"),
                                        FiberProfile.parse(f.get("profile", "parabolic")),
                                        name.split(":", 1)[1].strip()))
        if fibers:
            kw["fibers"] = tuple(fibers)
        return SweepConfig(**kw)
    except ConfigError:
        raise
    except (configparser.Error, KeyError, ValueError, TypeError) as exc:
        raise ConfigError(f"bad sweep configuration: {exc}") from exc


def load_config(path) -> SweepConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


def with_overrides(config: SweepConfig, **overrides) -> SweepConfig:
    """Copy of ``config`` with the non-None ``overrides`` applied."""
    return replace(config, **{k: v for k, v in overrides.items() if v is not None})
