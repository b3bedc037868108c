"""Fast invariant checks run by ``mmdelay validate``."""
from __future__ import annotations

import math
from typing import Callable, NamedTuple

import numpy as np

from .beams import evaluate_beam, synthesize_beam
from .interference import angular_spectrum_propagate, visibility, visibility_mode_space
from .modes import default_grid, evaluate_mode, gram_matrix, ModeIndex
from .units import DelaySpec, DelayUnit, FiberProfile, FiberSpec, OpticalConfig, convert_delay, fiber_mode_order


class Check(NamedTuple):
    name: str
    passed: bool
    detail: str


def _mode_chain():
    n = fiber_mode_order(FiberSpec(0.2, 25e-6, FiberProfile.PARABOLIC), 1550e-9)
    return n == 10, f"N={n}"


def _jin_fiber():
    n = fiber_mode_order(FiberSpec(0.22, 52.5e-6, FiberProfile.STEP_INDEX), 850e-9)
    return n == 60, f"N={n} at 850 nm"


def _mirror_step():
    rec = convert_delay(DelaySpec(0.0375, DelayUnit.MIRROR_SHIFT_METERS), OpticalConfig(1550e-9, 1.85e-3))
    ns = rec.seconds * 1e9
    return abs(ns - 0.25) / 0.25 < 5e-3, f"{ns:.5f} ns"


def _orthonormality():
    worst = 0.0
    for z in (0.0, 0.5, 2.0):
        g = gram_matrix(10, default_grid(10, z), z)
        worst = max(worst, float(np.abs(g - np.eye(len(g))).max()))
    return worst < 1e-6, f"max |G - I| = {worst:.2e}"


def _single_mode_curve():
    beam = synthesize_beam(1, 0)
    grid = default_grid(1, 2.0)
    alpha = evaluate_beam(beam, grid, 0.0)
    worst = 0.0
    for dz in np.linspace(0.0, 2.0, 9):
        v = visibility(alpha, evaluate_beam(beam, grid, dz)).visibility
        worst = max(worst, abs(v - 1.0 / math.sqrt(1.0 + dz * dz / 4.0)))
    return worst < 1e-4, f"max deviation {worst:.2e}"


def _three_way():
    worst = 0.0
    for seed in range(3):
        beam = synthesize_beam(6, seed)
        for dz in (0.1, 0.5, 1.0):
            grid = default_grid(6, dz)
            alpha = evaluate_beam(beam, grid, 0.0)
            v_grid = visibility(alpha, evaluate_beam(beam, grid, dz)).visibility
            v_modes = visibility_mode_space(beam, 0.0, dz).visibility
            v_fft = visibility(alpha, angular_spectrum_propagate(alpha, dz)).visibility
            worst = max(worst, abs(v_grid - v_modes), abs(v_grid - v_fft), abs(v_modes - v_fft))
    return worst < 1e-3, f"max disagreement {worst:.2e}"


def _gouy_phase():
    grid = default_grid(1, 3.0, samples=64)
    worst = 0.0
    for z in (0.0, 0.5, 3.0):
        f = evaluate_mode(ModeIndex(0, 0), grid, z)
        c = grid.samples // 2
        # the four cells around the axis share the on-axis phase up to the curvature term
        x = grid.coords[c]
        phase = np.angle(f.values[c, c]) + 2 * x * x * z / (1 + z * z)
        worst = max(worst, abs(phase - math.atan(z)))
    return worst < 1e-9, f"max Gouy error {worst:.2e}"


CHECKS: dict[str, Callable[[], tuple[bool, str]]] = {
    "mode-count chain (N=10 at 1550 nm)": _mode_chain,
    "step-index fiber N=60 at 850 nm": _jin_fiber,
    "mirror step 3.75 cm -> 0.25 ns": _mirror_step,
    "Gram matrix orthonormal": _orthonormality,
    "Gouy phase of fundamental": _gouy_phase,
    "single-mode closed form": _single_mode_curve,
    "three-way oracle agreement": _three_way,
}


def run_checks() -> list[Check]:
    results = []
    for name, fn in CHECKS.items():
        ok, detail = fn()
        results.append(Check(name, bool(ok), detail))
    return results
