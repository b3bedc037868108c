"""Random multimode beams: equal-amplitude superpositions of HG modes with random phases."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError
from .modes import Grid2D, ModeIndex, SampledField, mode_indices, mode_profiles_1d


def trial_seed(master_seed: int, trial: int) -> int:
    """64-bit seed for trial ``trial``, the ``trial``-th child of ``master_seed``.

    Computed directly from the spawn key, so a trial's seed does not depend on
    how many other trials exist or in which order they run.
    """
    ss = np.random.SeedSequence(int(master_seed), spawn_key=(int(trial),))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def make_rng(seed: int) -> np.random.Generator:
    """Philox counter-based generator keyed by ``seed``."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(int(seed))))


@dataclass(frozen=True, eq=False)
class BeamRealization:
    n_highest: int
    modes: tuple[ModeIndex, ...]
    coefficients: np.ndarray
    seed: int

    @property
    def phases(self) -> np.ndarray:
        return np.mod(np.angle(self.coefficients), 2.0 * math.pi)

    def coefficient_matrix(self) -> np.ndarray:
        """Coefficients as an N x N array C[n, m], zero where n + m >= N."""
        c = np.zeros((self.n_highest, self.n_highest), dtype=complex)
        for (n, m), value in zip(self.modes, self.coefficients):
            c[n, m] = value
        return c

    def rows(self) -> list[dict]:
        """Audit table: one (n, m, amplitude, phase) record per mode."""
        return [
            {"n": int(n), "m": int(m), "amplitude": float(abs(c)), "phase": float(p)}
            for (n, m), c, p in zip(self.modes, self.coefficients, self.phases)
        ]


def synthesize_beam(n_highest: int, seed: int) -> BeamRealization:
    """Unit amplitudes and i.i.d. uniform phases on [0, 2pi) for every n + m < n_highest."""
    if n_highest < 1:
        raise InvalidParameterError(f"highest mode order must be >= 1, got {n_highest}")
    modes = tuple(mode_indices(n_highest))
    phases = make_rng(seed).uniform(0.0, 2.0 * math.pi, size=len(modes))
    return BeamRealization(n_highest, modes, np.exp(1j * phases), int(seed))


def evaluate_beam(beam: BeamRealization, grid: Grid2D, z: float) -> SampledField:
    # A(x_i, y_j) = sum_nm C[n, m] u_n(x_i) u_m(y_j) = (U^T C^T U)[j, i]
    u = mode_profiles_1d(beam.n_highest - 1, grid.coords, z)
    values = u.T @ beam.coefficient_matrix().T @ u
    return SampledField(grid, z, values)


def intensity_image(field: SampledField) -> np.ndarray:
    return np.abs(field.values) ** 2
