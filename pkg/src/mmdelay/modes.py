"""Hermite-Gaussian modes in normalized units (x, y in waists, z in Rayleigh lengths).

A mode factorizes into two 1D profiles,

    A_nm(x, y, z) = u_n(x, z) * u_m(y, z),

    u_n(x, z) = 2**(1/4) / sqrt(w) * psi_n(sqrt(2) x / w)
                * exp(-i x**2 z / w**2) * exp(i (n + 1/2) arctan z),

with w = sqrt(1 + z**2) and psi_n the orthonormal Hermite functions. The
Gaussian and curvature factors combine into exp(-x**2 / (1 - i z)), which is
regular at z = 0. psi_n is generated by its normalized three-term recurrence,
so no factorial or power of two is ever formed and orders well beyond 60 stay
finite.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import GridTooSmallError, InvalidParameterError

DEFAULT_SAMPLES = 512


class ModeIndex(NamedTuple):
    n: int
    m: int

    @property
    def order(self) -> int:
        return self.n + self.m


def mode_indices(n_highest: int) -> list[ModeIndex]:
    """All (n, m) with n + m < n_highest, ordered by n then m."""
    return [ModeIndex(n, m) for n in range(n_highest) for m in range(n_highest - n)]


@dataclass(frozen=True)
class Grid2D:
    """Square cell-centered grid: x_i = -L + (i + 1/2) * 2L/G."""

    half_extent: float
    samples: int = DEFAULT_SAMPLES

    def __post_init__(self):
        if not self.half_extent > 0.0:
            raise InvalidParameterError(f"half extent must be positive, got {self.half_extent}")
        if self.samples < 2 or self.samples % 2:
            raise InvalidParameterError(f"samples per axis must be even and >= 2, got {self.samples}")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_extent / self.samples

    @property
    def coords(self) -> np.ndarray:
        # built from one half so that coords[::-1] == -coords bit for bit
        half = (np.arange(self.samples // 2) + 0.5) * self.spacing
        return np.concatenate([-half[::-1], half])

    def summary(self) -> dict:
        return {"half_extent": self.half_extent, "samples": self.samples, "spacing": self.spacing}


def beam_radius(z: float) -> float:
    return math.sqrt(1.0 + z * z)


def default_grid(n_highest: int, z_max: float = 0.0, samples: int = DEFAULT_SAMPLES) -> Grid2D:
    """Grid wide enough for every mode with n + m < n_highest out to |z| = z_max.

    Half extent is (4 + sqrt(2N)) beam radii at the largest z.
    """
    scale = 4.0 + math.sqrt(2.0 * max(n_highest, 1))
    return Grid2D(scale * beam_radius(abs(z_max)), samples)


@dataclass(frozen=True, eq=False)
class SampledField:
    """Complex field on ``grid`` at normalized distance ``z``.

    ``values[j, i]`` is the sample at (x_i, y_j), so the flattened array is
    row-major with y as the slow index.
    """

    grid: Grid2D
    z: float
    values: np.ndarray

    def __post_init__(self):
        g = self.grid.samples
        if self.values.shape != (g, g):
            raise InvalidParameterError(f"field shape {self.values.shape} does not match grid {g}x{g}")
        if not np.all(np.isfinite(self.values)):
            raise InvalidParameterError("field contains non-finite samples")

    def power(self) -> float:
        # same products as the overlap sum, so identical arms give exactly V = 1
        return float(np.sum(self.values * self.values.conj()).real * self.grid.spacing**2)

    def save(self, path) -> None:
        """Debug dump; not a stable format."""
        np.savez(path, values=self.values, z=self.z,
                 half_extent=self.grid.half_extent, samples=self.grid.samples)

    @classmethod
    def load(cls, path) -> "SampledField":
        with np.load(path) as f:
            grid = Grid2D(float(f["half_extent"]), int(f["samples"]))
            return cls(grid, float(f["z"]), f["values"])


def hermite_sequence(n_max: int, x) -> np.ndarray:
    """Physicists' Hermite polynomials H_0(x) .. H_{n_max}(x).

    Returns an array of shape ``(n_max + 1,) + np.shape(x)``.
    """
    if n_max < 0:
        raise InvalidParameterError(f"n_max must be >= 0, got {n_max}")
    x = np.asarray(x, dtype=float)
    out = np.empty((n_max + 1,) + x.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 2.0 * x
    for k in range(1, n_max):
        out[k + 1] = 2.0 * x * out[k] - 2.0 * k * out[k - 1]
    return out


def hermite_functions(n_max: int, t, gaussian: bool = True) -> np.ndarray:
    """Orthonormal Hermite functions psi_k(t) = H_k(t) exp(-t^2/2) / sqrt(2^k k! sqrt(pi)).

    With ``gaussian=False`` the exp(-t^2/2) factor is left out, giving the
    normalized polynomials; useful when the weight is supplied by a
    quadrature rule.
    """
    t = np.asarray(t, dtype=float)
    out = np.empty((n_max + 1,) + t.shape)
    out[0] = math.pi**-0.25
    if gaussian:
        out[0] = out[0] * np.exp(-0.5 * t * t)
    if n_max >= 1:
        out[1] = math.sqrt(2.0) * t * out[0]
    for k in range(1, n_max):
        out[k + 1] = math.sqrt(2.0 / (k + 1)) * t * out[k] - math.sqrt(k / (k + 1)) * out[k - 1]
    return out


def mode_profiles_1d(n_max: int, x, z: float) -> np.ndarray:
    """1D profiles u_0 .. u_{n_max} at distance ``z``; shape ``(n_max + 1, len(x))``."""
    x = np.asarray(x, dtype=float)
    w2 = 1.0 + z * z
    w = math.sqrt(w2)
    psi = hermite_functions(n_max, math.sqrt(2.0) * x / w)
    chirp = np.exp(-1j * (z / w2) * x * x)
    gouy = np.exp(1j * (np.arange(n_max + 1) + 0.5) * math.atan(z))
    return (2.0**0.25 / math.sqrt(w)) * psi * chirp[None, :] * gouy[:, None]


def evaluate_mode(idx: ModeIndex, grid: Grid2D, z: float) -> SampledField:
    n, m = idx
    if n < 0 or m < 0:
        raise InvalidParameterError(f"mode indices must be non-negative, got {idx}")
    x = grid.coords
    ux = mode_profiles_1d(n, x, z)[n]
    uy = mode_profiles_1d(m, x, z)[m]
    return SampledField(grid, z, np.outer(uy, ux))


def literal_mode(idx: ModeIndex, x, y, z: float) -> np.ndarray:
    """Direct product form with raw Hermite polynomials and factorials.

    Kept as a test oracle; only valid for z != 0 and modest orders.
    """
    n, m = idx
    w2 = 1.0 + z * z
    rho2 = x * x + y * y
    amp = math.sqrt((2.0 / math.pi) / (2.0 ** (n + m) * math.factorial(n) * math.factorial(m))) / math.sqrt(w2)
    hn = hermite_sequence(n, math.sqrt(2.0) * x / math.sqrt(w2))[n]
    hm = hermite_sequence(m, math.sqrt(2.0) * y / math.sqrt(w2))[m]
    return (amp * hn * hm * np.exp(-rho2 / w2) * np.exp(-1j * rho2 / (z + 1.0 / z))
            * np.exp(1j * (n + m + 1) * math.atan(z)))


def gram_matrix(n_highest: int, grid: Grid2D, z: float) -> np.ndarray:
    """Midpoint-rule overlaps of all modes with n + m < n_highest at one plane.

    Entry [a, b] is sum A_a * conj(A_b) * h^2, rows and columns ordered as
    :func:`mode_indices`. The tensor-product grid lets the 2D sum split into
    x and y factors exactly.
    """
    u = mode_profiles_1d(n_highest - 1, grid.coords, z)
    one_d = (u @ u.conj().T) * grid.spacing
    idx = mode_indices(n_highest)
    n = np.array([i.n for i in idx])
    m = np.array([i.m for i in idx])
    return one_d[np.ix_(n, n)] * one_d[np.ix_(m, m)]


def check_grid(grid: Grid2D, n_highest: int, z_max: float, tol: float = 1e-8) -> None:
    """Raise :class:`GridTooSmallError` if ``grid`` cannot hold order ``n_highest - 1`` at ``z_max``.

    Two conditions: the highest 1D profile at its widest must be below ``tol``
    (relative intensity) at the outermost cell, and the sampling must stay
    under the Nyquist limit of its fastest local oscillation.
    """
    n = max(n_highest - 1, 0)
    z = abs(z_max)
    w = beam_radius(z)
    x = grid.coords
    profile = np.abs(mode_profiles_1d(n, x, z)[n]) ** 2
    edge, peak = profile[0], profile.max()
    problems = []
    if edge > tol * peak:
        problems.append(f"field at edge is {edge / peak:.2e} of peak")
    # local wavenumber: Hermite oscillation plus curvature chirp, at the turning point
    x_turn = w * math.sqrt(n + 0.5)
    k_local = math.sqrt(2.0 * (2 * n + 1)) / w + 2.0 * x_turn * z / (w * w)
    if k_local * grid.spacing > math.pi:
        problems.append(f"spacing {grid.spacing:.3g} exceeds Nyquist limit {math.pi / k_local:.3g}")
    if problems:
        wide = default_grid(n_highest, z, grid.samples)
        half = max(wide.half_extent, grid.half_extent)
        samples = max(grid.samples, 2 * math.ceil(half * k_local / math.pi))
        suggested = Grid2D(half, samples + samples % 2)
        raise GridTooSmallError(
            f"grid L={grid.half_extent:.3g}, G={grid.samples} cannot resolve N={n_highest} "
            f"at z={z:g}: " + "; ".join(problems)
            + f" (try half_extent={suggested.half_extent:.3g}, samples={suggested.samples})",
            suggested,
        )
