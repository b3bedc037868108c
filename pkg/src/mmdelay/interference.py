"""Two-arm interference visibility and the independent checks used to validate it.

The visibility of fields alpha (short arm) and beta (long arm) is

    V = 2 |sum beta conj(alpha)| / sum(|alpha|^2 + |beta|^2).

Three routes compute it:

* :func:`visibility` on sampled fields with the midpoint rule,
* :func:`visibility_mode_space` from modal coefficients and 1D Gauss-Hermite
  overlaps, with no 2D grid at all,
* :func:`angular_spectrum_propagate` builds the long-arm field by FFT
  propagation of the waist field instead of the closed-form modes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .beams import BeamRealization
from .errors import GridTooSmallError, InvalidParameterError, UndefinedVisibilityError
from .modes import SampledField, hermite_functions


@dataclass(frozen=True)
class VisibilityResult:
    visibility: float
    overlap_numerator: complex
    power_alpha: float
    power_beta: float
    grid_meta: Optional[dict] = field(default=None)


def overlap_quadrature(alpha: SampledField, beta: SampledField) -> complex:
    """Midpoint-rule estimate of the integral of beta * conj(alpha)."""
    if alpha.grid != beta.grid:
        raise InvalidParameterError(f"fields live on different grids: {alpha.grid} vs {beta.grid}")
    return complex(np.sum(beta.values * alpha.values.conj()) * alpha.grid.spacing**2)


def _result(overlap: complex, p_alpha: float, p_beta: float, grid_meta=None) -> VisibilityResult:
    total = p_alpha + p_beta
    if total <= 0.0:
        raise UndefinedVisibilityError("both arms carry zero power")
    return VisibilityResult(2.0 * abs(overlap) / total, overlap, p_alpha, p_beta, grid_meta)


def visibility(alpha: SampledField, beta: SampledField) -> VisibilityResult:
    overlap = overlap_quadrature(alpha, beta)
    return _result(overlap, alpha.power(), beta.power(), alpha.grid.summary())


def mode_overlap_1d(n_max: int, z2: float, z1: float, order: Optional[int] = None) -> np.ndarray:
    """Matrix X[p, q] = integral of u_p(x, z2) * conj(u_q(x, z1)) dx over the real line.

    Gauss-Hermite quadrature with the weight exp(-s x^2), s = 1/w1^2 + 1/w2^2,
    taken from the two Gaussian envelopes; what remains is polynomial times a
    slow quadratic chirp.
    """
    if not (math.isfinite(z1) and math.isfinite(z2)):
        raise InvalidParameterError("propagation distances must be finite")
    if order is None:
        order = 4 * (n_max + 1) + 120
    w1sq, w2sq = 1.0 + z1 * z1, 1.0 + z2 * z2
    s = 1.0 / w1sq + 1.0 / w2sq
    t, weights = np.polynomial.hermite.hermgauss(order)
    x = t / math.sqrt(s)
    p1 = hermite_functions(n_max, math.sqrt(2.0 / w1sq) * x, gaussian=False)
    p2 = hermite_functions(n_max, math.sqrt(2.0 / w2sq) * x, gaussian=False)
    chirp = np.exp(-1j * (z2 / w2sq - z1 / w1sq) * x * x)
    k = np.arange(n_max + 1) + 0.5
    gouy2 = np.exp(1j * k * math.atan(z2))
    gouy1 = np.exp(-1j * k * math.atan(z1))
    scale = math.sqrt(2.0) / math.sqrt(math.sqrt(w1sq * w2sq)) / math.sqrt(s)
    core = (p2 * (weights * chirp)[None, :]) @ p1.T
    return scale * gouy2[:, None] * core * gouy1[None, :]


def visibility_mode_space(beam: BeamRealization, z1: float, z2: float) -> VisibilityResult:
    """Visibility from modal coefficients; powers are exact, sum |c|^2 per arm."""
    c = beam.coefficient_matrix()
    x = mode_overlap_1d(beam.n_highest - 1, z2, z1)
    # sum over (n', m', n, m) of C[n', m'] conj(C[n, m]) X[n', n] X[m', m]
    overlap = complex(np.sum(c * (x @ c.conj() @ x.T)))
    power = float(np.sum(np.abs(beam.coefficients) ** 2))
    return _result(overlap, power, power)


def angular_spectrum_propagate(field_at_waist: SampledField, dz: float,
                               edge_tol: float = 1e-8) -> SampledField:
    """Paraxial free-space propagation by ``dz`` Rayleigh lengths via 2D FFT.

    In normalized units the envelope obeys dA/dz = -(i/4) laplacian(A) (the
    sign follows the mode convention, where a waist Gaussian exp(-r^2) becomes
    exp(-r^2/(1 - i z))/(1 - i z)). For spatial frequency nu in cycles per
    waist the transfer factor is exp(+i pi^2 nu^2 dz).
    """
    values = field_at_waist.values
    grid = field_at_waist.grid
    intensity = np.abs(values) ** 2
    edge = max(intensity[0].max(), intensity[-1].max(), intensity[:, 0].max(), intensity[:, -1].max())
    if edge > edge_tol * intensity.max():
        raise GridTooSmallError(
            f"edge intensity {edge / intensity.max():.2e} of peak exceeds {edge_tol:g}; enlarge the grid"
        )
    if dz == 0.0:
        return SampledField(grid, field_at_waist.z, values.copy())
    nu = np.fft.fftfreq(grid.samples, d=grid.spacing)
    nu2 = nu[None, :] ** 2 + nu[:, None] ** 2
    transfer = np.exp(1j * math.pi**2 * dz * nu2)
    out = np.fft.ifft2(np.fft.fft2(values) * transfer)
    return SampledField(grid, field_at_waist.z + dz, out)
