"""Physical parameters, delay unit conversions and the fiber mode-count chain.

Everything downstream of this module works in normalized units: transverse
coordinates in waists (w0 = 1) and propagation distance in Rayleigh lengths
(z_R = 1). SI values only appear here.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import InvalidParameterError

SPEED_OF_LIGHT = 299_792_458.0  # m/s, exact; air index taken as 1


class FiberProfile(enum.Enum):
    PARABOLIC = "parabolic"
    STEP_INDEX = "step"

    @classmethod
    def parse(cls, text: str) -> "FiberProfile":
        key = text.strip().lower().replace("-", "").replace("_", "")
        aliases = {
            "parabolic": cls.PARABOLIC,
            "graded": cls.PARABOLIC,
            "gradedindex": cls.PARABOLIC,
            "step": cls.STEP_INDEX,
            "stepindex": cls.STEP_INDEX,
        }
        try:
            return aliases[key]
        except KeyError:
            raise InvalidParameterError(f"unknown fiber profile {text!r}") from None


# guided modes per V^2, polarization diversity excluded
_MODE_COUNT_FACTOR = {FiberProfile.PARABOLIC: 1.0 / 8.0, FiberProfile.STEP_INDEX: 1.0 / 4.0}


@dataclass(frozen=True)
class FiberSpec:
    """Multimode fiber that limits the modal content of the beam.

    Parameters
    ----------
    numerical_aperture : float
        NA, strictly between 0 and 1.
    core_radius : float
        Core radius in meters.
    profile : FiberProfile
        Refractive index profile.
    name : str
        Label used in sweep output.
    """

    numerical_aperture: float
    core_radius: float
    profile: FiberProfile = FiberProfile.PARABOLIC
    name: str = ""

    def __post_init__(self):
        if not 0.0 < self.numerical_aperture < 1.0:
            raise InvalidParameterError(f"NA must lie in (0, 1), got {self.numerical_aperture}")
        if not self.core_radius > 0.0:
            raise InvalidParameterError(f"core radius must be positive, got {self.core_radius}")
        if isinstance(self.profile, str):
            object.__setattr__(self, "profile", FiberProfile.parse(self.profile))

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        return f"NA={self.numerical_aperture:g}, a={self.core_radius * 1e6:g}um, {self.profile.value}"


@dataclass(frozen=True)
class OpticalConfig:
    """Wavelength and waist (both in meters) fixing the normalization scales."""

    wavelength: float
    waist: float

    def __post_init__(self):
        if not self.wavelength > 0.0:
            raise InvalidParameterError(f"wavelength must be positive, got {self.wavelength}")
        if not self.waist > 0.0:
            raise InvalidParameterError(f"waist must be positive, got {self.waist}")

    @property
    def rayleigh_length(self) -> float:
        return math.pi * self.waist**2 / self.wavelength


class DelayUnit(enum.Enum):
    SECONDS = "seconds"
    PATH_METERS = "path_meters"
    RAYLEIGH_UNITS = "rayleigh"
    MIRROR_SHIFT_METERS = "mirror_shift_meters"

    @classmethod
    def parse(cls, text: str) -> "DelayUnit":
        key = text.strip().lower()
        aliases = {
            "s": cls.SECONDS, "seconds": cls.SECONDS,
            "path": cls.PATH_METERS, "path_meters": cls.PATH_METERS, "m": cls.PATH_METERS,
            "rayleigh": cls.RAYLEIGH_UNITS, "zr": cls.RAYLEIGH_UNITS, "rayleigh_units": cls.RAYLEIGH_UNITS,
            "mirror": cls.MIRROR_SHIFT_METERS, "mirror_shift_meters": cls.MIRROR_SHIFT_METERS,
        }
        try:
            return aliases[key]
        except KeyError:
            raise InvalidParameterError(f"unknown delay unit {text!r}") from None


@dataclass(frozen=True)
class DelaySpec:
    value: float
    unit: DelayUnit

    def __post_init__(self):
        if not self.value >= 0.0:
            raise InvalidParameterError(f"delay must be non-negative, got {self.value}")


@dataclass(frozen=True)
class DelayRecord:
    """One delay expressed in every supported unit."""

    seconds: float
    path_meters: float
    rayleigh_units: float
    mirror_shift_meters: float

    def in_unit(self, unit: DelayUnit) -> float:
        return {
            DelayUnit.SECONDS: self.seconds,
            DelayUnit.PATH_METERS: self.path_meters,
            DelayUnit.RAYLEIGH_UNITS: self.rayleigh_units,
            DelayUnit.MIRROR_SHIFT_METERS: self.mirror_shift_meters,
        }[unit]


def convert_delay(delay: DelaySpec, optics: OpticalConfig) -> DelayRecord:
    """Express a delay as time, optical path, Rayleigh lengths and mirror shift.

    The path difference is ``c * t``; in a Michelson geometry the mirror moves
    half of it.
    """
    z_r = optics.rayleigh_length
    v = float(delay.value)
    if delay.unit is DelayUnit.SECONDS:
        path = SPEED_OF_LIGHT * v
    elif delay.unit is DelayUnit.PATH_METERS:
        path = v
    elif delay.unit is DelayUnit.RAYLEIGH_UNITS:
        path = v * z_r
    elif delay.unit is DelayUnit.MIRROR_SHIFT_METERS:
        path = 2.0 * v
    else:  # pragma: no cover
        raise InvalidParameterError(f"unsupported unit {delay.unit}")

    # keep the input representation verbatim so round trips are exact
    return DelayRecord(
        seconds=v if delay.unit is DelayUnit.SECONDS else path / SPEED_OF_LIGHT,
        path_meters=path,
        rayleigh_units=v if delay.unit is DelayUnit.RAYLEIGH_UNITS else path / z_r,
        mirror_shift_meters=v if delay.unit is DelayUnit.MIRROR_SHIFT_METERS else path / 2.0,
    )


def v_parameter(fiber: FiberSpec, wavelength: float) -> float:
    if not wavelength > 0.0:
        raise InvalidParameterError(f"wavelength must be positive, got {wavelength}")
    return 2.0 * math.pi / wavelength * fiber.numerical_aperture * fiber.core_radius


def guided_mode_count(v: float, profile: FiberProfile) -> float:
    """Approximate number of guided spatial modes, V^2/8 (parabolic) or V^2/4 (step)."""
    if not v >= 0.0:
        raise InvalidParameterError(f"V-parameter must be non-negative, got {v}")
    return v * v * _MODE_COUNT_FACTOR[FiberProfile(profile)]


def highest_mode_order(m: float) -> int:
    """Nearest integer N with N(N+1)/2 = m; at least 1 whenever m > 0."""
    if not m >= 0.0:
        raise InvalidParameterError(f"mode count must be non-negative, got {m}")
    if m == 0.0:
        return 0
    root = (-1.0 + math.sqrt(1.0 + 8.0 * m)) / 2.0
    return max(1, int(math.floor(root + 0.5)))


def fiber_mode_order(fiber: FiberSpec, wavelength: float) -> int:
    """Highest combined mode order N admitted by ``fiber`` at ``wavelength``."""
    return highest_mode_order(guided_mode_count(v_parameter(fiber, wavelength), fiber.profile))
