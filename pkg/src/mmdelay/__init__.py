"""Visibility of spatially multimode beams in uncompensated delay interferometers."""

__version__ = "0.1.0"

from .beams import BeamRealization, evaluate_beam, intensity_image, synthesize_beam, trial_seed
from .errors import ConfigError, GridTooSmallError, InvalidParameterError, UndefinedVisibilityError
from .interference import (
    VisibilityResult,
    angular_spectrum_propagate,
    overlap_quadrature,
    visibility,
    visibility_mode_space,
)
from .modes import Grid2D, ModeIndex, SampledField, default_grid, evaluate_mode, gram_matrix, hermite_sequence
from .units import (
    DelaySpec,
    DelayUnit,
    FiberProfile,
    FiberSpec,
    OpticalConfig,
    convert_delay,
    fiber_mode_order,
    guided_mode_count,
    highest_mode_order,
    v_parameter,
)
