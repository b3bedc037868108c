"""Built-in sweep configurations, used when the CLI gets no ``--config``."""

DELAY_RAYLEIGH = """\
[sweep]
kind = delay-rayleigh
trials = 20
master_seed = 2024

[beam]
n_highest = 3, 6, 10

[delays]
unit = rayleigh
start = 0
stop = 2
step = 0.125
"""

DELAY_TIME = """\
[sweep]
kind = delay-time
trials = 20
master_seed = 2024

[beam]
n_highest = 10
waists = 1.3e-3, 1.85e-3
wavelength = 1550e-9

[delays]
unit = seconds
start = 0
stop = 2e-9
step = 0.25e-9
"""

MODE_ORDER = """\
[sweep]
kind = mode-order
trials = 20
master_seed = 2024

[beam]
n_highest = 1..15

[delays]
unit = rayleigh
values = 0.1, 0.5, 1.0
"""

WAVELENGTH = """\
[sweep]
kind = wavelength

[wavelengths]
start = 600e-9
stop = 1700e-9
num = 221

[fiber:parabolic NA=0.2 a=25um]
numerical_aperture = 0.2
core_radius = 25e-6
profile = parabolic

[fiber:step NA=0.22 a=52.5um]
numerical_aperture = 0.22
core_radius = 52.5e-6
profile = step
"""

BEAM_IMAGE = """\
[sweep]
kind = beam-image

[beam]
n_highest = 10

[image]
seeds = 1, 2, 3
z = 0
"""

PRESETS = {
    "delay-rayleigh": DELAY_RAYLEIGH,
    "delay-time": DELAY_TIME,
    "mode-order": MODE_ORDER,
    "wavelength": WAVELENGTH,
    "beam-image": BEAM_IMAGE,
}
