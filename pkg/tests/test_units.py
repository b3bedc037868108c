import math

import pytest
from hypothesis import given, settings, strategies as st

from mmdelay.errors import InvalidParameterError
from mmdelay.units import (
    SPEED_OF_LIGHT,
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

OURS = FiberSpec(0.2, 25e-6, FiberProfile.PARABOLIC)
JIN = FiberSpec(0.22, 52.5e-6, FiberProfile.STEP_INDEX)


# hand evaluation: 2*pi/lambda * NA * a
@pytest.mark.parametrize("fiber, wavelength, expected, tol", [
    (OURS, 1550e-9, 20.268, 1e-3),
    (OURS, 1.0, 3.1416e-5, 1e-9),
    (FiberSpec(0.22, 52.5e-6), 850e-9, 85.38, 1e-2),
])
def test_v_parameter(fiber, wavelength, expected, tol):
    assert v_parameter(fiber, wavelength) == pytest.approx(expected, abs=tol)


@pytest.mark.parametrize("wavelength", [0.0, -1e-6])
def test_v_parameter_rejects_bad_wavelength(wavelength):
    with pytest.raises(InvalidParameterError):
        v_parameter(OURS, wavelength)


@pytest.mark.parametrize("na, a", [(0.0, 1e-6), (1.0, 1e-6), (0.2, 0.0), (0.2, -1e-6)])
def test_fiber_invariants(na, a):
    with pytest.raises(InvalidParameterError):
        FiberSpec(na, a)


def test_guided_mode_count_examples():
    assert guided_mode_count(20.268, FiberProfile.PARABOLIC) == pytest.approx(51.35, abs=0.01)
    assert guided_mode_count(0.0, FiberProfile.STEP_INDEX) == 0.0
    assert guided_mode_count(85.38, FiberProfile.STEP_INDEX) == pytest.approx(1822.4, abs=0.1)
    with pytest.raises(InvalidParameterError):
        guided_mode_count(-1.0, FiberProfile.PARABOLIC)


@given(st.floats(0.0, 500.0))
def test_step_index_doubles_parabolic(v):
    assert guided_mode_count(v, FiberProfile.STEP_INDEX) == 2.0 * guided_mode_count(v, FiberProfile.PARABOLIC)


def test_highest_mode_order_examples():
    # nearest integer: floor of the root 9.65 would give 9
    assert highest_mode_order(51.35) == 10
    assert highest_mode_order(1.0) == 1
    assert highest_mode_order(1822.4) == 60
    assert highest_mode_order(0.0) == 0
    assert highest_mode_order(0.2) == 1
    with pytest.raises(InvalidParameterError):
        highest_mode_order(-1.0)


@pytest.mark.parametrize("n", range(1, 101))
def test_highest_mode_order_inverts_triangle_numbers(n):
    assert highest_mode_order(n * (n + 1) / 2) == n


def test_fiber_chain_anchors():
    assert fiber_mode_order(OURS, 1550e-9) == 10
    # wavelength not stated for this fiber; 850 nm reproduces N = 60
    assert fiber_mode_order(JIN, 850e-9) == 60
    assert fiber_mode_order(JIN, 1550e-9) == 33


@settings(max_examples=3)
@given(st.floats(0.05, 0.5), st.floats(5e-6, 1e-4), st.floats(400e-9, 2e-6), st.floats(1.1, 3.0))
def test_v_parameter_scaling(na, a, wl, k):
    base = v_parameter(FiberSpec(na, a), wl)
    if na * k < 1:
        assert v_parameter(FiberSpec(na * k, a), wl) == pytest.approx(k * base, rel=1e-12)
    assert v_parameter(FiberSpec(na, a * k), wl) == pytest.approx(k * base, rel=1e-12)
    assert v_parameter(FiberSpec(na, a), wl * k) == pytest.approx(base / k, rel=1e-12)


def test_mirror_step_delay():
    rec = convert_delay(DelaySpec(0.0375, DelayUnit.MIRROR_SHIFT_METERS), OpticalConfig(1550e-9, 1.85e-3))
    assert rec.path_meters == pytest.approx(0.075)
    assert rec.seconds * 1e9 == pytest.approx(0.25017, abs=1e-5)
    assert abs(rec.seconds - 0.25e-9) / 0.25e-9 < 5e-3


def test_zero_delay():
    rec = convert_delay(DelaySpec(0.0, DelayUnit.SECONDS), OpticalConfig(1550e-9, 1e-3))
    assert rec == type(rec)(0.0, 0.0, 0.0, 0.0)


def test_two_ns_in_rayleigh_units():
    optics = OpticalConfig(1550e-9, 1.85e-3)
    assert optics.rayleigh_length == pytest.approx(6.937, abs=1e-3)
    rec = convert_delay(DelaySpec(2e-9, DelayUnit.SECONDS), optics)
    assert rec.path_meters == pytest.approx(0.5996, abs=1e-4)
    assert rec.rayleigh_units == pytest.approx(0.0865, abs=1e-4)
    assert rec.path_meters == 2e-9 * SPEED_OF_LIGHT


@given(
    st.floats(0.0, 1e3, allow_subnormal=False),
    st.sampled_from(list(DelayUnit)),
    st.sampled_from(list(DelayUnit)),
    st.floats(1e-4, 1e-2),
    st.floats(400e-9, 2e-6),
)
def test_delay_round_trip(value, src, dst, waist, wavelength):
    optics = OpticalConfig(wavelength, waist)
    there = convert_delay(DelaySpec(value, src), optics).in_unit(dst)
    back = convert_delay(DelaySpec(there, dst), optics).in_unit(src)
    assert math.isclose(back, value, rel_tol=1e-12, abs_tol=1e-300)


def test_negative_delay_rejected():
    with pytest.raises(InvalidParameterError):
        DelaySpec(-1.0, DelayUnit.SECONDS)


@pytest.mark.parametrize("wl, w0", [(0.0, 1e-3), (1e-6, 0.0)])
def test_optical_config_invariants(wl, w0):
    with pytest.raises(InvalidParameterError):
        OpticalConfig(wl, w0)


def test_profile_parsing():
    assert FiberProfile.parse("Step-Index") is FiberProfile.STEP_INDEX
    assert FiberProfile.parse("graded") is FiberProfile.PARABOLIC
    assert FiberSpec(0.2, 25e-6, "step").profile is FiberProfile.STEP_INDEX
    with pytest.raises(InvalidParameterError):
        FiberProfile.parse("w-profile")
