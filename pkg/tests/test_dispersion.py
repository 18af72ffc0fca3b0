"""Dispersion models and virtual-aperture enumeration."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sweepsense.core import BandError, ChannelAxis, FrequencyPlan, frequency_grid
from sweepsense.dispersion import (
    LinearSineDispersion,
    LookupTableDispersion,
    virtual_aperture,
)

PLAN = FrequencyPlan(60e9, 66e9, 128)
MODEL = LinearSineDispersion.for_plan(PLAN)


class TestLinearSine:
    def test_band_center_is_broadside(self):
        assert MODEL.beam_angle(63e9) == pytest.approx(0.0, abs=1e-12)

    def test_band_edges_hit_scan_limits(self):
        assert MODEL.beam_angle(60e9) == pytest.approx(-math.radians(60), rel=1e-12)
        assert MODEL.beam_angle(66e9) == pytest.approx(math.radians(60), rel=1e-12)

    def test_quarter_band_closed_form(self):
        # asin(sin(60 deg) * -0.5) = -0.4478323969 rad = -25.6589 deg
        theta = MODEL.beam_angle(61.5e9)
        assert theta == pytest.approx(-0.44783239692893245, rel=1e-12)
        assert math.degrees(theta) == pytest.approx(-25.65890627, rel=1e-8)

    def test_out_of_band_rejected(self):
        with pytest.raises(BandError):
            MODEL.beam_angle(59.9e9)
        with pytest.raises(BandError):
            MODEL.beam_angle(66.1e9)

    def test_sine_is_linear_in_frequency(self):
        # independent check of the mapping: sin(theta) interpolates linearly
        f = np.linspace(60e9, 66e9, 13)
        s = np.sin(MODEL.beam_angle(f))
        expected = np.sin(math.radians(60)) * (2 * (f - 60e9) / 6e9 - 1)
        np.testing.assert_allclose(s, expected, atol=1e-12)

    @given(
        f1=st.floats(60e9, 66e9),
        f2=st.floats(60e9, 66e9),
    )
    @settings(max_examples=200, deadline=None)
    def test_strictly_increasing(self, f1, f2):
        if f1 == f2:
            return
        lo, hi = min(f1, f2), max(f1, f2)
        assert MODEL.beam_angle(lo) < MODEL.beam_angle(hi)

    @given(f=st.floats(60e9, 66e9))
    @settings(max_examples=200, deadline=None)
    def test_mirror_symmetry(self, f):
        assert MODEL.beam_angle(60e9 + 66e9 - f) == pytest.approx(
            -MODEL.beam_angle(f), abs=1e-12
        )

    def test_invalid_angles_rejected(self):
        with pytest.raises(ValueError):
            LinearSineDispersion(60e9, 66e9, math.radians(30), math.radians(20))
        with pytest.raises(ValueError):
            LinearSineDispersion(60e9, 66e9, -math.pi / 2, math.radians(60))


class TestLookupTable:
    def make(self):
        f = np.linspace(60e9, 66e9, 7)
        a = np.radians(np.linspace(-60, 60, 7))
        return LookupTableDispersion(f, a)

    def test_interpolates_linearly(self):
        model = self.make()
        assert model.beam_angle(60.5e9) == pytest.approx(math.radians(-50), rel=1e-12)
        assert model.beam_angle(63e9) == pytest.approx(0.0, abs=1e-12)

    def test_band_is_table_span(self):
        model = self.make()
        with pytest.raises(BandError):
            model.beam_angle(59e9)

    def test_monotonicity_enforced(self):
        with pytest.raises(ValueError):
            LookupTableDispersion(
                np.array([60e9, 61e9, 60.5e9]), np.radians([-60, 0, 60])
            )
        with pytest.raises(ValueError):
            LookupTableDispersion(
                np.array([60e9, 61e9, 62e9]), np.radians([-60, 10, 5])
            )

    def test_from_csv(self, tmp_path):
        path = tmp_path / "disp.csv"
        path.write_text(
            "frequency_hz,angle_deg\n60e9,-60\n63e9,0\n66e9,60\n"
        )
        model = LookupTableDispersion.from_csv(path)
        assert model.beam_angle(63e9) == pytest.approx(0.0, abs=1e-12)
        assert model.beam_angle(64.5e9) == pytest.approx(math.radians(30), rel=1e-12)

    def test_from_csv_requires_header(self, tmp_path):
        path = tmp_path / "disp.csv"
        path.write_text("60e9,-60\n66e9,60\n")
        with pytest.raises(ValueError, match="header"):
            LookupTableDispersion.from_csv(path)

    def test_from_csv_reports_bad_line(self, tmp_path):
        path = tmp_path / "disp.csv"
        path.write_text("frequency_hz,angle_deg\n60e9,-60\nnot-a-number,0\n")
        with pytest.raises(ValueError, match="line 3"):
            LookupTableDispersion.from_csv(path)


class TestVirtualAperture:
    def test_single_element(self):
        plan = FrequencyPlan(60e9, 66e9, 1)
        elems = virtual_aperture(plan, LinearSineDispersion.for_plan(plan), ChannelAxis.X_SCAN)
        assert len(elems) == 1
        assert elems[0].frequency == pytest.approx(63e9, rel=1e-15)
        assert elems[0].angle == pytest.approx(0.0, abs=1e-12)
        assert elems[0].axis is ChannelAxis.X_SCAN

    def test_two_elements_symmetric(self):
        plan = FrequencyPlan(60e9, 66e9, 2)
        elems = virtual_aperture(plan, LinearSineDispersion.for_plan(plan), ChannelAxis.Y_SCAN)
        # asin(sin(60 deg) / 2) = 0.4478323969 rad
        assert elems[0].angle == pytest.approx(-0.44783239692893245, rel=1e-12)
        assert elems[1].angle == pytest.approx(+0.44783239692893245, rel=1e-12)

    def test_full_sweep_monotone_and_consistent(self):
        elems = virtual_aperture(PLAN, MODEL, ChannelAxis.X_SCAN)
        assert len(elems) == 128
        angles = np.array([e.angle for e in elems])
        assert np.all(np.diff(angles) > 0.0)
        # edge elements: asin(sin(60 deg) * 127/128) = 59.2335 deg
        assert math.degrees(elems[0].angle) == pytest.approx(-59.23354998719348, rel=1e-10)
        assert math.degrees(elems[-1].angle) == pytest.approx(59.23354998719348, rel=1e-10)
        np.testing.assert_array_equal(
            angles, np.atleast_1d(MODEL.beam_angle(frequency_grid(PLAN)))
        )

    def test_shared_schedule_across_axes(self):
        ex = virtual_aperture(PLAN, MODEL, ChannelAxis.X_SCAN)
        ey = virtual_aperture(PLAN, MODEL, ChannelAxis.Y_SCAN)
        assert [e.angle for e in ex] == [e.angle for e in ey]
