"""Measurement synthesis: echo samples, scene superposition, dechirp, timing.

The per-frequency-point echo model is

    s = refl * gain * exp(-j * 4 pi f R / c)

with the antenna's directional response folded into ``gain`` and the exact
spherical two-way phase 4 pi f R / c carrying the near-field curvature that
makes positions separable. Noise is added per complex sample from
counter-based substreams so results never depend on evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from sweepsense.core import (
    SPEED_OF_LIGHT,
    AliasingError,
    ChannelAxis,
    ChirpConfig,
    FrequencyPlan,
    GeometryError,
    Measurement,
    Scene,
    frequency_grid,
    range_of,
)
from sweepsense.dispersion import DispersionModel
from sweepsense.streams import substream

_FOUR_LN2 = 4.0 * math.log(2.0)


@dataclass(frozen=True)
class AntennaModel:
    """Gaussian-mainlobe surrogate for the frequency-scanned antenna response.

    The one-way pattern has half-power beamwidth lambda(f) / length radians;
    with two_way (default) the gain is squared for the monostatic round trip.
    The gain depends only on the in-plane angular offset of the target from
    the channel's beam direction; there is no taper in the orthogonal plane.
    """

    length: float = 0.12  # m
    two_way: bool = True

    def __post_init__(self) -> None:
        if self.length <= 0.0:
            raise ValueError("antenna length must be positive")

    def half_power_beamwidth(self, f):
        """One-way half-power beamwidth lambda(f)/length in rad."""
        return (SPEED_OF_LIGHT / np.asarray(f, dtype=float)) / self.length

    def gain(self, f, beam_angle, position, axis: ChannelAxis):
        """Directional response toward ``position`` for a beam at ``beam_angle``.

        Real-valued in [0, 1]; peak 1.0 on the beam axis, one-way value 0.5 at
        half the half-power beamwidth off axis. Vectorized over f/beam_angle.
        """
        dtheta = axis.target_angle(position) - np.asarray(beam_angle, dtype=float)
        g = np.exp(-_FOUR_LN2 * (dtheta / self.half_power_beamwidth(f)) ** 2)
        out = g * g if self.two_way else g
        return float(out) if np.ndim(out) == 0 else out


def phase_curvature(f, position) -> float | np.ndarray:
    """Two-way propagation phase 4 pi f R / c in rad, not reduced mod 2 pi."""
    r = range_of(position)
    phase = 4.0 * math.pi * np.asarray(f, dtype=float) * r / SPEED_OF_LIGHT
    return float(phase) if phase.ndim == 0 else phase


def synthesize_sample(f, position, refl: complex, gain) -> complex | np.ndarray:
    """Noiseless echo sample refl * gain * exp(-j 4 pi f R / c)."""
    out = refl * np.asarray(gain) * np.exp(-1j * np.asarray(phase_curvature(f, position)))
    return complex(out) if np.ndim(out) == 0 else out


def simulate_measurement(
    scene: Scene,
    plan: FrequencyPlan,
    model: DispersionModel,
    antenna: AntennaModel,
) -> Measurement:
    """Dual-channel measurement of a scene over the full frequency sweep.

    Target echoes superpose linearly per Eq.-style sample synthesis; additive
    noise (when configured) is circular complex Gaussian with per-sample
    variance sigma^2 = P_sig / 10^(snr_db/10), where P_sig is the mean
    noiseless per-sample power across both channels. Each noise sample comes
    from the substream keyed by (seed, channel, index), making measurements
    bit-identical regardless of threading or evaluation order.
    """
    freqs = frequency_grid(plan)
    thetas = np.atleast_1d(model.beam_angle(freqs))
    channels: dict[ChannelAxis, np.ndarray] = {
        ChannelAxis.X_SCAN: np.zeros(plan.n_points, dtype=np.complex128),
        ChannelAxis.Y_SCAN: np.zeros(plan.n_points, dtype=np.complex128),
    }
    for target in scene.targets:
        phase = phase_curvature(freqs, target.position)
        carrier = np.exp(-1j * np.asarray(phase))
        for axis, refl in (
            (ChannelAxis.X_SCAN, target.refl_x),
            (ChannelAxis.Y_SCAN, target.refl_y),
        ):
            g = antenna.gain(freqs, thetas, target.position, axis)
            channels[axis] = channels[axis] + refl * g * carrier

    noise = scene.noise
    if not noise.noiseless:
        s_x, s_y = channels[ChannelAxis.X_SCAN], channels[ChannelAxis.Y_SCAN]
        p_sig = (np.sum(np.abs(s_x) ** 2) + np.sum(np.abs(s_y) ** 2)) / (
            2.0 * plan.n_points
        )
        var = float(p_sig) * 10.0 ** (-float(noise.snr_db) / 10.0)
        if var > 0.0:
            sigma = math.sqrt(var / 2.0)
            for axis in (ChannelAxis.X_SCAN, ChannelAxis.Y_SCAN):
                drawn = np.empty(plan.n_points, dtype=np.complex128)
                for m in range(plan.n_points):
                    re, im = substream(noise.seed, axis.value, m).normal(0.0, sigma, 2)
                    drawn[m] = re + 1j * im
                channels[axis] = channels[axis] + drawn

    return Measurement(plan, channels[ChannelAxis.X_SCAN], channels[ChannelAxis.Y_SCAN])


def dechirp_range_profile(
    chirp: ChirpConfig, targets: list[tuple[float, complex]]
) -> tuple[np.ndarray, np.ndarray]:
    """Range profile of one chirp via dechirped beat tones and an FFT.

    ``targets`` are (range_m, complex_amplitude) pairs. Each target produces a
    beat tone at 2 k R / c; the returned profile is the n_samples-point DFT of
    the composite beat signal, with range axis R(q) = c q f_s / (2 k N).
    Raises AliasingError if any beat frequency reaches f_s / 2.
    """
    t = np.arange(chirp.n_samples) / chirp.sample_rate
    beat = np.zeros(chirp.n_samples, dtype=np.complex128)
    for r, amp in targets:
        if r <= 0.0:
            raise GeometryError(f"target range must be positive, got {r}")
        f_beat = 2.0 * chirp.slope * r / SPEED_OF_LIGHT
        if f_beat >= chirp.sample_rate / 2.0:
            raise AliasingError(
                f"beat frequency {f_beat:.6g} Hz aliases at sample rate "
                f"{chirp.sample_rate:.6g} Hz"
            )
        beat += amp * np.exp(2j * math.pi * f_beat * t)
    profile = np.fft.fft(beat)
    bins = np.arange(chirp.n_samples)
    ranges = SPEED_OF_LIGHT * bins * chirp.sample_rate / (
        2.0 * chirp.slope * chirp.n_samples
    )
    return profile, ranges


@dataclass(frozen=True)
class FrameEntry:
    """Timing and pointing of one chirp slot within a frame."""

    index: int
    t_start: float
    tx_end: float
    rx_start: float
    rx_end: float
    frequency: float
    beam_angle: float


@dataclass(frozen=True)
class FrameSchedule:
    """TDD schedule of a full frequency-scanning frame (metadata only)."""

    entries: tuple[FrameEntry, ...]
    frame_duration: float


def frame_schedule(
    plan: FrequencyPlan, chirp: ChirpConfig, model: DispersionModel
) -> FrameSchedule:
    """Per-chirp Tx/Rx windows over the sweep; frame lasts n_points * duration.

    Each slot splits as Tx, guard, Rx, guard with equal Tx/Rx windows, so the
    guard must satisfy guard < duration / 2. The chirp's swept bandwidth must
    tile the plan's band (slope * duration == plan.step).
    """
    if chirp.guard >= chirp.duration / 2.0:
        raise ValueError(
            f"guard {chirp.guard} must be below half the chirp duration {chirp.duration}"
        )
    if not math.isclose(chirp.swept_bandwidth, plan.step, rel_tol=1e-6):
        raise ValueError(
            f"chirp sweeps {chirp.swept_bandwidth:.6g} Hz but the plan's sub-band "
            f"is {plan.step:.6g} Hz; use ChirpConfig.for_plan"
        )
    freqs = frequency_grid(plan)
    thetas = np.atleast_1d(model.beam_angle(freqs))
    window = (chirp.duration - 2.0 * chirp.guard) / 2.0
    entries = []
    for i in range(plan.n_points):
        t0 = i * chirp.duration
        entries.append(
            FrameEntry(
                index=i,
                t_start=t0,
                tx_end=t0 + window,
                rx_start=t0 + window + chirp.guard,
                rx_end=t0 + window + chirp.guard + window,
                frequency=float(freqs[i]),
                beam_angle=float(thetas[i]),
            )
        )
    return FrameSchedule(entries=tuple(entries), frame_duration=plan.n_points * chirp.duration)
