"""Frequency-to-beam-angle dispersion models and virtual-aperture enumeration.

A dispersion model maps chirp center frequency to the antenna's beam pointing
angle. Sweeping the frequency plan through a model yields one virtual element
per frequency point; the two orthogonal channels share the same angle
schedule applied in their respective scan planes.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from sweepsense.core import BandError, ChannelAxis, FrequencyPlan, frequency_grid

_HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class LinearSineDispersion:
    """Beam angle whose sine varies linearly with frequency across the band.

    With the symmetric default theta_min = -theta_max this is
    theta(f) = asin(sin(theta_max) * (2 (f - f_min) / (f_max - f_min) - 1)).
    """

    f_min: float  # Hz
    f_max: float  # Hz
    theta_min: float  # rad
    theta_max: float  # rad

    def __post_init__(self) -> None:
        if not (0.0 < self.f_min < self.f_max):
            raise ValueError("need 0 < f_min < f_max")
        if not (-_HALF_PI < self.theta_min < self.theta_max < _HALF_PI):
            raise ValueError(
                "need -pi/2 < theta_min < theta_max < pi/2, got "
                f"[{self.theta_min}, {self.theta_max}]"
            )

    @classmethod
    def for_plan(
        cls,
        plan: FrequencyPlan,
        theta_max: float = math.radians(60.0),
        theta_min: float | None = None,
    ) -> "LinearSineDispersion":
        """Symmetric scan over the plan's band, +-theta_max by default."""
        if theta_min is None:
            theta_min = -theta_max
        return cls(plan.f_min, plan.f_max, theta_min, theta_max)

    @property
    def band(self) -> tuple[float, float]:
        return (self.f_min, self.f_max)

    def beam_angle(self, f):
        """Pointing angle (rad) at frequency f; accepts scalars or arrays."""
        f = np.asarray(f, dtype=float)
        _check_band(f, self.band)
        frac = (f - self.f_min) / (self.f_max - self.f_min)
        s_lo, s_hi = math.sin(self.theta_min), math.sin(self.theta_max)
        theta = np.arcsin(s_lo + (s_hi - s_lo) * frac)
        return float(theta) if theta.ndim == 0 else theta


@dataclass(frozen=True)
class LookupTableDispersion:
    """Measured or simulated dispersion points with linear interpolation."""

    frequencies: np.ndarray  # Hz, strictly increasing
    angles: np.ndarray  # rad, strictly increasing

    def __post_init__(self) -> None:
        freqs = np.asarray(self.frequencies, dtype=float)
        angs = np.asarray(self.angles, dtype=float)
        if freqs.ndim != 1 or freqs.shape != angs.shape or freqs.size < 2:
            raise ValueError("need matching 1-D frequency/angle arrays with >= 2 rows")
        if not np.all(np.diff(freqs) > 0.0):
            raise ValueError("lookup frequencies must be strictly increasing")
        if not np.all(np.diff(angs) > 0.0):
            raise ValueError("lookup angles must be strictly increasing")
        if np.any(np.abs(angs) >= _HALF_PI):
            raise ValueError("lookup angles must lie within (-pi/2, pi/2)")
        freqs.setflags(write=False)
        angs.setflags(write=False)
        object.__setattr__(self, "frequencies", freqs)
        object.__setattr__(self, "angles", angs)

    @classmethod
    def from_csv(cls, path) -> "LookupTableDispersion":
        """Load a two-column CSV (frequency_hz, angle_deg); header mandatory."""
        with open(Path(path), newline="") as fh:
            rows = list(csv.reader(fh))
        if not rows:
            raise ValueError(f"{path}: empty dispersion table")
        header = [c.strip().lower() for c in rows[0]]
        if header != ["frequency_hz", "angle_deg"]:
            raise ValueError(
                f"{path}: expected header 'frequency_hz,angle_deg', got {rows[0]!r}"
            )
        freqs, angs = [], []
        for i, row in enumerate(rows[1:], start=2):
            if len(row) != 2:
                raise ValueError(f"{path}: line {i}: expected 2 fields, got {len(row)}")
            try:
                freqs.append(float(row[0]))
                angs.append(math.radians(float(row[1])))
            except ValueError as exc:
                raise ValueError(f"{path}: line {i}: {exc}") from None
        return cls(np.array(freqs), np.array(angs))

    @property
    def band(self) -> tuple[float, float]:
        return (float(self.frequencies[0]), float(self.frequencies[-1]))

    def beam_angle(self, f):
        """Interpolated pointing angle (rad) at frequency f."""
        f = np.asarray(f, dtype=float)
        _check_band(f, self.band)
        theta = np.interp(f, self.frequencies, self.angles)
        return float(theta) if theta.ndim == 0 else theta


DispersionModel = LinearSineDispersion | LookupTableDispersion


def _check_band(f: np.ndarray, band: tuple[float, float]) -> None:
    lo, hi = band
    if np.any(f < lo) or np.any(f > hi):
        raise BandError(
            f"frequency outside calibrated band [{lo:.6g}, {hi:.6g}] Hz"
        )


@dataclass(frozen=True)
class VirtualElement:
    """One frequency point of the scanned aperture: index, f, angle, channel."""

    index: int
    frequency: float  # Hz
    angle: float  # rad
    axis: ChannelAxis


def virtual_aperture(
    plan: FrequencyPlan, model: DispersionModel, axis: ChannelAxis
) -> list[VirtualElement]:
    """Enumerate the plan's virtual elements under a dispersion model.

    Angles are strictly increasing with the frequency index; both channels
    share one schedule applied in orthogonal planes.
    """
    freqs = frequency_grid(plan)
    angles = np.atleast_1d(model.beam_angle(freqs))
    return [
        VirtualElement(index=i, frequency=float(f), angle=float(a), axis=axis)
        for i, (f, a) in enumerate(zip(freqs, angles))
    ]
