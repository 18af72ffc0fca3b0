"""Shared domain types, physical constants, and geometry conventions.

Coordinate convention used throughout: the antenna phase center sits at the
origin, boresight points along +z, the x-scan channel steers in the x-z plane
(azimuth) and the y-scan channel in the y-z plane (elevation). Targets must
lie in the forward half-space (z > 0). All angles are radians, all distances
meters, all frequencies Hz.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

# Exact SI value, not 3e8: derived quantities land within <0.1% of the usual
# round numbers (e.g. 2.5 cm range resolution for 6 GHz).
SPEED_OF_LIGHT = 299_792_458.0  # m/s


class GeometryError(ValueError):
    """Target or probe position violates the geometry conventions."""


class BandError(ValueError):
    """Frequency falls outside a dispersion model's calibrated band."""


class AliasingError(ValueError):
    """Beat frequency at or above Nyquist for the configured sampling."""


class DegenerateMeasurementError(ValueError):
    """Measurement channel has zero norm and cannot be normalized."""


@dataclass(frozen=True)
class FrequencyPlan:
    """Schedule of chirp center frequencies spanning [f_min, f_max].

    The n_points sub-band centers are f[i] = f_min + (i + 1/2) * step for
    i = 0..n_points-1, so chirps of bandwidth step tile the band exactly.
    Each center frequency acts as one virtual element of the aperture.
    """

    f_min: float  # Hz
    f_max: float  # Hz
    n_points: int

    def __post_init__(self) -> None:
        if not (0.0 < self.f_min < self.f_max):
            raise ValueError(
                f"need 0 < f_min < f_max, got f_min={self.f_min}, f_max={self.f_max}"
            )
        if self.n_points < 1:
            raise ValueError(f"n_points must be >= 1, got {self.n_points}")

    @property
    def bandwidth(self) -> float:
        """Total swept bandwidth f_max - f_min in Hz."""
        return self.f_max - self.f_min

    @property
    def step(self) -> float:
        """Per-chirp bandwidth (band / n_points) in Hz."""
        return self.bandwidth / self.n_points


def frequency_grid(plan: FrequencyPlan) -> np.ndarray:
    """Center frequencies of the plan, strictly increasing, shape (n_points,)."""
    idx = np.arange(plan.n_points)
    return plan.f_min + (idx + 0.5) * plan.step


@dataclass(frozen=True)
class ChirpConfig:
    """Fast-time parameters of a single chirp slot.

    duration is the chirp slot length, guard the TDD guard interval, slope the
    frequency ramp rate in Hz/s; n_samples baseband samples are taken at
    sample_rate during reception.
    """

    duration: float = 100e-6  # s
    guard: float = 5e-6  # s
    slope: float = 4.6875e11  # Hz/s (default tiles 60-66 GHz with 128 points)
    n_samples: int = 64
    sample_rate: float = 1e6  # Hz

    def __post_init__(self) -> None:
        if self.duration <= 0.0:
            raise ValueError("chirp duration must be positive")
        if self.guard < 0.0:
            raise ValueError("guard interval must be >= 0")
        if self.slope <= 0.0:
            raise ValueError("chirp slope must be positive")
        if self.n_samples < 2:
            raise ValueError("need at least 2 samples per chirp")
        if self.sample_rate <= 0.0:
            raise ValueError("sample rate must be positive")

    @property
    def swept_bandwidth(self) -> float:
        """Bandwidth covered by one chirp, slope * duration."""
        return self.slope * self.duration

    @classmethod
    def for_plan(
        cls,
        plan: FrequencyPlan,
        duration: float = 100e-6,
        guard: float = 5e-6,
        n_samples: int = 64,
        sample_rate: float = 1e6,
    ) -> "ChirpConfig":
        """Chirp whose swept bandwidth tiles the plan's band contiguously."""
        return cls(
            duration=duration,
            guard=guard,
            slope=plan.step / duration,
            n_samples=n_samples,
            sample_rate=sample_rate,
        )


class ChannelAxis(enum.Enum):
    """The two orthogonal scanning channels of the dual-fed antenna."""

    X_SCAN = "x"
    Y_SCAN = "y"

    def target_angle(self, position) -> float:
        """In-plane angle of a position for this channel's scan plane.

        X_SCAN measures azimuth atan2(x, z); Y_SCAN elevation atan2(y, z).
        """
        x, y, z = position
        if self is ChannelAxis.X_SCAN:
            return math.atan2(x, z)
        return math.atan2(y, z)


@dataclass(frozen=True)
class Target:
    """Point scatterer with per-channel complex reflectivity.

    refl_y defaults to refl_x: the two scanning channels see the same
    scatterer strength unless explicitly configured otherwise.
    """

    position: tuple[float, float, float]  # m, phase center at origin
    refl_x: complex = 1.0 + 0.0j
    refl_y: complex | None = None

    def __post_init__(self) -> None:
        pos = tuple(float(v) for v in self.position)
        if len(pos) != 3:
            raise GeometryError("position must have exactly 3 components")
        object.__setattr__(self, "position", pos)
        if not all(math.isfinite(v) for v in pos):
            raise GeometryError("position components must be finite")
        if pos == (0.0, 0.0, 0.0):
            raise GeometryError("target coincides with the antenna phase center")
        if pos[2] <= 0.0:
            raise GeometryError(f"target must lie in the forward half-space, z={pos[2]}")
        if self.refl_y is None:
            object.__setattr__(self, "refl_y", complex(self.refl_x))


@dataclass(frozen=True)
class NoiseConfig:
    """Additive-noise settings; snr_db=None means noiseless."""

    snr_db: float | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if not (0 <= int(self.seed) < 2**64):
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        object.__setattr__(self, "seed", int(self.seed))

    @property
    def noiseless(self) -> bool:
        return self.snr_db is None


_DEFAULT_NOISE = NoiseConfig()


@dataclass(frozen=True)
class Scene:
    """Collection of point targets plus a noise configuration."""

    targets: tuple[Target, ...] = ()
    noise: NoiseConfig = _DEFAULT_NOISE

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(self.targets))


@dataclass(frozen=True)
class Measurement:
    """Dual-channel complex measurement vectors indexed by frequency point."""

    plan: FrequencyPlan
    s_x: np.ndarray = field(repr=False)
    s_y: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        s_x = np.array(self.s_x, dtype=np.complex128, copy=True)
        s_y = np.array(self.s_y, dtype=np.complex128, copy=True)
        for name, vec in (("s_x", s_x), ("s_y", s_y)):
            if vec.shape != (self.plan.n_points,):
                raise ValueError(
                    f"{name} must have shape ({self.plan.n_points},), got {vec.shape}"
                )
        s_x.setflags(write=False)
        s_y.setflags(write=False)
        object.__setattr__(self, "s_x", s_x)
        object.__setattr__(self, "s_y", s_y)


def range_of(position) -> float:
    """Euclidean distance from the phase center (monostatic range)."""
    x, y, z = position
    r = math.sqrt(x * x + y * y + z * z)
    if r == 0.0:
        raise GeometryError("zero-length position vector has no defined range")
    return r
