"""Spatial fingerprints, dictionaries, matched-filter localization, ambiguity.

A fingerprint stacks the two per-channel measurement vectors after unit
normalization, suppressing reflectivity and path-loss scale while keeping the
phase and relative-amplitude structure that encodes position. Localization is
an argmax similarity scan over a dictionary of candidate-position
fingerprints; ambiguity probes trace how similarity decays as a target is
displaced from a reference point.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from sweepsense.core import (
    DegenerateMeasurementError,
    FrequencyPlan,
    GeometryError,
    Measurement,
    NoiseConfig,
    Scene,
    Target,
)
from sweepsense.dispersion import DispersionModel
from sweepsense.synth import AntennaModel, simulate_measurement

HALF_POWER = 1.0 / math.sqrt(2.0)

_NOISELESS = NoiseConfig(snr_db=None, seed=0)


@dataclass(frozen=True)
class Fingerprint:
    """Concatenated unit-norm channel vectors, x half then y half (length 2M)."""

    vector: np.ndarray = field(repr=False)
    plan: FrequencyPlan

    def __post_init__(self) -> None:
        vec = np.array(self.vector, dtype=np.complex128, copy=True)
        m = self.plan.n_points
        if vec.shape != (2 * m,):
            raise ValueError(f"fingerprint must have length {2 * m}, got {vec.shape}")
        for name, half in (("x", vec[:m]), ("y", vec[m:])):
            norm = np.linalg.norm(half)
            if abs(norm - 1.0) > 1e-9:
                raise ValueError(f"{name} half must be unit-norm, got {norm!r}")
        vec.setflags(write=False)
        object.__setattr__(self, "vector", vec)

    @property
    def x_half(self) -> np.ndarray:
        return self.vector[: self.plan.n_points]

    @property
    def y_half(self) -> np.ndarray:
        return self.vector[self.plan.n_points :]


def build_fingerprint(meas: Measurement) -> Fingerprint:
    """Normalize each channel to unit norm and concatenate."""
    norm_x = np.linalg.norm(meas.s_x)
    norm_y = np.linalg.norm(meas.s_y)
    if norm_x == 0.0 or norm_y == 0.0:
        raise DegenerateMeasurementError(
            "cannot fingerprint a measurement with a zero-norm channel"
        )
    return Fingerprint(np.concatenate([meas.s_x / norm_x, meas.s_y / norm_y]), meas.plan)


def similarity(a: Fingerprint, b: Fingerprint) -> float:
    """Mean of per-channel correlation magnitudes, in [0, 1].

    Taking the magnitude per channel makes the score invariant to any global
    phase on either channel while preserving within-channel phase structure.
    """
    if a.plan.n_points != b.plan.n_points:
        raise ValueError(
            f"fingerprint size mismatch: {a.plan.n_points} vs {b.plan.n_points} points"
        )
    return 0.5 * (
        abs(np.vdot(b.x_half, a.x_half)) + abs(np.vdot(b.y_half, a.y_half))
    )


@dataclass(frozen=True)
class PositionGrid:
    """Axis-aligned candidate-position box, enumerated x-fastest then y then z."""

    x_range: tuple[float, float]
    y_range: tuple[float, float]
    z_range: tuple[float, float]
    nx: int
    ny: int
    nz: int

    def __post_init__(self) -> None:
        for name, (lo, hi) in (
            ("x", self.x_range),
            ("y", self.y_range),
            ("z", self.z_range),
        ):
            if lo > hi:
                raise ValueError(f"{name}_range must satisfy lo <= hi, got ({lo}, {hi})")
        if min(self.nx, self.ny, self.nz) < 1:
            raise ValueError("grid counts must all be >= 1")
        if self.z_range[0] <= 0.0:
            raise ValueError("z range must be strictly positive (forward half-space)")

    @property
    def size(self) -> int:
        return self.nx * self.ny * self.nz

    def axis_points(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (
            np.linspace(self.x_range[0], self.x_range[1], self.nx),
            np.linspace(self.y_range[0], self.y_range[1], self.ny),
            np.linspace(self.z_range[0], self.z_range[1], self.nz),
        )

    def points(self) -> np.ndarray:
        """All grid positions, shape (size, 3), x index varying fastest."""
        xs, ys, zs = self.axis_points()
        x = np.tile(xs, self.ny * self.nz)
        y = np.tile(np.repeat(ys, self.nx), self.nz)
        z = np.repeat(zs, self.nx * self.ny)
        return np.column_stack([x, y, z])

    def indices(self) -> np.ndarray:
        """Integer (ix, iy, iz) triples matching points(), shape (size, 3)."""
        ix = np.tile(np.arange(self.nx), self.ny * self.nz)
        iy = np.tile(np.repeat(np.arange(self.ny), self.nx), self.nz)
        iz = np.repeat(np.arange(self.nz), self.nx * self.ny)
        return np.column_stack([ix, iy, iz])


@dataclass(frozen=True)
class Dictionary:
    """Noiseless unit-reflectivity fingerprints for every grid position."""

    grid: PositionGrid
    n_points: int  # frequency points per channel (M)
    positions: np.ndarray = field(repr=False)  # (size, 3)
    entries: np.ndarray = field(repr=False)  # (size, 2M) complex rows

    def __post_init__(self) -> None:
        positions = np.asarray(self.positions, dtype=float)
        entries = np.asarray(self.entries, dtype=np.complex128)
        if positions.shape != (self.grid.size, 3):
            raise ValueError("positions must have shape (grid.size, 3)")
        if entries.shape != (self.grid.size, 2 * self.n_points):
            raise ValueError("entries must have shape (grid.size, 2 * n_points)")
        positions.setflags(write=False)
        entries.setflags(write=False)
        object.__setattr__(self, "positions", positions)
        object.__setattr__(self, "entries", entries)

    @property
    def size(self) -> int:
        return self.grid.size


def _unit_fingerprint(
    position, plan: FrequencyPlan, model: DispersionModel, antenna: AntennaModel
) -> Fingerprint:
    scene = Scene(targets=(Target(tuple(position), 1.0 + 0.0j),), noise=_NOISELESS)
    return build_fingerprint(simulate_measurement(scene, plan, model, antenna))


def build_dictionary(
    grid: PositionGrid,
    plan: FrequencyPlan,
    model: DispersionModel,
    antenna: AntennaModel,
    workers: int | None = None,
) -> Dictionary:
    """Fingerprint every grid position (noiseless, unit reflectivity).

    Entries are deterministic and ordered by grid index regardless of
    ``workers``; each position is computed independently. Grid points must lie
    far enough inside the scanned field of view that at least one frequency
    point has non-vanishing gain.
    """
    positions = grid.points()

    def entry(pos: np.ndarray) -> np.ndarray:
        return _unit_fingerprint(pos, plan, model, antenna).vector

    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(entry, positions))
    else:
        rows = [entry(pos) for pos in positions]
    return Dictionary(
        grid=grid,
        n_points=plan.n_points,
        positions=positions,
        entries=np.vstack(rows),
    )


@dataclass(frozen=True)
class LocalizationResult:
    position: np.ndarray
    score: float
    index: int


def localize(meas: Measurement, dictionary: Dictionary) -> LocalizationResult:
    """Best-matching dictionary position for a measurement.

    Ties resolve to the lowest grid index. The score is the similarity of the
    measurement's fingerprint to the winning entry.
    """
    if meas.plan.n_points != dictionary.n_points:
        raise ValueError(
            f"measurement has {meas.plan.n_points} frequency points but the "
            f"dictionary was built with {dictionary.n_points}"
        )
    fp = build_fingerprint(meas)
    m = dictionary.n_points
    scores = 0.5 * (
        np.abs(dictionary.entries[:, :m] @ np.conj(fp.x_half))
        + np.abs(dictionary.entries[:, m:] @ np.conj(fp.y_half))
    )
    idx = int(np.argmax(scores))  # first maximum == lowest grid index
    return LocalizationResult(
        position=dictionary.positions[idx].copy(),
        score=float(scores[idx]),
        index=idx,
    )


def _displace(p0: np.ndarray, axis, delta: float) -> np.ndarray:
    if isinstance(axis, str):
        kind = axis.lower()
        x, y, z = p0
        if kind == "range":
            r = math.sqrt(x * x + y * y + z * z)
            if r == 0.0:
                raise GeometryError("range probe undefined at the origin")
            return p0 * (1.0 + delta / r)
        if kind == "azimuth":  # rotate in the x-z plane, range preserved
            c, s = math.cos(delta), math.sin(delta)
            return np.array([x * c + z * s, y, -x * s + z * c])
        if kind == "elevation":  # rotate in the y-z plane
            c, s = math.cos(delta), math.sin(delta)
            return np.array([x, y * c + z * s, -y * s + z * c])
        raise ValueError(f"unknown probe axis {axis!r}")
    direction = np.asarray(axis, dtype=float)
    if direction.shape != (3,) or not np.any(direction):
        raise ValueError("probe direction must be a nonzero 3-vector")
    return p0 + delta * direction / np.linalg.norm(direction)


def half_power_width(
    offsets: np.ndarray, values: np.ndarray, threshold: float = HALF_POWER
) -> float | None:
    """Smallest |offset| where a curve first drops below the threshold.

    The curve is walked outward from offset 0 separately on each sign, with
    linear interpolation between samples; the similarity at offset 0 is 1 by
    definition and anchors each branch. Returns None if no crossing occurs
    within the sampled span.
    """
    offsets = np.asarray(offsets, dtype=float)
    values = np.asarray(values, dtype=float)
    crossings = []
    for sign in (1.0, -1.0):
        mask = (offsets * sign) > 0.0
        branch_off = np.abs(offsets[mask])
        branch_val = values[mask]
        order = np.argsort(branch_off)
        prev_off, prev_val = 0.0, 1.0
        for off, val in zip(branch_off[order], branch_val[order]):
            if val < threshold:
                crossings.append(
                    prev_off + (prev_val - threshold) / (prev_val - val) * (off - prev_off)
                )
                break
            prev_off, prev_val = off, val
    return min(crossings) if crossings else None


@dataclass(frozen=True)
class AmbiguityCurve:
    offsets: np.ndarray
    similarities: np.ndarray
    width: float | None  # half-power width, same unit as offsets


def ambiguity_probe(
    p0,
    axis,
    offsets,
    plan: FrequencyPlan,
    model: DispersionModel,
    antenna: AntennaModel,
) -> AmbiguityCurve:
    """Similarity of F(p0) against fingerprints at displaced positions.

    ``axis`` is a unit direction vector (offsets in meters along it), one of
    the angular tokens "azimuth"/"elevation" (offsets in radians, rotating p0
    about the origin in the respective plane), or "range" (offsets in meters
    along the line of sight). Probed positions must stay in the forward
    half-space.
    """
    p0 = np.asarray(p0, dtype=float)
    offsets = np.asarray(offsets, dtype=float)
    ref = _unit_fingerprint(p0, plan, model, antenna)
    sims = np.empty(offsets.shape, dtype=float)
    for i, delta in enumerate(offsets):
        probe = _displace(p0, axis, float(delta))
        sims[i] = similarity(ref, _unit_fingerprint(probe, plan, model, antenna))
    return AmbiguityCurve(
        offsets=offsets, similarities=sims, width=half_power_width(offsets, sims)
    )


_FLOAT_FMT = "{:.9e}"


def export_dictionary(dictionary: Dictionary, path) -> None:
    """Write a dictionary as portable CSV (indices, position, re/im pairs)."""
    with open(Path(path), "w", newline="\n") as fh:
        fh.write(dictionary_to_csv(dictionary))


def dictionary_to_csv(dictionary: Dictionary) -> str:
    m = dictionary.n_points
    header = ["ix", "iy", "iz", "x", "y", "z"]
    for q in range(2 * m):
        header += [f"re_{q}", f"im_{q}"]
    out = io.StringIO()
    out.write(",".join(header) + "\n")
    for idx, pos, row in zip(
        dictionary.grid.indices(), dictionary.positions, dictionary.entries
    ):
        cells = [str(int(v)) for v in idx]
        cells += [_FLOAT_FMT.format(v) for v in pos]
        for v in row:
            cells.append(_FLOAT_FMT.format(v.real))
            cells.append(_FLOAT_FMT.format(v.imag))
        out.write(",".join(cells) + "\n")
    return out.getvalue()


def import_dictionary(path) -> Dictionary:
    """Load a dictionary CSV written by export_dictionary."""
    with open(Path(path), newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise ValueError(f"{path}: empty dictionary file")
    header = rows[0]
    if header[:6] != ["ix", "iy", "iz", "x", "y", "z"] or (len(header) - 6) % 4 != 0:
        raise ValueError(f"{path}: malformed dictionary header")
    m = (len(header) - 6) // 4
    indices, positions, entries = [], [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise ValueError(
                f"{path}: line {lineno}: expected {len(header)} fields, got {len(row)}"
            )
        try:
            indices.append([int(v) for v in row[:3]])
            positions.append([float(v) for v in row[3:6]])
            vals = np.array([float(v) for v in row[6:]])
        except ValueError as exc:
            raise ValueError(f"{path}: line {lineno}: {exc}") from None
        entries.append(vals[0::2] + 1j * vals[1::2])
    indices = np.asarray(indices, dtype=int)
    positions = np.asarray(positions, dtype=float)
    entries = np.vstack(entries)
    counts = indices.max(axis=0) + 1 if len(indices) else np.array([0, 0, 0])
    if len(indices) != counts.prod():
        raise ValueError(f"{path}: dictionary rows do not fill the index grid")
    grid = PositionGrid(
        x_range=(positions[:, 0].min(), positions[:, 0].max()),
        y_range=(positions[:, 1].min(), positions[:, 1].max()),
        z_range=(positions[:, 2].min(), positions[:, 2].max()),
        nx=int(counts[0]),
        ny=int(counts[1]),
        nz=int(counts[2]),
    )
    for half in (entries[:, :m], entries[:, m:]):
        norms = np.linalg.norm(half, axis=1)
        if np.any(np.abs(norms - 1.0) > 1e-6):
            raise ValueError(f"{path}: dictionary halves are not unit-norm")
    return Dictionary(grid=grid, n_points=m, positions=positions, entries=entries)
