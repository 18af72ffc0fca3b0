"""Command-line surface: JSON config ingestion and experiment orchestration.

Verbs: simulate, dict, localize, probe, compare, sweep. All commands are
deterministic functions of (config file, flags): fixed seeds give
byte-identical output files. Exit codes: 0 success, 2 configuration/parse
error, 3 runtime or numerical error.

Config files are a single JSON document with unit-suffixed keys (`*_hz`,
`*_m`, `*_s`, `*_deg`); unknown keys are rejected to catch typos. Angles in
files and flags are degrees; internal math is radians.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from sweepsense import archcomp
from sweepsense.core import (
    AliasingError,
    BandError,
    ChirpConfig,
    DegenerateMeasurementError,
    FrequencyPlan,
    GeometryError,
    Measurement,
    NoiseConfig,
    Scene,
    Target,
    frequency_grid,
)
from sweepsense.dispersion import (
    DispersionModel,
    LinearSineDispersion,
    LookupTableDispersion,
)
from sweepsense.fingerprint import (
    PositionGrid,
    ambiguity_probe,
    build_dictionary,
    dictionary_to_csv,
    export_dictionary,
    import_dictionary,
    localize,
)
from sweepsense.streams import derive_seed
from sweepsense.synth import AntennaModel, simulate_measurement

_FMT = "{:.9e}"


class ConfigError(ValueError):
    """Invalid or inconsistent experiment configuration."""


# ---------------------------------------------------------------------------
# config parsing


def _check_keys(name: str, obj: dict, required: set[str], optional: set[str] = frozenset()):
    if not isinstance(obj, dict):
        raise ConfigError(f"section '{name}' must be a JSON object")
    unknown = set(obj) - required - set(optional)
    if unknown:
        raise ConfigError(f"section '{name}': unknown key(s) {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise ConfigError(f"section '{name}': missing key(s) {sorted(missing)}")


def _number(name: str, key: str, value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"section '{name}': key '{key}' must be a number")
    return float(value)


def _integer(name: str, key: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"section '{name}': key '{key}' must be an integer")
    return value


def load_config(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    try:
        cfg = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(cfg, dict):
        raise ConfigError(f"{path}: top level must be a JSON object")
    known = {"plan", "dispersion", "antenna", "chirp", "scene", "grid", "architectures"}
    unknown = set(cfg) - known
    if unknown:
        raise ConfigError(f"{path}: unknown section(s) {sorted(unknown)}")
    return cfg


def _section(cfg: dict, name: str) -> dict:
    if name not in cfg:
        raise ConfigError(f"config is missing the required '{name}' section")
    return cfg[name]


def parse_plan(cfg: dict) -> FrequencyPlan:
    sec = _section(cfg, "plan")
    _check_keys("plan", sec, {"f_min_hz", "f_max_hz", "n_points"})
    try:
        return FrequencyPlan(
            f_min=_number("plan", "f_min_hz", sec["f_min_hz"]),
            f_max=_number("plan", "f_max_hz", sec["f_max_hz"]),
            n_points=_integer("plan", "n_points", sec["n_points"]),
        )
    except ValueError as exc:
        raise ConfigError(f"plan: {exc}") from None


def parse_dispersion(cfg: dict, plan: FrequencyPlan, base_dir: Path) -> DispersionModel:
    sec = _section(cfg, "dispersion")
    if not isinstance(sec, dict) or "kind" not in sec:
        raise ConfigError("dispersion: missing 'kind'")
    kind = sec["kind"]
    try:
        if kind == "linear_sine":
            _check_keys("dispersion", sec, {"kind", "theta_max_deg"}, {"theta_min_deg"})
            theta_max = math.radians(_number("dispersion", "theta_max_deg", sec["theta_max_deg"]))
            theta_min = (
                math.radians(_number("dispersion", "theta_min_deg", sec["theta_min_deg"]))
                if "theta_min_deg" in sec
                else None
            )
            return LinearSineDispersion.for_plan(plan, theta_max=theta_max, theta_min=theta_min)
        if kind == "lookup_table":
            _check_keys("dispersion", sec, {"kind", "table_path"})
            return LookupTableDispersion.from_csv(base_dir / sec["table_path"])
    except (ValueError, OSError) as exc:
        raise ConfigError(f"dispersion: {exc}") from None
    raise ConfigError(f"dispersion: unknown kind {kind!r}")


def parse_antenna(cfg: dict) -> AntennaModel:
    sec = cfg.get("antenna", {})
    _check_keys("antenna", sec, set(), {"length_m", "two_way"})
    length = _number("antenna", "length_m", sec.get("length_m", 0.12))
    two_way = sec.get("two_way", True)
    if not isinstance(two_way, bool):
        raise ConfigError("antenna: 'two_way' must be a boolean")
    try:
        return AntennaModel(length=length, two_way=two_way)
    except ValueError as exc:
        raise ConfigError(f"antenna: {exc}") from None


def parse_chirp(cfg: dict, plan: FrequencyPlan) -> ChirpConfig:
    sec = cfg.get("chirp")
    if sec is None:
        return ChirpConfig.for_plan(plan)
    _check_keys(
        "chirp",
        sec,
        {"duration_s", "guard_s", "n_samples", "sample_rate_hz"},
        {"slope_hz_per_s"},
    )
    duration = _number("chirp", "duration_s", sec["duration_s"])
    try:
        if "slope_hz_per_s" in sec:
            return ChirpConfig(
                duration=duration,
                guard=_number("chirp", "guard_s", sec["guard_s"]),
                slope=_number("chirp", "slope_hz_per_s", sec["slope_hz_per_s"]),
                n_samples=_integer("chirp", "n_samples", sec["n_samples"]),
                sample_rate=_number("chirp", "sample_rate_hz", sec["sample_rate_hz"]),
            )
        return ChirpConfig(
            duration=duration,
            guard=_number("chirp", "guard_s", sec["guard_s"]),
            slope=plan.step / duration,
            n_samples=_integer("chirp", "n_samples", sec["n_samples"]),
            sample_rate=_number("chirp", "sample_rate_hz", sec["sample_rate_hz"]),
        )
    except ValueError as exc:
        raise ConfigError(f"chirp: {exc}") from None


_TARGET_KEYS_REQ = {"x_m", "y_m", "z_m"}
_TARGET_KEYS_OPT = {
    "alpha_re",
    "alpha_im",
    "alpha_x_re",
    "alpha_x_im",
    "alpha_y_re",
    "alpha_y_im",
}


def _parse_target(i: int, sec: dict) -> Target:
    name = f"scene.targets[{i}]"
    _check_keys(name, sec, _TARGET_KEYS_REQ, _TARGET_KEYS_OPT)
    pos = tuple(_number(name, k, sec[k]) for k in ("x_m", "y_m", "z_m"))
    alpha = complex(
        _number(name, "alpha_re", sec.get("alpha_re", 1.0)),
        _number(name, "alpha_im", sec.get("alpha_im", 0.0)),
    )
    refl_x = alpha
    refl_y = alpha
    if "alpha_x_re" in sec or "alpha_x_im" in sec:
        refl_x = complex(
            _number(name, "alpha_x_re", sec.get("alpha_x_re", alpha.real)),
            _number(name, "alpha_x_im", sec.get("alpha_x_im", alpha.imag)),
        )
    if "alpha_y_re" in sec or "alpha_y_im" in sec:
        refl_y = complex(
            _number(name, "alpha_y_re", sec.get("alpha_y_re", alpha.real)),
            _number(name, "alpha_y_im", sec.get("alpha_y_im", alpha.imag)),
        )
    try:
        return Target(position=pos, refl_x=refl_x, refl_y=refl_y)
    except GeometryError as exc:
        raise ConfigError(f"{name}: {exc}") from None


def parse_scene(cfg: dict, seed_override: int | None = None) -> Scene:
    sec = _section(cfg, "scene")
    _check_keys("scene", sec, {"targets", "snr_db", "seed"})
    if not isinstance(sec["targets"], list):
        raise ConfigError("scene: 'targets' must be a list")
    targets = tuple(_parse_target(i, t) for i, t in enumerate(sec["targets"]))
    snr = sec["snr_db"]
    if snr == "noiseless":
        snr_db = None
    else:
        snr_db = _number("scene", "snr_db", snr)
    seed = _integer("scene", "seed", sec["seed"])
    if seed_override is not None:
        seed = seed_override
    try:
        return Scene(targets=targets, noise=NoiseConfig(snr_db=snr_db, seed=seed))
    except ValueError as exc:
        raise ConfigError(f"scene: {exc}") from None


def parse_grid(cfg: dict) -> PositionGrid:
    sec = _section(cfg, "grid")
    keys = {"x_min_m", "x_max_m", "nx", "y_min_m", "y_max_m", "ny", "z_min_m", "z_max_m", "nz"}
    _check_keys("grid", sec, keys)
    try:
        return PositionGrid(
            x_range=(_number("grid", "x_min_m", sec["x_min_m"]),
                     _number("grid", "x_max_m", sec["x_max_m"])),
            y_range=(_number("grid", "y_min_m", sec["y_min_m"]),
                     _number("grid", "y_max_m", sec["y_max_m"])),
            z_range=(_number("grid", "z_min_m", sec["z_min_m"]),
                     _number("grid", "z_max_m", sec["z_max_m"])),
            nx=_integer("grid", "nx", sec["nx"]),
            ny=_integer("grid", "ny", sec["ny"]),
            nz=_integer("grid", "nz", sec["nz"]),
        )
    except ValueError as exc:
        raise ConfigError(f"grid: {exc}") from None


_ARCH_KEYS_REQ = {
    "name",
    "rf_chains",
    "physical_size_m",
    "bandwidth_hz",
    "n_samples",
    "aperture_kind",
    "f_ref_hz",
    "power_mw",
    "cost_usd",
    "fov_deg",
}
_ARCH_KEYS_OPT = {"eta_reference", "observability", "noise_rejection"}


def parse_architectures(cfg: dict) -> list[archcomp.ArchitectureSpec]:
    sec = _section(cfg, "architectures")
    if not isinstance(sec, list) or not sec:
        raise ConfigError("architectures: must be a non-empty list")
    specs = []
    for i, entry in enumerate(sec):
        name = f"architectures[{i}]"
        _check_keys(name, entry, _ARCH_KEYS_REQ, _ARCH_KEYS_OPT)
        try:
            specs.append(
                archcomp.ArchitectureSpec(
                    name=str(entry["name"]),
                    rf_chains=_integer(name, "rf_chains", entry["rf_chains"]),
                    physical_size=_number(name, "physical_size_m", entry["physical_size_m"]),
                    bandwidth=_number(name, "bandwidth_hz", entry["bandwidth_hz"]),
                    n_samples=_integer(name, "n_samples", entry["n_samples"]),
                    aperture_kind=str(entry["aperture_kind"]),
                    f_ref=_number(name, "f_ref_hz", entry["f_ref_hz"]),
                    power_mw=_number(name, "power_mw", entry["power_mw"]),
                    cost_usd=_number(name, "cost_usd", entry["cost_usd"]),
                    fov_deg=_number(name, "fov_deg", entry["fov_deg"]),
                    eta_reference=(
                        _number(name, "eta_reference", entry["eta_reference"])
                        if "eta_reference" in entry
                        else None
                    ),
                    observability=entry.get("observability"),
                    noise_rejection=entry.get("noise_rejection"),
                )
            )
        except ValueError as exc:
            raise ConfigError(f"{name}: {exc}") from None
    return specs


# ---------------------------------------------------------------------------
# measurement CSV

_MEAS_HEADER = "m,f_hz,theta_deg,sx_re,sx_im,sy_re,sy_im"


def measurement_to_csv(meas: Measurement, model: DispersionModel) -> str:
    freqs = frequency_grid(meas.plan)
    thetas = np.degrees(np.atleast_1d(model.beam_angle(freqs)))
    lines = [_MEAS_HEADER]
    for i in range(meas.plan.n_points):
        lines.append(
            ",".join(
                [str(i)]
                + [
                    _FMT.format(v)
                    for v in (
                        freqs[i],
                        thetas[i],
                        meas.s_x[i].real,
                        meas.s_x[i].imag,
                        meas.s_y[i].real,
                        meas.s_y[i].imag,
                    )
                ]
            )
        )
    return "\n".join(lines) + "\n"


def read_measurement_csv(path, plan: FrequencyPlan) -> Measurement:
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read measurement {path}: {exc}") from None
    if not lines or lines[0].strip() != _MEAS_HEADER:
        raise ConfigError(f"{path}: line 1: expected header '{_MEAS_HEADER}'")
    rows = [ln for ln in lines[1:] if ln.strip()]
    if len(rows) != plan.n_points:
        raise ConfigError(
            f"{path}: has {len(rows)} data rows but the plan expects {plan.n_points}"
        )
    s_x = np.zeros(plan.n_points, dtype=np.complex128)
    s_y = np.zeros(plan.n_points, dtype=np.complex128)
    for lineno, line in enumerate(rows, start=2):
        cells = line.split(",")
        if len(cells) != 7:
            raise ConfigError(f"{path}: line {lineno}: expected 7 fields, got {len(cells)}")
        try:
            i = int(cells[0])
            vals = [float(c) for c in cells[1:]]
        except ValueError:
            raise ConfigError(f"{path}: line {lineno}: non-numeric field") from None
        if not 0 <= i < plan.n_points:
            raise ConfigError(f"{path}: line {lineno}: index {i} out of range")
        s_x[i] = vals[2] + 1j * vals[3]
        s_y[i] = vals[4] + 1j * vals[5]
    return Measurement(plan, s_x, s_y)


# ---------------------------------------------------------------------------
# SNR sweep


@dataclass(frozen=True)
class SweepPoint:
    snr_db: float | None  # None means noiseless
    rmse: float
    errors: tuple[float, ...]

    @property
    def label(self) -> str:
        return "noiseless" if self.snr_db is None else _FMT.format(self.snr_db)


def run_sweep(
    plan: FrequencyPlan,
    model: DispersionModel,
    antenna: AntennaModel,
    scene: Scene,
    grid: PositionGrid,
    snrs: list[float | None],
    trials: int,
    workers: int = 1,
) -> list[SweepPoint]:
    """Monte-Carlo localization RMSE per SNR point.

    Trial noise seeds derive from (scene seed, snr index, trial index), so a
    given trial's outcome never depends on trial count, ordering, or workers.
    The first configured target is the ground truth.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not scene.targets:
        raise ValueError("sweep needs at least one target as ground truth")
    dictionary = build_dictionary(grid, plan, model, antenna, workers=workers)
    truth = np.asarray(scene.targets[0].position)

    def one_trial(snr_idx: int, snr: float | None, trial: int) -> float:
        noise = NoiseConfig(
            snr_db=snr, seed=derive_seed(scene.noise.seed, snr_idx, trial)
        )
        meas = simulate_measurement(replace(scene, noise=noise), plan, model, antenna)
        result = localize(meas, dictionary)
        return float(np.linalg.norm(result.position - truth))

    points = []
    for snr_idx, snr in enumerate(snrs):
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                errors = list(
                    pool.map(lambda t: one_trial(snr_idx, snr, t), range(trials))
                )
        else:
            errors = [one_trial(snr_idx, snr, t) for t in range(trials)]
        rmse = math.sqrt(sum(e * e for e in errors) / trials)
        points.append(SweepPoint(snr_db=snr, rmse=rmse, errors=tuple(errors)))
    return points


def sweep_to_csv(points: list[SweepPoint], trials: int) -> str:
    lines = ["snr_db,rmse_m,trials"]
    for p in points:
        lines.append(f"{p.label},{_FMT.format(p.rmse)},{trials}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands


def _write_output(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_simulate(args) -> int:
    cfg = load_config(args.config)
    plan = parse_plan(cfg)
    model = parse_dispersion(cfg, plan, Path(args.config).parent)
    antenna = parse_antenna(cfg)
    scene = parse_scene(cfg, seed_override=args.seed)
    meas = simulate_measurement(scene, plan, model, antenna)
    _write_output(args.out, measurement_to_csv(meas, model))
    return 0


def cmd_dict(args) -> int:
    cfg = load_config(args.config)
    plan = parse_plan(cfg)
    model = parse_dispersion(cfg, plan, Path(args.config).parent)
    antenna = parse_antenna(cfg)
    grid = parse_grid(cfg)
    dictionary = build_dictionary(grid, plan, model, antenna, workers=args.workers)
    if args.out is None or args.out == "-":
        sys.stdout.write(dictionary_to_csv(dictionary))
    else:
        export_dictionary(dictionary, args.out)
    return 0


def cmd_localize(args) -> int:
    cfg = load_config(args.config)
    plan = parse_plan(cfg)
    if args.dict is not None:
        try:
            dictionary = import_dictionary(args.dict)
        except (OSError, ValueError) as exc:
            raise ConfigError(str(exc)) from None
        if dictionary.n_points != plan.n_points:
            raise ConfigError(
                f"dictionary has {dictionary.n_points} frequency points but the "
                f"plan expects {plan.n_points}"
            )
    else:
        model = parse_dispersion(cfg, plan, Path(args.config).parent)
        antenna = parse_antenna(cfg)
        grid = parse_grid(cfg)
        dictionary = build_dictionary(grid, plan, model, antenna, workers=args.workers)
    meas = read_measurement_csv(args.measurement, plan)
    result = localize(meas, dictionary)
    payload = {
        "estimate": [float(v) for v in result.position],
        "score": result.score,
        "grid_index": result.index,
        "dictionary_size": dictionary.size,
    }
    _write_output(args.out, _json_dumps(payload))
    return 0


def _parse_vector(text: str, flag: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ConfigError(f"{flag}: expected 'x,y,z', got {text!r}")
    try:
        return tuple(float(p) for p in parts)  # type: ignore[return-value]
    except ValueError:
        raise ConfigError(f"{flag}: non-numeric component in {text!r}") from None


def cmd_probe(args) -> int:
    cfg = load_config(args.config)
    plan = parse_plan(cfg)
    model = parse_dispersion(cfg, plan, Path(args.config).parent)
    antenna = parse_antenna(cfg)
    p0 = _parse_vector(args.p0, "--p0")
    if args.steps < 3:
        raise ConfigError("--steps must be >= 3")
    if args.span <= 0:
        raise ConfigError("--span must be positive")
    angular = args.axis in ("azimuth", "elevation")
    axis = args.axis if args.axis in ("azimuth", "elevation", "range") else _parse_vector(
        args.axis, "--axis"
    )
    # Flags and files use degrees for angular offsets; the probe works in rad.
    span = math.radians(args.span) if angular else args.span
    offsets = np.linspace(-span, span, args.steps)
    try:
        curve = ambiguity_probe(p0, axis, offsets, plan, model, antenna)
    except GeometryError as exc:
        raise ConfigError(f"probe geometry: {exc}") from None
    file_offsets = np.degrees(curve.offsets) if angular else curve.offsets
    lines = ["offset,similarity"]
    for off, simval in zip(file_offsets, curve.similarities):
        lines.append(f"{_FMT.format(off)},{_FMT.format(simval)}")
    _write_output(args.out, "\n".join(lines) + "\n")
    summary = {
        "axis": args.axis,
        "p0_m": list(p0),
        "offset_unit": "deg" if angular else "m",
        "span": args.span,
        "steps": args.steps,
        "half_power_width": (
            math.degrees(curve.width) if (angular and curve.width is not None) else curve.width
        ),
    }
    if angular:
        summary["half_power_width_rad"] = curve.width
    sys.stdout.write(_json_dumps(summary))
    return 0


def cmd_compare(args) -> int:
    cfg = load_config(args.config)
    specs = parse_architectures(cfg)
    report = archcomp.compare(specs, r_query=args.r_query)
    if args.out is not None:
        _write_output(args.out, _json_dumps(report.to_dict()))
    sys.stdout.write(report.to_text())
    return 0


def cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    plan = parse_plan(cfg)
    model = parse_dispersion(cfg, plan, Path(args.config).parent)
    antenna = parse_antenna(cfg)
    scene = parse_scene(cfg, seed_override=args.seed)
    grid = parse_grid(cfg)
    snrs: list[float | None] = []
    for token in args.snr.split(","):
        token = token.strip()
        if token == "noiseless":
            snrs.append(None)
        else:
            try:
                snrs.append(float(token))
            except ValueError:
                raise ConfigError(f"--snr: bad value {token!r}") from None
    if not snrs:
        raise ConfigError("--snr: need at least one value")
    if args.trials < 1:
        raise ConfigError("--trials must be >= 1")
    try:
        points = run_sweep(
            plan, model, antenna, scene, grid, snrs, args.trials, workers=args.workers
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    _write_output(args.out, sweep_to_csv(points, args.trials))
    return 0


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sweepsense",
        description="Frequency-scanned virtual-aperture near-field sensing simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, out_default=None) -> None:
        p.add_argument("--config", required=True, help="experiment config JSON")
        p.add_argument("--out", default=out_default, help="output path ('-' = stdout)")
        p.add_argument("--seed", type=int, default=None, help="override the scene seed")

    p = sub.add_parser("simulate", help="synthesize a dual-channel measurement CSV")
    common(p, out_default="-")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("dict", help="build and export a fingerprint dictionary CSV")
    common(p, out_default="-")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_dict)

    p = sub.add_parser("localize", help="match a measurement CSV against a dictionary")
    common(p, out_default="-")
    p.add_argument("--measurement", required=True, help="measurement CSV path")
    p.add_argument("--dict", default=None, help="reuse an exported dictionary CSV")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("probe", help="trace an ambiguity curve around a position")
    common(p, out_default="-")
    p.add_argument("--p0", default="0,0,3", help="reference position x,y,z in meters")
    p.add_argument(
        "--axis",
        default="azimuth",
        help="azimuth | elevation | range | ux,uy,uz direction vector",
    )
    p.add_argument("--span", type=float, required=True,
                   help="max |offset| (deg for angular axes, m otherwise)")
    p.add_argument("--steps", type=int, default=201)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("compare", help="architecture comparison report")
    common(p)
    p.add_argument("--r-query", type=float, default=3.0, help="cell-volume range (m)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sweep", help="Monte-Carlo localization RMSE vs SNR")
    common(p, out_default="-")
    p.add_argument("--snr", required=True,
                   help="comma list of SNR dB values; 'noiseless' allowed")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        GeometryError,
        BandError,
        AliasingError,
        DegenerateMeasurementError,
        ValueError,
        ArithmeticError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
