"""Config-driven command line: figure-recipe presets, runs, spectra, sweeps.

Exit codes: 0 success, 2 config error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
try:
    import tomllib
except ModuleNotFoundError:  # 3.10: stdlib tomllib arrived in 3.11
    import tomli as tomllib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from pathlib import Path

import numpy as np

from .coin import CoinOperator, Ordering, coin_from_name, dft_coin, hadamard2_coin
from .evolve import Family, FieldPhase, WalkSpec, run
from .observe import WidthSeries, detect_periods, widths, write_width_csv
from .spectrum import (BandGrid, band_grid_1d, band_grid_alternate,
                       band_grid_2d, dft_dispersion_residual, dispersion_dft,
                       eigenphases, momentum_unitary_1d,
                       momentum_unitary_alternate, momentum_unitary_2d,
                       phase_set_distance, write_band_csv)
from .state import write_snapshot_csv
from . import __version__

NORM_TOL = 1e-10


class ConfigError(Exception):
    pass


class NumericalFailure(Exception):
    pass


# --------------------------------------------------------------- value parsing

NAMED_STATES = {
    "up": (1.0 + 0j, 0j),
    "circular": (1 / math.sqrt(2) + 0j, 1j / math.sqrt(2)),
    "grover-sym": (0.5 + 0j, -0.5 + 0j, -0.5 + 0j, 0.5 + 0j),
    "hadamard-sym": (0.5 + 0j, 0.5j, 0.5j, -0.5 + 0j),
}


def parse_phase(value) -> FieldPhase:
    """'2pi*q/p' is an exact rational field; bare numbers are radians."""
    if isinstance(value, FieldPhase):
        return value
    if isinstance(value, (int, float)):
        return FieldPhase.zero() if value == 0 else FieldPhase.real(float(value))
    text = str(value).replace(" ", "")
    sign = 1
    if text[:1] in ("+", "-"):
        sign = -1 if text[0] == "-" else 1
        text = text[1:]
    if text.startswith("2pi"):
        rest = text[3:]
        if rest == "":
            return FieldPhase.zero()
        if not rest.startswith("*"):
            raise ConfigError(f"bad phase {value!r}: expected 2pi*q/p")
        try:
            frac = Fraction(rest[1:]) * sign
        except (ValueError, ZeroDivisionError) as e:
            raise ConfigError(f"bad phase {value!r}: {e}") from None
        return FieldPhase.rational(frac.numerator, frac.denominator)
    try:
        v = float(text)
    except ValueError:
        raise ConfigError(f"bad phase {value!r}: expected 2pi*q/p or radians") from None
    return FieldPhase.zero() if v == 0 else FieldPhase.real(sign * v)


def format_phase(phase: FieldPhase):
    if phase.kind == "rational":
        return "0" if phase.q == 0 else f"2pi*{phase.q}/{phase.p}"
    return phase.value


def parse_coin_state(value) -> tuple[complex, ...]:
    if isinstance(value, str) and "," not in value:
        try:
            return NAMED_STATES[value]
        except KeyError:
            raise ConfigError(f"unknown coin state {value!r}; named states: "
                              f"{', '.join(sorted(NAMED_STATES))}") from None
    items = value.split(",") if isinstance(value, str) else list(value)
    out = []
    for item in items:
        try:
            if isinstance(item, str):
                # accept mathematician's i alongside python's j
                out.append(complex(item.replace(" ", "").replace("i", "j")))
            else:
                out.append(complex(item))
        except ValueError:
            raise ConfigError(f"bad coin-state component {item!r}") from None
    return tuple(out)


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _fmt_complex(z: complex) -> str:
    return f"{_fmt(z.real)}{'+' if z.imag >= 0 else '-'}{_fmt(abs(z.imag))}j"


# --------------------------------------------------------------- configuration

_RUN_KEYS = {"family", "steps", "coin_state", "phi_x", "phi_y", "theta",
             "alpha", "beta", "theta_x", "theta_y", "delta_theta", "coin",
             "snapshot_amplitudes", "max_period"}
_OUTPUT_KEYS = {"dir", "label"}
_SPECTRUM_KEYS = {"grid_n", "p", "field_axis", "report_oracle"}
_SWEEP_KEYS = {"phi_x", "phi_y", "theta", "theta_x", "theta_y", "delta_theta",
               "workers"}


@dataclass
class RunConfig:
    """A fully resolved run/spectrum recipe (one output directory entry)."""

    family: Family
    steps: int
    coin_state: tuple[complex, ...]
    phi_x: FieldPhase
    phi_y: FieldPhase
    theta: float
    alpha: float
    beta: float
    theta_x: float
    theta_y: float
    coin: str | None
    label: str
    outdir: Path
    snapshot_amplitudes: bool
    max_period: int
    grid_n: int
    p: int | None
    field_axis: str
    report_oracle: bool

    def walk_spec(self) -> WalkSpec:
        custom = None
        if self.family is Family.CUSTOM_4COIN:
            if self.coin is None:
                raise ConfigError("family custom-4coin needs a coin name")
            base = coin_from_name(self.coin, self.alpha, self.beta, self.theta)
            if base.dim != 4:
                raise ConfigError(f"coin {self.coin!r} is not 4-dimensional")
            # entries are taken at face value under the cross shift labels
            custom = CoinOperator(base.entries, Ordering.XY_CROSS)
        spec = WalkSpec(family=self.family, steps=self.steps,
                        coin_state=np.array(self.coin_state),
                        phi_x=self.phi_x, phi_y=self.phi_y, theta=self.theta,
                        alpha=self.alpha, beta=self.beta, theta_x=self.theta_x,
                        theta_y=self.theta_y, custom_coin=custom)
        try:
            spec.validate()
        except ValueError as e:
            raise ConfigError(str(e)) from None
        return spec

    def manifest(self) -> dict:
        return {
            "version": __version__,
            "run": {
                "family": self.family.value,
                "steps": self.steps,
                "coin_state": [_fmt_complex(z) for z in self.coin_state],
                "phi_x": format_phase(self.phi_x),
                "phi_y": format_phase(self.phi_y),
                "theta": self.theta, "alpha": self.alpha, "beta": self.beta,
                "theta_x": self.theta_x, "theta_y": self.theta_y,
                "coin": self.coin,
                "snapshot_amplitudes": self.snapshot_amplitudes,
                "max_period": self.max_period,
            },
            "output": {"dir": str(self.outdir), "label": self.label},
            "spectrum": {"grid_n": self.grid_n, "p": self.p,
                         "field_axis": self.field_axis,
                         "report_oracle": self.report_oracle},
        }


_DEFAULTS = {"family": "one-d", "steps": 100, "coin_state": "up",
             "phi_x": "0", "phi_y": "0", "theta": math.pi / 4, "alpha": 0.0,
             "beta": 0.0, "theta_x": math.pi / 4, "theta_y": math.pi / 4,
             "delta_theta": None, "coin": None, "snapshot_amplitudes": False,
             "max_period": 60}
_SPEC_DEFAULTS = {"grid_n": 101, "p": None, "field_axis": "x",
                  "report_oracle": False}


def build_config(run_map: dict, output_map: dict, spectrum_map: dict) -> RunConfig:
    for name, m, allowed in (("run", run_map, _RUN_KEYS),
                             ("output", output_map, _OUTPUT_KEYS),
                             ("spectrum", spectrum_map, _SPECTRUM_KEYS)):
        unknown = set(m) - allowed - {"label"}
        if unknown:
            raise ConfigError(f"unknown [{name}] keys: {', '.join(sorted(unknown))}")
    r = {**_DEFAULTS, **{k: v for k, v in run_map.items() if v is not None}}
    s = {**_SPEC_DEFAULTS, **{k: v for k, v in spectrum_map.items() if v is not None}}
    try:
        family = Family(r["family"])
    except ValueError:
        names = ", ".join(f.value for f in Family)
        raise ConfigError(f"unknown family {r['family']!r}; one of {names}") from None
    if r["delta_theta"] is not None:
        dt = float(r["delta_theta"])
        r["theta_x"] = math.pi / 4 + dt
        r["theta_y"] = math.pi / 4 - dt
    steps = int(r["steps"])
    if steps < 0:
        raise ConfigError("steps must be >= 0")
    state = parse_coin_state(r["coin_state"])
    if abs(np.linalg.norm(np.array(state)) - 1.0) > 1e-12:
        raise ConfigError("coin state is not normalized")
    p = s["p"]
    if p is not None:
        p = int(p)
        if p < 1:
            raise ConfigError("spectrum p must be >= 1")
    if s["field_axis"] not in ("x", "y"):
        raise ConfigError("field_axis must be 'x' or 'y'")
    outdir = Path(output_map.get("dir") or os.environ.get("EQWALK_OUTDIR") or ".")
    label = output_map.get("label") or run_map.get("label") or "run"
    return RunConfig(
        family=family, steps=steps, coin_state=state,
        phi_x=parse_phase(r["phi_x"]), phi_y=parse_phase(r["phi_y"]),
        theta=float(r["theta"]), alpha=float(r["alpha"]), beta=float(r["beta"]),
        theta_x=float(r["theta_x"]), theta_y=float(r["theta_y"]),
        coin=r["coin"], label=str(label), outdir=outdir,
        snapshot_amplitudes=bool(r["snapshot_amplitudes"]),
        max_period=int(r["max_period"]), grid_n=int(s["grid_n"]), p=p,
        field_axis=s["field_axis"], report_oracle=bool(s["report_oracle"]))


def load_config_file(path: str) -> dict:
    p = Path(path)
    if not p.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        if p.suffix == ".json":
            with open(p) as fh:
                data = json.load(fh)
        else:
            with open(p, "rb") as fh:
                data = tomllib.load(fh)
    except (tomllib.TOMLDecodeError, json.JSONDecodeError) as e:
        raise ConfigError(f"{path}: {e}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a table")
    unknown = set(data) - {"run", "output", "spectrum", "sweep", "version"}
    if unknown:
        raise ConfigError(f"{path}: unknown sections: {', '.join(sorted(unknown))}")
    return data


# --------------------------------------------------------------------- presets

_F120 = "2pi*1/120"


def _alt(label, dt, steps, phi_y="0"):
    return {"label": label, "family": "alternate-2d", "steps": steps,
            "coin_state": "circular", "phi_x": _F120, "phi_y": phi_y,
            "delta_theta": dt}


PRESETS: dict[str, list[dict]] = {
    "fig2": [
        {"label": "fig2a", "family": "grover-2d", "steps": 600,
         "coin_state": "grover-sym"},
        {"label": "fig2b", "family": "grover-2d", "steps": 600,
         "coin_state": "grover-sym", "phi_x": _F120},
        {"label": "fig2c", "family": "grover-2d", "steps": 1000,
         "coin_state": "grover-sym", "phi_x": _F120, "phi_y": _F120},
    ],
    "fig4": [_alt("fig4dt0", 0.0, 1000), _alt("fig4dt0.1", 0.1, 1000),
             _alt("fig4dt0.2", 0.2, 1000)],
    "fig5": [_alt("fig5dt0", 0.0, 600, "2pi*1/240"),
             _alt("fig5dt0.1", 0.1, 600, "2pi*1/240"),
             _alt("fig5dt0.2", 0.2, 600, "2pi*1/240")],
    "fig6": [{"label": "fig6", "family": "dft-2d", "steps": 600,
              "coin_state": "hadamard-sym"}],
    "fig7": [
        {"label": "fig7a", "family": "dft-2d", "steps": 600,
         "coin_state": "hadamard-sym", "phi_x": _F120},
        {"label": "fig7b", "family": "dft-2d", "steps": 600,
         "coin_state": "hadamard-sym", "phi_x": _F120, "phi_y": _F120},
    ],
    "fig9": [{"label": "fig9", "family": "hadamard-2d", "steps": 1000,
              "coin_state": "hadamard-sym", "phi_x": _F120}],
    "fig10": [{"label": "fig10", "family": "hadamard-2d", "steps": 1000,
               "coin_state": "hadamard-sym", "phi_x": _F120, "phi_y": _F120}],
}

_PRESET_ENTRIES = {e["label"]: e for group in PRESETS.values() for e in group}


def preset_entries(name: str) -> list[dict]:
    if name in PRESETS:
        return [dict(e) for e in PRESETS[name]]
    if name in _PRESET_ENTRIES:
        return [dict(_PRESET_ENTRIES[name])]
    raise ConfigError(f"unknown preset {name!r}; see 'eqwalk presets list'")


# ------------------------------------------------------------------ resolution

_FLAG_TO_RUN = {"family": "family", "steps": "steps", "coin_state": "coin_state",
                "phi_x": "phi_x", "phi_y": "phi_y", "theta": "theta",
                "alpha": "alpha", "beta": "beta", "theta_x": "theta_x",
                "theta_y": "theta_y", "delta_theta": "delta_theta",
                "coin": "coin", "snapshot_amplitudes": "snapshot_amplitudes",
                "max_period": "max_period"}
_FLAG_TO_SPECTRUM = {"grid_n": "grid_n", "p": "p", "field_axis": "field_axis",
                     "report_oracle": "report_oracle"}


def resolve_entries(args) -> list[RunConfig]:
    """Defaults < preset entry < config file < command-line flags."""
    file_cfg = load_config_file(args.config) if args.config else {}
    bases = preset_entries(args.preset) if args.preset else [{}]
    out = []
    for base in bases:
        run_map = dict(base)
        run_map.update(file_cfg.get("run", {}))
        output_map = dict(file_cfg.get("output", {}))
        spectrum_map = dict(file_cfg.get("spectrum", {}))
        for flag, key in _FLAG_TO_RUN.items():
            v = getattr(args, flag, None)
            if v is not None:
                run_map[key] = v
        for flag, key in _FLAG_TO_SPECTRUM.items():
            v = getattr(args, flag, None)
            if v is not None:
                spectrum_map[key] = v
        if getattr(args, "outdir", None):
            output_map["dir"] = args.outdir
        if getattr(args, "label", None):
            if len(bases) > 1:
                raise ConfigError("--label conflicts with a multi-entry preset")
            output_map["label"] = args.label
        out.append(build_config(run_map, output_map, spectrum_map))
    return out


# ---------------------------------------------------------------- run command

def run_entry(cfg: RunConfig) -> Path:
    """Execute one run entry; returns the entry output directory."""
    spec = cfg.walk_spec()
    try:
        result = run(spec, observers=(widths,))
    except ValueError as e:  # stepper window violation
        raise NumericalFailure(f"{cfg.label}: {e}") from None
    final = result.final_state
    drift = abs(final.norm() - 1.0)
    if drift > NORM_TOL:
        raise NumericalFailure(f"{cfg.label}: norm drifted by {drift:.3e} "
                               f"after {cfg.steps} steps")
    entry_dir = cfg.outdir / cfg.label
    entry_dir.mkdir(parents=True, exist_ok=True)

    per_step = result.observations[0]
    one_d = cfg.family is Family.ONE_D
    zero = [0.0] * (1 if one_d else 4)
    cols = np.array([zero] + [list(w[:len(zero)]) for w in per_step])
    series = WidthSeries(np.arange(cfg.steps + 1), *(cols[:, i] for i in range(cols.shape[1])))
    write_width_csv(series, entry_dir / "widths.csv")

    write_snapshot_csv(final, entry_dir / f"snapshot_t{cfg.steps}.csv",
                       amplitudes=cfg.snapshot_amplitudes)

    sx = cols[1:, 0]
    max_period = min(cfg.max_period, len(sx) // 3)
    found = detect_periods(sx, max_period) if max_period >= 2 else []
    with open(entry_dir / "periods.json", "w") as fh:
        json.dump([{"period": int(p_), "score": float(s)} for p_, s in found],
                  fh, indent=1, sort_keys=True)
        fh.write("\n")

    _write_manifest(cfg, entry_dir)
    return entry_dir


def _write_manifest(cfg: RunConfig, entry_dir: Path) -> None:
    with open(entry_dir / "manifest.json", "w") as fh:
        json.dump(cfg.manifest(), fh, indent=1, sort_keys=True)
        fh.write("\n")


# ----------------------------------------------------------- spectrum command

def _strobe_product_1d(theta, p, k):
    w = np.eye(2, dtype=complex)
    for j in range(1, p + 1):
        w = w @ momentum_unitary_1d(theta, k + 2.0 * math.pi * j / p)
    return w


def _strobe_product_alt(theta_x, theta_y, p, kx, ky, field_axis):
    w = np.eye(2, dtype=complex)
    for j in range(1, p + 1):
        d = 2.0 * math.pi * j / p
        if field_axis == "x":
            w = w @ momentum_unitary_alternate(theta_x, theta_y, kx + d, ky)
        else:
            w = w @ momentum_unitary_alternate(theta_x, theta_y, kx, ky + d)
    return w


def _oracle_residual(cfg: RunConfig, grid: BandGrid) -> list[str]:
    """Closed-form bands vs eigenphases of the defining unitaries."""
    fam = cfg.family
    lines = []
    if fam is Family.CUSTOM_4COIN:
        return ["custom coin: bands are the eigenphase oracle; no closed form"]
    worst = 0.0
    if fam is Family.ONE_D:
        for i, k in enumerate(grid.k_axes[0]):
            u = momentum_unitary_1d(cfg.theta, k) if cfg.p is None \
                else _strobe_product_1d(cfg.theta, cfg.p, k)
            worst = max(worst, phase_set_distance(grid.omega[i], eigenphases(u)))
    elif fam is Family.ALTERNATE_2D:
        kx_ax, ky_ax = grid.k_axes
        for i, kx in enumerate(kx_ax):
            for j, ky in enumerate(ky_ax):
                u = momentum_unitary_alternate(cfg.theta_x, cfg.theta_y, kx, ky) \
                    if cfg.p is None else _strobe_product_alt(
                        cfg.theta_x, cfg.theta_y, cfg.p, kx, ky, cfg.field_axis)
                worst = max(worst, phase_set_distance(grid.omega[i, j],
                                                       eigenphases(u)))
    elif fam is Family.GROVER_2D:
        kx_ax, ky_ax = grid.k_axes
        w = np.arccos(np.clip(-0.5 * (np.cos(kx_ax)[:, None] + np.cos(ky_ax)[None, :]),
                              -1, 1))
        flat0 = np.zeros_like(w)
        sheets = np.sort(np.stack([flat0, np.full_like(w, math.pi), w,
                                   (-w) % (2 * math.pi)], axis=-1), axis=-1)
        for i in range(len(kx_ax)):
            for j in range(len(ky_ax)):
                worst = max(worst, phase_set_distance(grid.omega[i, j], sheets[i, j]))
    elif fam is Family.HADAMARD_2D:
        kx_ax, ky_ax = grid.k_axes
        c = hadamard2_coin()
        for i, kx in enumerate(kx_ax):
            for j, ky in enumerate(ky_ax):
                worst = max(worst, phase_set_distance(
                    grid.omega[i, j], eigenphases(momentum_unitary_2d(c, kx, ky))))
    elif fam is Family.DFT_2D:
        c = dft_coin()
        kx_ax, ky_ax = grid.k_axes
        res = 0.0
        for i, kx in enumerate(kx_ax):
            for j, ky in enumerate(ky_ax):
                res = max(res, np.abs(dft_dispersion_residual(
                    grid.omega[i, j], kx, ky)).max())
                worst = max(worst, phase_set_distance(
                    grid.omega[i, j], eigenphases(momentum_unitary_2d(c, kx, ky))))
        lines.append(f"max |implicit-equation residual| = {res:.3e}")
    lines.append(f"max |band - eigenphase| (circular) = {worst:.3e}")
    return lines


def spectrum_entry(cfg: RunConfig) -> Path:
    fam = cfg.family
    if fam is Family.ONE_D:
        grid = band_grid_1d(cfg.theta, cfg.grid_n, cfg.p)
    elif fam is Family.ALTERNATE_2D:
        grid = band_grid_alternate(cfg.theta_x, cfg.theta_y, cfg.grid_n, cfg.p,
                                   cfg.field_axis)
    elif fam is Family.DFT_2D:
        grid, bad = _dft_grid_tracking_fallbacks(cfg.grid_n)
        if bad:
            shown = ", ".join(f"({kx:.6g},{ky:.6g})" for kx, ky in bad[:5])
            print(f"note: root bracketing fell back to eigenphases at "
                  f"{len(bad)} k-points: {shown}"
                  + ("..." if len(bad) > 5 else ""), file=sys.stderr)
    else:
        if cfg.p is not None:
            raise ConfigError(f"reduced-zone bands are not defined for {fam.value}")
        coin = None
        if fam is Family.CUSTOM_4COIN:
            if cfg.coin is None:
                raise ConfigError("family custom-4coin needs a coin name")
            base = coin_from_name(cfg.coin, cfg.alpha, cfg.beta, cfg.theta)
            coin = CoinOperator(base.entries, Ordering.XY_CROSS)
        grid = band_grid_2d(fam, cfg.grid_n, coin)
    entry_dir = cfg.outdir / cfg.label
    entry_dir.mkdir(parents=True, exist_ok=True)
    write_band_csv(grid, entry_dir / "bands.csv")
    if cfg.report_oracle:
        lines = _oracle_residual(cfg, grid)
        with open(entry_dir / "oracle_report.txt", "w") as fh:
            fh.write("\n".join(lines) + "\n")
        for line in lines:
            print(f"{cfg.label}: {line}")
    _write_manifest(cfg, entry_dir)
    return entry_dir


def _dft_grid_tracking_fallbacks(n):
    kx = np.linspace(-math.pi, math.pi, n)
    ky = np.linspace(-math.pi, math.pi, n)
    omega = np.empty((n, n, 4))
    bad = []
    for i, kxi in enumerate(kx):
        for j, kyj in enumerate(ky):
            omega[i, j], info = dispersion_dft(kxi, kyj, return_info=True)
            if info["fallback"]:
                bad.append((kxi, kyj))
    return BandGrid((kx, ky), 4, omega), bad


# --------------------------------------------------------------- sweep command

def _parse_sweep_spec(texts) -> dict[str, list]:
    axes: dict[str, list] = {}
    for text in texts or []:
        key, _, vals = text.partition("=")
        key = key.strip().replace("-", "_")
        if key not in _SWEEP_KEYS - {"workers"}:
            raise ConfigError(f"cannot sweep over {key!r}")
        if not vals:
            raise ConfigError(f"sweep axis {key!r} has no values")
        axes[key] = vals.split(",")
    return axes


def _axis_token(key: str, value) -> str:
    text = value if isinstance(value, str) else _fmt(value)
    return key.replace("_", "") + text.replace("2pi*", "").replace("/", "-")


def _sweep_worker(payload: dict) -> tuple[str, int, str]:
    cfg = build_config(payload["run"], payload["output"], payload["spectrum"])
    try:
        run_entry(cfg)
        return cfg.label, 0, ""
    except ConfigError as e:
        return cfg.label, 2, str(e)
    except NumericalFailure as e:
        return cfg.label, 3, str(e)


def sweep_entries(args) -> int:
    file_cfg = load_config_file(args.config) if args.config else {}
    sweep_map = dict(file_cfg.get("sweep", {}))
    unknown = set(sweep_map) - _SWEEP_KEYS
    if unknown:
        raise ConfigError(f"unknown [sweep] keys: {', '.join(sorted(unknown))}")
    workers = args.workers or sweep_map.pop("workers", None) or os.cpu_count() or 1
    axes = {k.replace("-", "_"): list(v) for k, v in sweep_map.items()
            if k != "workers"}
    axes.update(_parse_sweep_spec(args.sweep))
    if not axes:
        raise ConfigError("sweep needs at least one axis ([sweep] table or --sweep)")
    bases = resolve_entries(args)
    keys = sorted(axes)
    payloads = []
    for base in bases:
        for combo in product(*(axes[k] for k in keys)):
            m = base.manifest()
            label = base.label
            for k, v in zip(keys, combo):
                if k == "delta_theta":
                    m["run"]["delta_theta"] = float(v)
                elif k in ("phi_x", "phi_y"):
                    m["run"][k] = v if isinstance(v, str) else float(v)
                else:
                    m["run"][k] = float(v)
                label += "_" + _axis_token(k, v)
            m["output"]["label"] = label
            payloads.append(m)
    status = 0
    with ProcessPoolExecutor(max_workers=int(workers)) as pool:
        for label, code, msg in pool.map(_sweep_worker, payloads):
            if code:
                print(f"sweep entry {label} failed: {msg}", file=sys.stderr)
                status = max(status, code)
            else:
                print(f"sweep entry {label} done")
    return status


# ------------------------------------------------------------------- argparse

def _add_common(sp) -> None:
    sp.add_argument("--config", help="TOML config (or a manifest.json)")
    sp.add_argument("--preset", help="preset name, e.g. fig2 or fig2b")
    sp.add_argument("--outdir", help="output directory (default $EQWALK_OUTDIR or .)")
    sp.add_argument("--label", help="entry output subdirectory name")
    sp.add_argument("--family", help="walk family, e.g. one-d, grover-2d")
    sp.add_argument("--steps", type=int)
    sp.add_argument("--coin-state", dest="coin_state",
                    help="named state or comma-separated components")
    sp.add_argument("--phi-x", dest="phi_x", help="field phase, e.g. 2pi*1/120")
    sp.add_argument("--phi-y", dest="phi_y")
    sp.add_argument("--theta", type=float)
    sp.add_argument("--alpha", type=float)
    sp.add_argument("--beta", type=float)
    sp.add_argument("--theta-x", dest="theta_x", type=float)
    sp.add_argument("--theta-y", dest="theta_y", type=float)
    sp.add_argument("--delta-theta", dest="delta_theta", type=float,
                    help="sets theta_x,y = pi/4 +- delta")
    sp.add_argument("--coin", help="coin name for family custom-4coin")
    sp.add_argument("--max-period", dest="max_period", type=int)
    sp.add_argument("--snapshot-amplitudes", dest="snapshot_amplitudes",
                    action="store_const", const=True, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="eqwalk",
                                 description="electric quantum walk toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    rp = sub.add_parser("run", help="simulate a walk; write widths/snapshot/periods")
    _add_common(rp)

    sp = sub.add_parser("spectrum", help="write dispersion bands as CSV")
    _add_common(sp)
    sp.add_argument("--grid-n", dest="grid_n", type=int, help="k samples per axis")
    sp.add_argument("--p", dest="p", type=int,
                    help="reduced-zone bands of the p-step walk at phi=2pi/p")
    sp.add_argument("--field-axis", dest="field_axis", choices=("x", "y"))
    sp.add_argument("--report-oracle", dest="report_oracle",
                    action="store_const", const=True, default=None)

    wp = sub.add_parser("sweep", help="run a cartesian parameter sweep")
    _add_common(wp)
    wp.add_argument("--sweep", action="append", metavar="KEY=V1,V2,...",
                    help="axis values, e.g. delta-theta=0,0.1,0.2")
    wp.add_argument("--workers", type=int)

    pp = sub.add_parser("presets", help="list figure presets")
    pp.add_argument("action", nargs="?", default="list", choices=("list",))
    return ap


def presets_command() -> int:
    for group, entries in PRESETS.items():
        labels = " ".join(e["label"] for e in entries)
        print(f"{group}: {labels}")
        for e in entries:
            parts = [f"{e['family']}", f"steps={e['steps']}",
                     f"state={e['coin_state']}"]
            for key in ("phi_x", "phi_y", "delta_theta"):
                if key in e:
                    parts.append(f"{key}={e[key]}")
            print(f"  {e['label']}: " + "  ".join(parts))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "presets":
            return presets_command()
        if args.command == "sweep":
            return sweep_entries(args)
        for cfg in resolve_entries(args):
            if args.command == "run":
                out = run_entry(cfg)
            else:
                out = spectrum_entry(cfg)
            print(f"{cfg.label}: wrote {out}")
        return 0
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2
    except NumericalFailure as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
