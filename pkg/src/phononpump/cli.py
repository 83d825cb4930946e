"""Command-line front end: scenario runs and parameter sweeps emitting CSV.

Subcommands: distribution, sweep-detuning, sweep-gamma, evolve,
cooling-estimate. Configuration is a flat JSON document; unknown keys are
rejected so typos in physics parameters cannot silently fall back to
defaults. Exit codes: 0 success, 2 configuration error, 3 phonon-window cap
exceeded.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .counting import WindowCapError, evolve, initial_state
from .model import PhysicalParams, dressed_basis, phonon_energy_si, rwa_ratio
from .observables import cooling_estimate, phonon_flux, reduced_density, steady_state

RWA_WARNING_THRESHOLD = 0.5


class ConfigError(ValueError):
    """Invalid or unknown configuration input."""


_BASE_DEFAULTS: dict = {
    "omega_rabi": 1.0,
    "delta": 1.0,
    "alpha": 0.25,
    "cutoff": None,
    "temperature": 10.0,
    "gamma_decay": 0.1,
    "gamma_dephasing": 0.0,
    "step": None,
    "duration": None,
    "rabi_cycles": None,
    "sample_times": None,
    "sample_cycles": None,
    "samples": 501,
    "sweep_axis": None,
    "sweep_start": None,
    "sweep_stop": None,
    "sweep_points": None,
    "sweep_scale": None,
    "temperatures": None,
    "window_tolerance": 1e-12,
    "window_cap": 512,
    "heat_capacity": 1.85e-12,
}

_COMMAND_DEFAULTS: dict[str, dict] = {
    "distribution": {"sample_cycles": [1.2, 10.0, 40.0, 70.0]},
    "sweep-detuning": {
        "sweep_axis": "delta",
        "sweep_start": -3.0,
        "sweep_stop": 3.0,
        "sweep_points": 61,
        "sweep_scale": "linear",
        "temperatures": [4.0, 10.0, 20.0],
    },
    "sweep-gamma": {
        "sweep_axis": "gamma_decay",
        "sweep_start": 0.01,
        "sweep_stop": 1.0,
        "sweep_points": 25,
        "sweep_scale": "log",
    },
    "evolve": {"duration": 50.0},
    "cooling-estimate": {"temperature": 20.0},
}


@dataclass(frozen=True)
class RunConfig:
    """Validated configuration for one CLI command."""

    command: str
    values: dict

    def __getattr__(self, name):
        try:
            return self.values[name]
        except KeyError as exc:
            raise AttributeError(name) from exc


@dataclass(frozen=True)
class CsvTable:
    header: list[str]
    rows: list[list]


def _reject_unknown(keys, source: str) -> None:
    unknown = sorted(set(keys) - set(_BASE_DEFAULTS))
    if unknown:
        raise ConfigError(f"unknown configuration key(s) in {source}: {', '.join(unknown)}")


def _parse_override(text: str) -> tuple[str, object]:
    if "=" not in text:
        raise ConfigError(f"override must look like key=value, got {text!r}")
    key, raw = text.split("=", 1)
    if raw.lower() in ("none", "null"):
        return key, None
    try:
        return key, json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"override value for {key!r} is not valid JSON: {raw!r}") from exc


def load_config(command: str, config_path: str | None, overrides: list[str]) -> RunConfig:
    values = dict(_BASE_DEFAULTS)
    values.update(_COMMAND_DEFAULTS.get(command, {}))
    if config_path is not None:
        try:
            with open(config_path, encoding="utf-8") as fh:
                document = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {config_path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {config_path} is not valid JSON: {exc}") from exc
        if not isinstance(document, dict):
            raise ConfigError("config document must be a JSON object")
        _reject_unknown(document, config_path)
        values.update(document)
    for item in overrides:
        key, value = _parse_override(item)
        _reject_unknown([key], "--override")
        values[key] = value
    cfg = RunConfig(command=command, values=values)
    _validate(cfg)
    return cfg


def _require_number(cfg: RunConfig, key: str, minimum=None, strict=False, optional=False):
    value = cfg.values[key]
    if value is None:
        if optional:
            return None
        raise ConfigError(f"{key} is required for {cfg.command}")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{key} must be a number, got {value!r}")
    if not math.isfinite(value):
        raise ConfigError(f"{key} must be finite, got {value!r}")
    if minimum is not None and (value <= minimum if strict else value < minimum):
        bound = "greater than" if strict else "at least"
        raise ConfigError(f"{key} must be {bound} {minimum}, got {value}")
    return float(value)


def _validate(cfg: RunConfig) -> None:
    try:
        physical_params(cfg)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    _require_number(cfg, "step", minimum=0.0, strict=True, optional=True)
    _require_number(cfg, "window_tolerance", minimum=0.0, strict=True)
    _require_number(cfg, "heat_capacity", minimum=0.0, strict=True)
    cap = cfg.values["window_cap"]
    if not isinstance(cap, int) or isinstance(cap, bool) or cap < 1:
        raise ConfigError(f"window_cap must be a positive integer, got {cap!r}")
    if cfg.values["duration"] is not None and cfg.values["rabi_cycles"] is not None:
        raise ConfigError("duration and rabi_cycles are mutually exclusive")
    _require_number(cfg, "duration", minimum=0.0, strict=True, optional=True)
    _require_number(cfg, "rabi_cycles", minimum=0.0, strict=True, optional=True)

    if cfg.command in ("sweep-detuning", "sweep-gamma"):
        expected_axis = "delta" if cfg.command == "sweep-detuning" else "gamma_decay"
        if cfg.sweep_axis != expected_axis:
            raise ConfigError(
                f"{cfg.command} sweeps the {expected_axis!r} axis, got sweep_axis={cfg.sweep_axis!r}"
            )
        points = cfg.values["sweep_points"]
        if not isinstance(points, int) or isinstance(points, bool) or points < 2:
            raise ConfigError(f"sweep_points must be an integer >= 2, got {points!r}")
        start = _require_number(cfg, "sweep_start")
        stop = _require_number(cfg, "sweep_stop")
        if cfg.sweep_scale not in ("linear", "log"):
            raise ConfigError(f"sweep_scale must be 'linear' or 'log', got {cfg.sweep_scale!r}")
        if cfg.sweep_scale == "log" and (start <= 0 or stop <= 0):
            raise ConfigError("log-scale sweeps need positive bounds")
        if start >= stop:
            raise ConfigError(f"sweep_start must be below sweep_stop, got [{start}, {stop}]")
    if cfg.command == "sweep-detuning":
        temps = cfg.values["temperatures"]
        if not isinstance(temps, list) or not temps:
            raise ConfigError("temperatures must be a non-empty list")
        for t in temps:
            if isinstance(t, bool) or not isinstance(t, (int, float)) or t < 0:
                raise ConfigError(f"temperatures entries must be nonnegative numbers, got {t!r}")
    if cfg.command == "distribution":
        if cfg.values["sample_times"] is not None and cfg.values["sample_cycles"] is not None:
            raise ConfigError("sample_times and sample_cycles are mutually exclusive")
        samples = cfg.values["sample_times"] or cfg.values["sample_cycles"]
        if not isinstance(samples, list) or not samples:
            raise ConfigError("distribution needs a non-empty sample_times or sample_cycles list")
        for t in samples:
            if isinstance(t, bool) or not isinstance(t, (int, float)) or t <= 0:
                raise ConfigError(f"sample entries must be positive numbers, got {t!r}")
    if cfg.command == "evolve":
        samples = cfg.values["samples"]
        if not isinstance(samples, int) or isinstance(samples, bool) or samples < 2:
            raise ConfigError(f"samples must be an integer >= 2, got {samples!r}")


def physical_params(cfg: RunConfig) -> PhysicalParams:
    cutoff = cfg.values["cutoff"]
    if isinstance(cutoff, str):
        if cutoff.lower() != "none":
            raise ConfigError(f"cutoff must be a number or 'none', got {cutoff!r}")
        cutoff = None
    return PhysicalParams(
        omega_rabi=cfg.omega_rabi,
        delta=cfg.delta,
        alpha=cfg.alpha,
        cutoff=cutoff,
        temperature=cfg.temperature,
        gamma_decay=cfg.gamma_decay,
        gamma_dephasing=cfg.gamma_dephasing,
    )


def _format_cell(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"refusing to write non-finite CSV value {value!r}")
    return f"{value:.9g}"


def write_csv(table: CsvTable, path: str) -> None:
    lines = [",".join(table.header)]
    for row in table.rows:
        if len(row) != len(table.header):
            raise ValueError("CSV rows must match the header width")
        lines.append(",".join(_format_cell(cell) for cell in row))
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def _warn_rwa(max_ratio: float) -> None:
    if max_ratio > RWA_WARNING_THRESHOLD:
        print(
            f"warning: J(Lambda)/Lambda reaches {max_ratio:.3g} (> {RWA_WARNING_THRESHOLD}); "
            "the secular approximation is marginal at these parameters",
            file=sys.stderr,
        )


def cmd_distribution(cfg: RunConfig) -> CsvTable:
    params = physical_params(cfg)
    basis = dressed_basis(params)
    rabi_period = 2.0 * math.pi / basis.lambda_gap
    if cfg.values["sample_times"] is not None:
        times = sorted(float(t) for t in cfg.sample_times)
    else:
        times = sorted(float(c) * rabi_period for c in cfg.sample_cycles)
    duration = cfg.values["duration"]
    if duration is None:
        duration = times[-1]
    elif duration < times[-1]:
        raise ConfigError("duration is shorter than the last sample time")
    trajectory = evolve(
        initial_state(cfg.window_tolerance),
        params,
        basis,
        duration,
        h=cfg.values["step"],
        sample_times=times,
        window_cap=cfg.window_cap,
    )
    _warn_rwa(rwa_ratio(params, basis))
    rows = []
    for record in trajectory.records:
        for m, p in zip(record.distribution.m_values, record.distribution.probabilities):
            rows.append([record.time, record.time / rabi_period, int(m), p])
    return CsvTable(header=["time_ps", "time_rabi_cycles", "m", "p_m"], rows=rows)


def _sweep_grid(cfg: RunConfig) -> np.ndarray:
    if cfg.sweep_scale == "log":
        return np.logspace(math.log10(cfg.sweep_start), math.log10(cfg.sweep_stop), cfg.sweep_points)
    return np.linspace(cfg.sweep_start, cfg.sweep_stop, cfg.sweep_points)


def cmd_sweep_detuning(cfg: RunConfig) -> CsvTable:
    base = physical_params(cfg)
    rows = []
    max_ratio = 0.0
    for temperature in cfg.temperatures:
        for delta in _sweep_grid(cfg):
            params = dataclasses.replace(base, delta=float(delta), temperature=float(temperature))
            basis = dressed_basis(params)
            report = steady_state(params, basis)
            max_ratio = max(max_ratio, report.rwa_ratio)
            rows.append(
                [
                    float(delta),
                    report.flux,
                    report.energy_rate_si,
                    float(temperature),
                    report.rwa_ratio,
                    report.unique,
                ]
            )
    _warn_rwa(max_ratio)
    return CsvTable(
        header=["delta_ps_inv", "flux_ps_inv", "energy_rate_W", "temperature_K", "rwa_ratio", "unique"],
        rows=rows,
    )


def cmd_sweep_gamma(cfg: RunConfig) -> CsvTable:
    base = physical_params(cfg)
    rows = []
    max_ratio = 0.0
    for gamma in _sweep_grid(cfg):
        params = dataclasses.replace(base, gamma_decay=float(gamma))
        basis = dressed_basis(params)
        report = steady_state(params, basis)
        max_ratio = max(max_ratio, report.rwa_ratio)
        rows.append([float(gamma), report.flux])
    _warn_rwa(max_ratio)
    return CsvTable(header=["gamma_ps_inv", "flux_ps_inv"], rows=rows)


def cmd_evolve(cfg: RunConfig) -> CsvTable:
    params = physical_params(cfg)
    basis = dressed_basis(params)
    duration = cfg.values["duration"]
    if duration is None and cfg.values["rabi_cycles"] is not None:
        duration = cfg.rabi_cycles * 2.0 * math.pi / basis.lambda_gap
    if duration is None:
        duration = 50.0
    times = np.linspace(0.0, duration, cfg.samples)
    trajectory = evolve(
        initial_state(cfg.window_tolerance),
        params,
        basis,
        duration,
        h=cfg.values["step"],
        sample_times=list(times),
        window_cap=cfg.window_cap,
    )
    _warn_rwa(rwa_ratio(params, basis))
    rows = []
    for record in trajectory.records:
        rho = record.reduced
        rows.append(
            [
                record.time,
                record.distribution.mean,
                record.distribution.variance,
                rho[0, 0].real,
                rho[1, 1].real,
                rho[0, 1].real,
                rho[0, 1].imag,
                phonon_flux(rho, params, basis),
            ]
        )
    return CsvTable(
        header=[
            "time_ps",
            "mean_m",
            "var_m",
            "rho_gg",
            "rho_ee",
            "re_rho_ge",
            "im_rho_ge",
            "flux_ps_inv",
        ],
        rows=rows,
    )


def cmd_cooling_estimate(cfg: RunConfig) -> CsvTable:
    params = physical_params(cfg)
    basis = dressed_basis(params)
    report = steady_state(params, basis)
    estimate = cooling_estimate(report.energy_rate_si, cfg.heat_capacity)
    _warn_rwa(report.rwa_ratio)
    direction = "net phonon emission" if report.flux >= 0 else "net phonon absorption"
    print(f"steady-state phonon flux: {report.flux:.9g} ps^-1 ({direction})")
    print(f"phonon energy hbar*Lambda: {phonon_energy_si(basis.lambda_gap):.9g} J")
    print(
        f"energy rate: {report.energy_rate_natural:.9g} ps^-2 (natural), "
        f"{report.energy_rate_si:.9g} W"
    )
    print(
        f"temperature slope: {estimate.temperature_slope:.9g} K/s "
        f"(heat capacity {estimate.heat_capacity:.9g} J/K)"
    )
    if report.flux >= 0:
        print("phonons flow into the bath at this operating point: no cooling possible")
    return CsvTable(
        header=[
            "flux_ps_inv",
            "lambda_ps_inv",
            "hbar_lambda_J",
            "energy_rate_natural_ps2",
            "energy_rate_W",
            "heat_capacity_J_per_K",
            "temperature_slope_K_per_s",
        ],
        rows=[
            [
                report.flux,
                basis.lambda_gap,
                phonon_energy_si(basis.lambda_gap),
                report.energy_rate_natural,
                report.energy_rate_si,
                estimate.heat_capacity,
                estimate.temperature_slope,
            ]
        ],
    )


_COMMANDS = {
    "distribution": cmd_distribution,
    "sweep-detuning": cmd_sweep_detuning,
    "sweep-gamma": cmd_sweep_gamma,
    "evolve": cmd_evolve,
    "cooling-estimate": cmd_cooling_estimate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phononpump",
        description="Driven two-level emitter exchanging counted phonons with a thermal bath",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, func in _COMMANDS.items():
        cmd = sub.add_parser(name, help=func.__doc__)
        cmd.add_argument("--config", default=None, help="JSON configuration file")
        cmd.add_argument("--out", default=None, help=f"output CSV path (default {name}.csv)")
        cmd.add_argument(
            "--override",
            action="append",
            default=[],
            metavar="KEY=VALUE",
            help="override one configuration key (repeatable, JSON value syntax)",
        )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.command, args.config, args.override)
        table = _COMMANDS[args.command](cfg)
        write_csv(table, args.out if args.out is not None else f"{args.command}.csv")
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WindowCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
