"""Evaluate a :class:`RunConfig` point by point and serialize the table."""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import damping, meissner, observables, scheme1, scheme2
from .config import PARAMS, RunConfig, config_as_dict
from .core import GasEnvironment, MagnetSphere, SCRing, hz_to_rad_s
from .errors import ModelError
from .ringfield import RingPairConfig

SCHEMA_VERSION = 1

# The magnet under the levitated ring is fixed, so its mass never enters.
_FIXED_MAGNET_DENSITY = 7500.0

# (name, unit) per output column; the CSV header is name_unit.
OUTPUTS: dict[str, list[tuple[str, str]]] = {
    "scheme1": [
        ("delta_z", "m"),
        ("delta_z_linear", "m"),
        ("zpm", "m"),
        ("chi", "1"),
        ("Q", "1"),
        ("field_margin", "T"),
        ("root_count", "1"),
    ],
    "scheme2": [
        ("alpha", "1"),
        ("mass", "kg"),
        ("inductance", "H"),
        ("m_sc", "A_m2"),
        ("h", "m"),
        ("nu_z", "Hz"),
        ("delta_z", "m"),
        ("zpm", "m"),
        ("chi", "1"),
        ("Q", "1"),
    ],
    "meissner": [
        ("k_full", "N_per_m"),
        ("k_asym", "N_per_m"),
        ("k_nobackaction", "N_per_m"),
        ("ratio", "1"),
        ("force", "N"),
        ("delta_eq", "m"),
        ("omega_z", "rad_per_s"),
    ],
    "qfactor": [("Q", "1")],
}

_INTEGER_COLUMNS = {"root_count"}


def _gas(p: dict[str, float]) -> GasEnvironment:
    return GasEnvironment(p["gas.P"], p["gas.T"], p["gas.M"])


def _eval_scheme1(p: dict[str, float], out: dict[str, float]) -> None:
    magnet = MagnetSphere(p["magnet.radius"], p["magnet.Br"], p["magnet.rho"])
    rings = RingPairConfig(p["ring.R"], p["ring.I"], p["ring.eta"])
    omega = hz_to_rad_s(p["trap.nu"])
    cfg = scheme1.Scheme1Config(magnet, rings, omega)
    out["root_count"] = scheme1.count_sign_changes(cfg)
    out["delta_z_linear"] = scheme1.linearized_extent(cfg)
    dz = scheme1.solve_superposition_extent(cfg)
    out["delta_z"] = dz
    state = observables.OscillatorState(magnet.mass, omega)
    out["zpm"] = observables.zero_point_motion(state)
    out["chi"] = observables.chi_ratio(dz, state)
    out["Q"] = damping.gas_q(
        damping.OscillatorDampingSpec(magnet.density_rho, magnet.radius_a, omega, _gas(p))
    )
    out["field_margin"] = scheme1.critical_field_check(
        cfg, (-0.5 * dz, 0.0, 0.5 * dz), p["ring.Bc"]
    )


def _eval_scheme2(p: dict[str, float], out: dict[str, float]) -> None:
    magnet = MagnetSphere(p["magnet.radius"], p["magnet.Br"], _FIXED_MAGNET_DENSITY)
    ring = SCRing(p["ring.R"], p["ring.r"], p["ring.rho"], p["ring.I"])
    cfg = scheme2.Scheme2Config(magnet, ring)
    out["mass"] = scheme2.ring_mass(ring)
    out["inductance"] = scheme2.ring_inductance(ring)
    out["m_sc"] = scheme2.ring_moment(ring)
    out["alpha"] = scheme2.stability_parameter(cfg)
    h = scheme2.equilibrium_height(cfg)
    out["h"] = h
    nu = scheme2.trap_frequency_hz(cfg, h)
    out["nu_z"] = nu
    omega = hz_to_rad_s(nu)
    if omega == 0:
        raise ModelError("zero trap frequency at the marginal height", "trap_frequency_hz")
    dz = scheme2.superposition_extent(cfg, h, omega)
    out["delta_z"] = dz
    state = observables.OscillatorState(out["mass"], omega)
    out["zpm"] = observables.zero_point_motion(state)
    out["chi"] = observables.chi_ratio(dz, state)
    out["Q"] = damping.gas_q(damping.OscillatorDampingSpec(ring.density_rho, ring.wire_radius_r, omega, _gas(p)))


def _eval_meissner(p: dict[str, float], out: dict[str, float]) -> None:
    magnet = MagnetSphere(p["magnet.radius"], p["magnet.Br"], _FIXED_MAGNET_DENSITY)
    d = p["trap.d"]
    trap = meissner.DipolePairTrap.from_magnets(
        magnet, d, p["trap.gamma"], p["sphere.rho"], p["trap.delta"]
    )
    out["k_full"] = k = meissner.stiffness_full(d, trap)
    out["k_asym"] = meissner.stiffness_asymptotic(d, trap)
    out["k_nobackaction"] = meissner.stiffness_no_backaction(d, trap)
    out["ratio"] = out["k_asym"] / out["k_nobackaction"]
    out["force"] = meissner.force_on_sphere(trap)
    out["delta_eq"], out["omega_z"] = meissner.equilibrium_sag_and_frequency(trap, k)


def _eval_qfactor(p: dict[str, float], out: dict[str, float]) -> None:
    spec = damping.OscillatorDampingSpec(p["osc.rho"], p["osc.r"], hz_to_rad_s(p["osc.nu"]), _gas(p))
    out["Q"] = damping.gas_q(spec)


_EVALUATORS: dict[str, Callable[[dict[str, float], dict[str, float]], None]] = {
    "scheme1": _eval_scheme1,
    "scheme2": _eval_scheme2,
    "meissner": _eval_meissner,
    "qfactor": _eval_qfactor,
}


@dataclass
class Row:
    inputs: dict[str, float]
    outputs: dict[str, float]
    error: str = ""


@dataclass
class SweepResult:
    config: RunConfig
    input_columns: list[tuple[str, str]]
    output_columns: list[tuple[str, str]]
    rows: list[Row] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(not r.error for r in self.rows)


def evaluate_point(scheme: str, values: dict[str, float]) -> Row:
    """One row; model failures are caught and recorded in ``error``."""
    out: dict[str, float] = {}
    err = ""
    try:
        _EVALUATORS[scheme](values, out)
    except ModelError as exc:
        err = exc.describe()
    return Row(dict(values), out, err)


def points(cfg: RunConfig) -> list[dict[str, float]]:
    """Parameter dicts in output order: listed parameters outer, sweep inner."""
    keys = list(cfg.params)
    axes = [cfg.params[k] for k in keys]
    sweep_vals = cfg.sweep.values() if cfg.sweep is not None else [None]
    pts = []
    for combo in itertools.product(*axes):
        base = dict(zip(keys, combo))
        for v in sweep_vals:
            p = dict(base)
            if cfg.sweep is not None:
                p[cfg.sweep.variable] = v
            pts.append(p)
    return pts


def run(cfg: RunConfig, threads: int = 1) -> SweepResult:
    pts = points(cfg)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda p: evaluate_point(cfg.scheme, p), pts))
    else:
        rows = [evaluate_point(cfg.scheme, p) for p in pts]
    specs = PARAMS[cfg.scheme]
    inputs = [(k, specs[k].unit.replace("/", "_per_").replace("^", "")) for k in cfg.varying_keys()]
    return SweepResult(cfg, inputs, OUTPUTS[cfg.scheme], rows)


def column_names(result: SweepResult) -> list[str]:
    cols = [f"{n}_{u}" for n, u in result.input_columns + result.output_columns]
    return cols + ["error"]


def _fmt(name: str, value) -> str:
    if value is None:
        return ""
    if name in _INTEGER_COLUMNS:
        return str(int(value))
    value = float(value)
    if math.isnan(value):
        return ""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(value, ".11e")


def emit_csv(result: SweepResult) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
    writer.writerow(column_names(result))
    for row in result.rows:
        cells = [_fmt(n, row.inputs.get(n)) for n, _ in result.input_columns]
        cells += [_fmt(n, row.outputs.get(n)) for n, _ in result.output_columns]
        writer.writerow(cells + [row.error])
    return buf.getvalue().encode("utf-8")


def _json_value(name: str, value):
    if value is None:
        return None
    if name in _INTEGER_COLUMNS:
        return int(value)
    value = float(value)
    return value if math.isfinite(value) else None


def emit_json(result: SweepResult) -> bytes:
    names = column_names(result)
    rows = []
    for row in result.rows:
        vals = [_json_value(n, row.inputs.get(n)) for n, _ in result.input_columns]
        vals += [_json_value(n, row.outputs.get(n)) for n, _ in result.output_columns]
        rows.append(dict(zip(names, vals + [row.error or None])))
    doc = {
        "schema_version": SCHEMA_VERSION,
        "inputs": config_as_dict(result.config),
        "columns": names,
        "rows": rows,
    }
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


def emit(result: SweepResult, fmt: str = "csv") -> bytes:
    if fmt == "csv":
        return emit_csv(result)
    if fmt == "json":
        return emit_json(result)
    raise ValueError(f"unknown format '{fmt}'")
