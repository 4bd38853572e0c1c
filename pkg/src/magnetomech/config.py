"""Run configuration: the ``key = value`` file format and its validation.

Grammar (one statement per line, UTF-8)::

    line       := blank | comment | assignment
    comment    := '#' ...                  (also allowed after a value)
    assignment := key '=' value
    key        := [A-Za-z_][A-Za-z0-9_.]*
    value      := number | number (',' number)+ | word

Numbers use Python float syntax (``1e-6``, ``14.32e-3``); ``inf`` and
``nan`` are rejected. A comma list on a model parameter evaluates the run
once per listed value. Reserved keys: ``scheme``, ``format``, ``output``
and ``sweep.{variable,start,stop,count,scale}``. All values are SI.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import numpy as np

SCHEMES = ("scheme1", "scheme2", "meissner", "qfactor")
FORMATS = ("csv", "json")

POSITIVE = "positive"
NONNEGATIVE = "nonnegative"
ANY = "any"


class ConfigError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class ParseError(ConfigError):
    pass


class MissingKey(ConfigError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"missing required key '{name}'")


class UnknownKey(ConfigError):
    def __init__(self, name: str, line: int | None = None):
        self.name = name
        super().__init__(f"unknown key '{name}'", line)


@dataclass(frozen=True)
class ParamSpec:
    unit: str
    default: float | None = None
    constraint: str = POSITIVE
    doc: str = ""


_GAS = {
    "gas.P": ParamSpec("Pa", 1e-6, doc="gas pressure"),
    "gas.T": ParamSpec("K", 0.3, doc="gas temperature"),
    "gas.M": ParamSpec("kg", 6.65e-27, doc="gas molecule mass (helium)"),
}

PARAMS: dict[str, dict[str, ParamSpec]] = {
    "scheme1": {
        "magnet.radius": ParamSpec("m", doc="levitated magnet sphere radius"),
        "magnet.Br": ParamSpec("T", constraint=NONNEGATIVE, doc="remanence"),
        "magnet.rho": ParamSpec("kg/m^3", doc="magnet density"),
        "ring.R": ParamSpec("m", doc="flux-qubit loop radius"),
        "ring.I": ParamSpec("A", constraint=ANY, doc="qubit persistent current"),
        "ring.eta": ParamSpec("1", 0.5, doc="ring offset z = +-eta R"),
        "ring.Bc": ParamSpec("T", 9.78e-3, doc="ring critical field"),
        "trap.nu": ParamSpec("Hz", doc="trap frequency along z"),
        **_GAS,
    },
    "scheme2": {
        "magnet.radius": ParamSpec("m", doc="fixed magnet sphere radius"),
        "magnet.Br": ParamSpec("T", doc="remanence"),
        "ring.R": ParamSpec("m", doc="flux-qubit loop radius"),
        "ring.r": ParamSpec("m", doc="wire cross-section radius"),
        "ring.rho": ParamSpec("kg/m^3", doc="ring density"),
        "ring.I": ParamSpec("A", constraint=ANY, doc="qubit persistent current"),
        **_GAS,
    },
    "meissner": {
        "magnet.radius": ParamSpec("m", doc="radius of each trap magnet"),
        "magnet.Br": ParamSpec("T", doc="remanence of each trap magnet"),
        "trap.d": ParamSpec("m", doc="distance between the two magnets"),
        "trap.gamma": ParamSpec("m", doc="superconducting sphere radius"),
        "trap.delta": ParamSpec("m", 0.0, constraint=ANY, doc="sphere displacement for the force"),
        "sphere.rho": ParamSpec("kg/m^3", doc="superconducting sphere density"),
    },
    "qfactor": {
        "osc.rho": ParamSpec("kg/m^3", doc="oscillator density"),
        "osc.r": ParamSpec("m", doc="sphere radius or torus cross-section radius"),
        "osc.nu": ParamSpec("Hz", doc="oscillation frequency"),
        **_GAS,
    },
}

_SWEEP_KEYS = ("sweep.variable", "sweep.start", "sweep.stop", "sweep.count", "sweep.scale")
_RESERVED = ("scheme", "format", "output") + _SWEEP_KEYS
_KEY_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.]*\Z")


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    start: float
    stop: float
    count: int
    scale: str = "linear"

    def __post_init__(self):
        if self.count < 2:
            raise ConfigError("sweep.count must be >= 2")
        if not self.start < self.stop:
            raise ConfigError("sweep.start must be < sweep.stop")
        if self.scale not in ("linear", "log"):
            raise ConfigError("sweep.scale must be 'linear' or 'log'")
        if self.scale == "log" and not self.start > 0:
            raise ConfigError("log sweep requires sweep.start > 0")

    def values(self) -> list[float]:
        if self.scale == "log":
            vals = np.logspace(math.log10(self.start), math.log10(self.stop), self.count)
        else:
            vals = np.linspace(self.start, self.stop, self.count)
        out = [float(v) for v in vals]
        out[0], out[-1] = self.start, self.stop
        return out


@dataclass(frozen=True)
class RunConfig:
    """Validated run description; ``params`` holds effective values (defaults filled)."""

    scheme: str
    params: dict[str, tuple[float, ...]] = field(default_factory=dict)
    sweep: SweepSpec | None = None
    output: str | None = None
    format: str = "csv"

    def varying_keys(self) -> list[str]:
        keys = [k for k in PARAMS[self.scheme] if len(self.params.get(k, ())) > 1]
        if self.sweep is not None:
            keys.append(self.sweep.variable)
        return keys


def _parse_number(text: str, line: int | None) -> float:
    try:
        val = float(text)
    except ValueError:
        raise ParseError(f"not a number: '{text}'", line) from None
    if not math.isfinite(val):
        raise ParseError(f"non-finite value: '{text}'", line)
    return val


def _check_constraint(key: str, val: float, spec: ParamSpec, line: int | None) -> None:
    if spec.constraint == POSITIVE and not val > 0:
        raise ConfigError(f"{key} must be > 0 (got {val!r})", line)
    if spec.constraint == NONNEGATIVE and not val >= 0:
        raise ConfigError(f"{key} must be >= 0 (got {val!r})", line)


def parse_config(
    text: str, scheme: str | None = None, overrides: dict[str, str] | None = None
) -> RunConfig:
    """Parse and validate config text.

    ``scheme`` (e.g. from a CLI subcommand) must agree with a ``scheme`` key
    in the text if both are given. ``overrides`` replace or add raw values
    after the text is read.
    """
    raw: dict[str, tuple[str, int | None]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ParseError("expected 'key = value'", lineno)
        key, _, value = (part.strip() for part in body.partition("="))
        if not _KEY_RE.match(key):
            raise ParseError(f"invalid key '{key}'", lineno)
        if not value:
            raise ParseError(f"empty value for '{key}'", lineno)
        if key in raw:
            raise ParseError(f"duplicate key '{key}'", lineno)
        raw[key] = (value, lineno)
    for key, value in (overrides or {}).items():
        if not _KEY_RE.match(key):
            raise ParseError(f"invalid key '{key}'")
        raw[key] = (value.strip(), None)

    if "scheme" in raw:
        text_scheme, lineno = raw["scheme"]
        if text_scheme not in SCHEMES:
            raise ParseError(f"unknown scheme '{text_scheme}'", lineno)
        if scheme is not None and scheme != text_scheme:
            raise ParseError(f"config is for '{text_scheme}', not '{scheme}'", lineno)
        scheme = text_scheme
    if scheme is None:
        raise MissingKey("scheme")
    if scheme not in SCHEMES:
        raise ConfigError(f"unknown scheme '{scheme}'")
    specs = PARAMS[scheme]

    for key, (_, lineno) in raw.items():
        if key not in specs and key not in _RESERVED:
            raise UnknownKey(key, lineno)

    sweep = None
    if any(k in raw for k in _SWEEP_KEYS):
        for k in _SWEEP_KEYS[:4]:
            if k not in raw:
                raise MissingKey(k)
        var, lineno = raw["sweep.variable"]
        if var not in specs:
            raise UnknownKey(var, lineno)
        if var in raw:
            raise ParseError(f"'{var}' is both set and swept", raw[var][1])
        count_text, count_line = raw["sweep.count"]
        try:
            count = int(count_text)
        except ValueError:
            raise ParseError(f"sweep.count must be an integer: '{count_text}'", count_line) from None
        scale = raw.get("sweep.scale", ("linear", 0))[0]
        start = _parse_number(*raw["sweep.start"])
        stop = _parse_number(*raw["sweep.stop"])
        try:
            sweep = SweepSpec(var, start, stop, count, scale)
        except ConfigError as exc:
            raise ConfigError(str(exc), raw["sweep.variable"][1]) from None
        _check_constraint(var, start, specs[var], raw["sweep.start"][1])
        _check_constraint(var, stop, specs[var], raw["sweep.stop"][1])

    params: dict[str, tuple[float, ...]] = {}
    for key, spec in specs.items():
        if sweep is not None and key == sweep.variable:
            continue
        if key in raw:
            value, lineno = raw[key]
            vals = tuple(_parse_number(v.strip(), lineno) for v in value.split(","))
            for v in vals:
                _check_constraint(key, v, spec, lineno)
            params[key] = vals
        elif spec.default is not None:
            params[key] = (spec.default,)
        else:
            raise MissingKey(key)

    fmt = raw.get("format", ("csv", 0))
    if fmt[0] not in FORMATS:
        raise ParseError(f"format must be one of {FORMATS}", fmt[1])
    output = raw["output"][0] if "output" in raw else None
    return RunConfig(scheme, params, sweep, output, fmt[0])


def format_config(cfg: RunConfig) -> str:
    """Canonical text for ``cfg``; ``parse_config`` of it returns an equal config."""
    lines = [f"scheme = {cfg.scheme}"]
    for key, spec in PARAMS[cfg.scheme].items():
        if key in cfg.params:
            vals = ", ".join(repr(v) for v in cfg.params[key])
            lines.append(f"{key} = {vals}  # {spec.unit}")
    if cfg.sweep is not None:
        s = cfg.sweep
        lines += [
            f"sweep.variable = {s.variable}",
            f"sweep.start = {s.start!r}",
            f"sweep.stop = {s.stop!r}",
            f"sweep.count = {s.count}",
            f"sweep.scale = {s.scale}",
        ]
    lines.append(f"format = {cfg.format}")
    if cfg.output is not None:
        lines.append(f"output = {cfg.output}")
    return "\n".join(lines) + "\n"


def config_as_dict(cfg: RunConfig) -> dict:
    out: dict = {"scheme": cfg.scheme}
    out["params"] = {k: list(v) if len(v) > 1 else v[0] for k, v in cfg.params.items()}
    if cfg.sweep is not None:
        s = cfg.sweep
        out["sweep"] = {
            "variable": s.variable,
            "start": s.start,
            "stop": s.stop,
            "count": s.count,
            "scale": s.scale,
        }
    return out
