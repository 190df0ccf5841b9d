"""Line-oriented run configuration.

The format is ``key = value`` lines grouped under ``[scenario]``,
``[powers]``, ``[simulation]`` and ``[output]`` headers; ``#`` starts a
comment. Omitted keys take the defaults below. Example::

    [scenario]
    name = sparse-random
    K = 8

    [powers]
    grid = 0:2:50        # start:step:stop, or a comma list of dB values
    L = 10

    [simulation]
    schemes = OSW, OS, OS-MSISR
    trials = 10000
    target_rate = 0.2    # "none" disables the outage column

Custom layouts use ``name = custom`` with ``s1``, ``s2``, ``eve`` given as
``x, y`` and ``intermediates`` as ``x, y; x, y; ...``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .montecarlo import check_grid, power_grid
from .selection import SchemeId
from .topology import CLUSTER_RADIUS, SCENARIOS, NetworkTopology, custom_topology, preset_scenario

ALL_SCHEMES = tuple(SchemeId)


class ConfigError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class SimulationConfig:
    scenario: str = "sparse-random"
    K: int = 8
    beta: float = 3.0
    placement_seed: int = 1
    cluster_radius: float = CLUSTER_RADIUS
    s1: Optional[tuple] = None
    s2: Optional[tuple] = None
    eve: Optional[tuple] = None
    intermediates: Optional[tuple] = None
    L: float = 10.0
    power_grid: tuple = field(default_factory=lambda: tuple(power_grid(0.0, 50.0, 2.0).tolist()))
    schemes: tuple = ALL_SCHEMES
    trials: int = 10000
    master_seed: int = 0
    target_rate: Optional[float] = 0.2
    allow_equal_jammers: bool = True
    reciprocal_channels: bool = True
    workers: int = 1
    curves: str = "curves.csv"
    summary: str = "summary.txt"
    figures: bool = True

    def topology(self) -> NetworkTopology:
        if self.scenario == "custom":
            return custom_topology(self.s1, self.s2, self.eve, self.intermediates, self.beta)
        return preset_scenario(self.scenario, self.K, self.placement_seed, self.beta, self.cluster_radius)


def _int(v):
    try:
        return int(v)
    except ValueError:
        raise ValueError(f"expected an integer, got {v!r}") from None


def _float(v):
    try:
        x = float(v)
    except ValueError:
        raise ValueError(f"expected a number, got {v!r}") from None
    if math.isnan(x):
        raise ValueError("NaN is not allowed")
    return x


def _bool(v):
    low = v.lower()
    if low in ("true", "yes", "on", "1"):
        return True
    if low in ("false", "no", "off", "0"):
        return False
    raise ValueError(f"expected true/false, got {v!r}")


def _point(v):
    parts = [p.strip() for p in v.split(",")]
    if len(parts) != 2:
        raise ValueError(f"expected 'x, y', got {v!r}")
    return (_float(parts[0]), _float(parts[1]))


def _points(v):
    pts = tuple(_point(p) for p in v.split(";") if p.strip())
    if not pts:
        raise ValueError("no intermediate coordinates given")
    return pts


def _grid(v):
    if ":" in v:
        parts = [p.strip() for p in v.split(":")]
        if len(parts) != 3:
            raise ValueError(f"expected start:step:stop, got {v!r}")
        start, step, stop = (_float(p) for p in parts)
        g = power_grid(start, stop, step)
    else:
        g = np.array([_float(p) for p in v.split(",") if p.strip()])
    return tuple(check_grid(g).tolist())


def _schemes(v):
    names = [p.strip() for p in v.split(",") if p.strip()]
    if not names:
        raise ValueError("at least one scheme is required")
    out = tuple(SchemeId.parse(n) for n in names)
    if len(set(out)) != len(out):
        raise ValueError("duplicate scheme")
    return out


def _target(v):
    return None if v.lower() == "none" else _float(v)


# key -> (section, attribute, parser)
KEYS = {
    "name": ("scenario", "scenario", str),
    "k": ("scenario", "K", _int),
    "beta": ("scenario", "beta", _float),
    "placement_seed": ("scenario", "placement_seed", _int),
    "cluster_radius": ("scenario", "cluster_radius", _float),
    "s1": ("scenario", "s1", _point),
    "s2": ("scenario", "s2", _point),
    "eve": ("scenario", "eve", _point),
    "intermediates": ("scenario", "intermediates", _points),
    "l": ("powers", "L", _float),
    "grid": ("powers", "power_grid", _grid),
    "schemes": ("simulation", "schemes", _schemes),
    "trials": ("simulation", "trials", _int),
    "master_seed": ("simulation", "master_seed", _int),
    "target_rate": ("simulation", "target_rate", _target),
    "allow_equal_jammers": ("simulation", "allow_equal_jammers", _bool),
    "reciprocal_channels": ("simulation", "reciprocal_channels", _bool),
    "workers": ("simulation", "workers", _int),
    "curves": ("output", "curves", str),
    "summary": ("output", "summary", str),
    "figures": ("output", "figures", _bool),
}
SECTIONS = ("scenario", "powers", "simulation", "output")


RANGE_CHECKS = {
    "scenario": (lambda v: v in SCENARIOS, "unknown scenario"),
    "K": (lambda v: v >= 1, "K must be >= 1"),
    "beta": (lambda v: math.isfinite(v) and v > 0, "beta must be > 0"),
    "cluster_radius": (lambda v: math.isfinite(v) and v > 0, "cluster_radius must be > 0"),
    "L": (lambda v: math.isfinite(v) and v >= 1, "L must be >= 1"),
    "trials": (lambda v: v >= 1, "trials must be >= 1"),
    "master_seed": (lambda v: v >= 0, "master_seed must be >= 0"),
    "placement_seed": (lambda v: v >= 0, "placement_seed must be >= 0"),
    "target_rate": (lambda v: v is None or v >= 0, "target_rate must be >= 0"),
    "workers": (lambda v: v >= 1, "workers must be >= 1"),
    "curves": (bool, "empty output path"),
    "summary": (bool, "empty output path"),
}


def parse_config(text: str) -> SimulationConfig:
    values: dict = {}
    where: dict = {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ConfigError(f"malformed section header {raw.strip()!r}", lineno)
            section = line[1:-1].strip().lower()
            if section not in SECTIONS:
                raise ConfigError(f"unknown section [{section}]", lineno)
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, value = (p.strip() for p in line.split("=", 1))
        spec = KEYS.get(key.lower())
        if spec is None:
            raise ConfigError(f"unknown key {key!r}", lineno)
        sec, attr, conv = spec
        if section is None:
            raise ConfigError(f"key {key!r} appears before any section header", lineno)
        if sec != section:
            raise ConfigError(f"key {key!r} belongs in [{sec}], not [{section}]", lineno)
        if attr in values:
            raise ConfigError(f"duplicate key {key!r}", lineno)
        try:
            values[attr] = conv(value)
        except ValueError as exc:
            raise ConfigError(f"{key}: {exc}", lineno) from None
        where[attr] = lineno

    cfg = replace(SimulationConfig(), **values)
    for name, (ok, msg) in RANGE_CHECKS.items():
        if not ok(getattr(cfg, name)):
            raise ConfigError(f"{msg}, got {getattr(cfg, name)!r}", where.get(name))
    return _check_custom(cfg, where)


def _check_custom(cfg: SimulationConfig, where: dict) -> SimulationConfig:
    coords = ("s1", "s2", "eve", "intermediates")
    if cfg.scenario != "custom":
        given = [c for c in coords if getattr(cfg, c) is not None]
        if given:
            raise ConfigError(f"{given[0]} is only valid with name = custom", where.get(given[0]))
        return cfg
    missing = [c for c in coords if getattr(cfg, c) is None]
    if missing:
        raise ConfigError(f"custom scenario is missing {', '.join(missing)}", where.get("scenario"))
    n = len(cfg.intermediates)
    if "K" in where and cfg.K != n:
        raise ConfigError(f"K = {cfg.K} but {n} intermediates given", where["K"])
    cfg = replace(cfg, K=n)
    try:
        cfg.topology()
    except ValueError as exc:
        raise ConfigError(str(exc), where.get("intermediates")) from None
    return cfg


def load_config(path) -> SimulationConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


def _num(x: float) -> str:
    return repr(float(x))


def format_config(cfg: SimulationConfig) -> str:
    """Serialise a config; ``parse_config(format_config(c)) == c``."""
    lines = ["[scenario]", f"name = {cfg.scenario}"]
    if cfg.scenario == "custom":
        for key in ("s1", "s2", "eve"):
            x, y = getattr(cfg, key)
            lines.append(f"{key} = {_num(x)}, {_num(y)}")
        pts = "; ".join(f"{_num(x)}, {_num(y)}" for x, y in cfg.intermediates)
        lines.append(f"intermediates = {pts}")
    lines += [
        f"K = {cfg.K}",
        f"beta = {_num(cfg.beta)}",
        f"placement_seed = {cfg.placement_seed}",
        f"cluster_radius = {_num(cfg.cluster_radius)}",
        "",
        "[powers]",
        f"grid = {', '.join(_num(p) for p in cfg.power_grid)}",
        f"L = {_num(cfg.L)}",
        "",
        "[simulation]",
        f"schemes = {', '.join(s.value for s in cfg.schemes)}",
        f"trials = {cfg.trials}",
        f"master_seed = {cfg.master_seed}",
        f"target_rate = {'none' if cfg.target_rate is None else _num(cfg.target_rate)}",
        f"allow_equal_jammers = {str(cfg.allow_equal_jammers).lower()}",
        f"reciprocal_channels = {str(cfg.reciprocal_channels).lower()}",
        f"workers = {cfg.workers}",
        "",
        "[output]",
        f"curves = {cfg.curves}",
        f"summary = {cfg.summary}",
        f"figures = {str(cfg.figures).lower()}",
    ]
    return "\n".join(lines) + "\n"
