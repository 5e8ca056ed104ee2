"""Flat ``key = value`` run configuration.

Keys mirror the usual parameter-table symbols (case-insensitive)::

    f_min, f_max, f          frequency range / fixed frequency (Hz)
    d, d_min, d_max          horizontal distance / range (m)
    X0, X                    dipole and observer heights (m)
    I, two_h                 dipole current (A) and length (m)
    sigma, eps_r, mu         ground conductivity, relative permittivity, permeability (H/m)
    axis, points, scale      sweep axis (freq|dist), number of points, linear|log
    methods                  comma-separated sweep methods
    quadrature, rel_tol, max_evals
    naive_exclusion          half-width (fraction of k01) for the naive_ni method
    bench_frequencies, bench_tolerances, repetitions

A section header is optional; lines starting with ``#`` or ``;`` are comments.
"""

import configparser
from dataclasses import dataclass

from .bench import DEFAULT_FREQUENCIES, DEFAULT_TOLERANCES, BenchmarkSpec
from .core import MU0, Geometry, Medium, Scenario, Source
from .errors import ConfigError
from .quadrature import QuadratureSpec
from .sweep import Axis, SweepSpec

DEFAULTS = {
    "f_min": "1e6", "f_max": "1e9", "points": "31", "scale": "log", "axis": "freq",
    "x0": "60", "x": "15", "d": "1000", "d_min": "100", "d_max": "30000",
    "i": "1", "two_h": "0.1", "sigma": "4.8", "eps_r": "80", "mu": repr(MU0),
    "methods": "ni,spm,etalon", "quadrature": "simpson", "rel_tol": "1e-6",
    "max_evals": "10000000", "repetitions": "5",
}

KNOWN_KEYS = set(DEFAULTS) | {"f", "naive_exclusion", "bench_frequencies", "bench_tolerances",
                              "bench_methods"}


@dataclass(frozen=True)
class RunConfig:
    values: dict

    def get(self, key, default=None):
        return self.values.get(key, default)

    def number(self, key, default=None):
        raw = self.values.get(key, default)
        if raw is None:
            raise ConfigError(f"missing configuration key {key!r}")
        try:
            return float(raw)
        except (TypeError, ValueError):
            raise ConfigError(f"configuration key {key!r} is not a number: {raw!r}") from None

    def numbers(self, key, default):
        raw = self.values.get(key)
        if raw is None:
            return tuple(default)
        try:
            return tuple(float(v) for v in str(raw).replace(";", ",").split(",") if v.strip())
        except ValueError:
            raise ConfigError(f"configuration key {key!r} must be a list of numbers") from None

    def with_overrides(self, **overrides):
        values = dict(self.values)
        values.update({k.lower(): str(v) for k, v in overrides.items() if v is not None})
        return RunConfig(values)

    # -- builders --------------------------------------------------------

    def scenario(self):
        frequency = self.number("f", self.values["f_min"])
        try:
            return Scenario(
                geometry=Geometry(x0=self.number("x0"), x=self.number("x"), rho=self.number("d")),
                ground=Medium(eps_r=self.number("eps_r"), sigma=self.number("sigma"),
                              mu=self.number("mu")),
                frequency=frequency,
                source=Source(current=self.number("i"), length=self.number("two_h")))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def quadrature(self):
        return QuadratureSpec(method=self.values["quadrature"], rel_tol=self.number("rel_tol"),
                              max_evals=int(self.number("max_evals")))

    def sweep_spec(self):
        axis = Axis.parse(self.values["axis"])
        if axis is Axis.FREQUENCY:
            start, stop = self.number("f_min"), self.number("f_max")
        else:
            start, stop = self.number("d_min"), self.number("d_max")
        exclusion = self.values.get("naive_exclusion")
        return SweepSpec(axis=axis, start=start, stop=stop, points=int(self.number("points")),
                         scale=self.values["scale"], methods=self.values["methods"],
                         quadrature=self.quadrature(),
                         naive_exclusion=float(exclusion) if exclusion else None)

    def benchmark_spec(self):
        methods = self.values.get("bench_methods", "simpson,trapezoid")
        return BenchmarkSpec(
            frequencies=self.numbers("bench_frequencies", DEFAULT_FREQUENCIES),
            tolerances=self.numbers("bench_tolerances", DEFAULT_TOLERANCES),
            methods=tuple(m for m in methods.split(",") if m.strip()),
            repetitions=int(self.number("repetitions")),
            max_evals=int(self.number("max_evals")))


def parse_config(text):
    """Parse configuration text into a :class:`RunConfig` (defaults filled in)."""
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
    body = text if text.lstrip().startswith("[") else "[run]\n" + text
    try:
        parser.read_string(body)
    except configparser.Error as exc:
        raise ConfigError(f"malformed configuration: {exc}") from exc
    values = dict(DEFAULTS)
    for section in parser.sections():
        for key, value in parser.items(section):
            key = key.strip().lower()
            if key not in KNOWN_KEYS:
                raise ConfigError(f"unknown configuration key {key!r}")
            values[key] = value.strip()
    return RunConfig(values)


def load_config(path):
    """Read and parse a configuration file."""
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_config(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read configuration file {path}: {exc}") from exc
