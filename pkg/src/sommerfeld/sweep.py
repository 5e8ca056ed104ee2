"""Frequency and distance sweeps over every solver, with CSV output.

A sweep evaluates a list of *methods* at each point of a frequency or
distance axis and returns one row (a plain ``dict``) per point and method.
Solver failures are stored in the row's ``error`` column and never abort
the sweep.
"""

from concurrent.futures import ThreadPoolExecutor
import cmath
import csv
from dataclasses import dataclass, field
import enum
import math
import time

import numpy as np

from . import asymptotics, fields
from .core import delta, derived_geometry, numerical_distance
from .errors import ConfigError, SommerfeldError
from .quadrature import QuadratureSpec


class Axis(str, enum.Enum):
    FREQUENCY = "freq"
    DISTANCE = "dist"

    @classmethod
    def parse(cls, value):
        key = str(value).strip().lower()
        aliases = {"freq": cls.FREQUENCY, "frequency": cls.FREQUENCY, "f": cls.FREQUENCY,
                   "dist": cls.DISTANCE, "distance": cls.DISTANCE, "d": cls.DISTANCE,
                   "rho": cls.DISTANCE}
        if isinstance(value, cls):
            return value
        try:
            return aliases[key]
        except KeyError:
            raise ConfigError(f"unknown sweep axis {value!r}") from None


class Scale(str, enum.Enum):
    LINEAR = "linear"
    LOG = "log"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        if key in ("lin", "linear"):
            return cls.LINEAR
        if key in ("log", "logarithmic"):
            return cls.LOG
        raise ConfigError(f"unknown axis scale {value!r}")


class SweepMethod(str, enum.Enum):
    """Solver paths available in a sweep.  ``quantity`` says which field is reported."""

    NI = "ni"
    LOS_CLOSED = "los_closed"
    LOS_NI = "los_ni"
    SPM = "spm"
    ETALON = "etalon"
    ETALON_SURF = "etalon_surf"
    SPACE_WAVE = "space_wave"
    SURFACE_WAVE = "surface_wave"
    NAIVE_NI = "naive_ni"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("-", "_")
        compact = key.replace("_", "")
        for m in cls:
            if key == m.value or compact == m.value.replace("_", ""):
                return m
        raise ConfigError(f"unknown sweep method {value!r}; choose from "
                          + ", ".join(m.value for m in cls))


QUANTITY = {
    SweepMethod.NI: "total",
    SweepMethod.LOS_CLOSED: "los",
    SweepMethod.LOS_NI: "los",
    SweepMethod.SPM: "total",
    SweepMethod.ETALON: "total",
    SweepMethod.ETALON_SURF: "scattered",
    SweepMethod.SPACE_WAVE: "space_wave",
    SweepMethod.SURFACE_WAVE: "surface_wave",
    SweepMethod.NAIVE_NI: "scattered",
}


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep, over which range, and with which solvers."""

    axis: Axis
    start: float
    stop: float
    points: int
    scale: Scale = Scale.LINEAR
    methods: tuple = (SweepMethod.NI,)
    quadrature: QuadratureSpec = field(default_factory=QuadratureSpec)
    naive_exclusion: float = None

    def __post_init__(self):
        object.__setattr__(self, "axis", Axis.parse(self.axis))
        object.__setattr__(self, "scale", Scale.parse(self.scale))
        methods = self.methods
        if isinstance(methods, str):
            methods = [m for m in methods.split(",") if m.strip()]
        object.__setattr__(self, "methods", tuple(SweepMethod.parse(m) for m in methods))
        if not self.methods:
            raise ConfigError("a sweep needs at least one method")
        if not (np.isfinite(self.start) and np.isfinite(self.stop) and self.start < self.stop):
            raise ConfigError(f"sweep range must satisfy start < stop, got {self.start}..{self.stop}")
        if int(self.points) < 2:
            raise ConfigError(f"a sweep needs at least 2 points, got {self.points}")
        if self.scale is Scale.LOG and self.start <= 0:
            raise ConfigError("a logarithmic sweep needs start > 0")
        if SweepMethod.NAIVE_NI in self.methods and not (self.naive_exclusion and self.naive_exclusion > 0):
            raise ConfigError("the naive_ni method needs a positive naive_exclusion half-width")

    def axis_values(self):
        if self.scale is Scale.LOG:
            return np.geomspace(self.start, self.stop, int(self.points))
        return np.linspace(self.start, self.stop, int(self.points))


#: Column order of sweep tables (and of their CSV files).
SWEEP_COLUMNS = (
    "axis", "axis_value", "frequency_hz", "distance_m", "method", "quantity",
    "e_rho_re", "e_rho_im", "e_x_re", "e_x_im",
    "abs_e", "abs_e_rho", "abs_e_x", "phase_x",
    "delta", "numerical_distance", "spm_condition", "grazing_angle_deg",
    "delta_ok", "nd_ok", "spm_ok", "hertzian_ok",
    "evals", "wall_time", "error",
)

_FLOAT_COLUMNS = {"axis_value", "frequency_hz", "distance_m", "e_rho_re", "e_rho_im", "e_x_re",
                  "e_x_im", "abs_e", "abs_e_rho", "abs_e_x", "phase_x", "delta",
                  "numerical_distance", "spm_condition", "grazing_angle_deg", "wall_time",
                  "median_ms", "frequency", "tolerance"}
_INT_COLUMNS = {"evals"}
_BOOL_COLUMNS = {"delta_ok", "nd_ok", "spm_ok", "hertzian_ok", "converged"}


def validity_flags(scenario):
    """Regime indicators that depend only on the scenario."""
    dg = derived_geometry(scenario.geometry)
    spm_param = asymptotics.spm_condition(scenario)[0]
    try:
        d = delta(scenario)
        nd = numerical_distance(scenario)
    except SommerfeldError:
        d = nd = math.nan
    return {
        "delta": d,
        "numerical_distance": nd,
        "spm_condition": spm_param,
        "grazing_angle_deg": math.degrees(dg.phi),
        "delta_ok": bool(d < 0.1),
        "nd_ok": bool(nd < 1.0),
        "spm_ok": bool(spm_param > 1.0),
        "hertzian_ok": bool(scenario.hertzian_ok),
    }


def evaluate_method(method, scenario, quadrature, naive_exclusion=None):
    """The field reported by ``method`` at ``scenario`` (see :data:`QUANTITY`)."""
    method = SweepMethod.parse(method)
    if method is SweepMethod.NI:
        scattered = fields.scattered_numeric(scenario, quadrature)
        out = fields.los_closed_form(scenario) + scattered
        return fields.CylindricalFieldVector(out.e_rho, out.e_x, scattered.info)
    if method is SweepMethod.LOS_CLOSED:
        return fields.los_closed_form(scenario)
    if method is SweepMethod.LOS_NI:
        return fields.los_numeric(scenario, quadrature)
    if method is SweepMethod.SPM:
        return fields.los_closed_form(scenario) + asymptotics.spm_reflected(scenario)
    if method is SweepMethod.ETALON:
        return fields.los_closed_form(scenario) + asymptotics.etalon_scattered(scenario)
    if method is SweepMethod.ETALON_SURF:
        return asymptotics.pseudo_surface_wave(scenario)
    if method is SweepMethod.SPACE_WAVE:
        return fields.space_wave_fresnel(scenario)
    if method is SweepMethod.SURFACE_WAVE:
        b = fields.field_breakdown(scenario, quadrature)
        return fields.CylindricalFieldVector(b.surface_wave.e_rho, b.surface_wave.e_x,
                                             b.scattered.info)
    if method is SweepMethod.NAIVE_NI:
        return fields.naive_scattered(scenario, quadrature, exclusion=naive_exclusion)
    raise ConfigError(f"unhandled method {method}")  # pragma: no cover


def _point_scenario(spec, scenario, value):
    if spec.axis is Axis.FREQUENCY:
        return scenario.with_frequency(value)
    return scenario.with_distance(value)


def _row(spec, scenario, value, method):
    s = _point_scenario(spec, scenario, value)
    row = {
        "axis": spec.axis.value, "axis_value": float(value),
        "frequency_hz": float(s.frequency), "distance_m": float(s.geometry.rho),
        "method": method.value, "quantity": QUANTITY[method],
    }
    row.update(validity_flags(s))
    t0 = time.perf_counter()
    try:
        e = evaluate_method(method, s, spec.quadrature, spec.naive_exclusion)
    except SommerfeldError as exc:
        nan = math.nan
        row.update({"e_rho_re": nan, "e_rho_im": nan, "e_x_re": nan, "e_x_im": nan,
                    "abs_e": nan, "abs_e_rho": nan, "abs_e_x": nan, "phase_x": nan,
                    "evals": 0, "error": f"{type(exc).__name__}: {exc}"})
    else:
        row.update({
            "e_rho_re": e.e_rho.real, "e_rho_im": e.e_rho.imag,
            "e_x_re": e.e_x.real, "e_x_im": e.e_x.imag,
            "abs_e": e.magnitude, "abs_e_rho": abs(e.e_rho), "abs_e_x": abs(e.e_x),
            "phase_x": cmath.phase(e.e_x),
            "evals": int(e.info.get("evals", 0)), "error": "",
        })
    row["wall_time"] = time.perf_counter() - t0
    return {c: row[c] for c in SWEEP_COLUMNS}


def run_sweep(spec, scenario, workers=1):
    """Evaluate every method at every axis point.

    Rows come out ordered by axis point, then by the order of
    ``spec.methods``, whatever the number of ``workers``.
    """
    tasks = [(v, m) for v in spec.axis_values() for m in spec.methods]
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda t: _row(spec, scenario, *t), tasks))
    return [_row(spec, scenario, v, m) for v, m in tasks]


# ---------------------------------------------------------------- CSV


def _format(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def write_csv(table, stream, columns=None):
    """Write ``table`` to an open text stream (header row first)."""
    if not table:
        raise ConfigError("refusing to write an empty table")
    columns = list(columns or table[0].keys())
    writer = csv.writer(stream, lineterminator="\r\n")
    writer.writerow(columns)
    for row in table:
        writer.writerow([_format(row[c]) for c in columns])


def emit_csv(table, path, columns=None):
    """Write ``table`` (a list of row dicts) to ``path`` as CSV.

    Floats are written with ``repr`` so that they read back exactly, and
    booleans as ``true``/``false``.  The column order is ``columns`` or the
    key order of the first row.
    """
    if not table:
        raise ConfigError("refusing to write an empty table")
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            write_csv(table, fh, columns)
    except OSError as exc:
        raise OSError(f"cannot write CSV file {path}: {exc}") from exc


def _parse(column, text):
    if column in _BOOL_COLUMNS:
        return text == "true"
    if column in _INT_COLUMNS:
        return int(text)
    if column in _FLOAT_COLUMNS:
        return float(text)
    return text


def read_csv(path):
    """Read a table written by :func:`emit_csv` back into typed row dicts."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            return [{k: _parse(k, v) for k, v in row.items()} for row in csv.DictReader(fh)]
    except OSError as exc:
        raise OSError(f"cannot read CSV file {path}: {exc}") from exc
