"""Timing and evaluation-count benchmark of the two quadrature rules.

For each frequency, tolerance and rule the scattered field is computed
``repetitions`` times after one discarded warm-up run; the median wall
time is reported together with the number of integrand evaluations, which
is the hardware-independent measure of cost.
"""

from dataclasses import dataclass
import statistics
import time

from .errors import ConfigError, NonConvergenceError
from .fields import scattered_numeric
from .quadrature import Method, QuadratureSpec

DEFAULT_FREQUENCIES = (1e6, 3e6, 10e6, 30e6, 80e6, 100e6, 300e6, 1e9)
DEFAULT_TOLERANCES = (1e-3, 1e-6, 1e-9)

BENCH_COLUMNS = ("frequency", "tolerance", "method", "median_ms", "evals", "converged", "error")


@dataclass(frozen=True)
class BenchmarkSpec:
    frequencies: tuple = DEFAULT_FREQUENCIES
    tolerances: tuple = DEFAULT_TOLERANCES
    methods: tuple = (Method.ADAPTIVE_SIMPSON, Method.TRAPEZOIDAL)
    repetitions: int = 5
    max_evals: int = 10_000_000

    def __post_init__(self):
        object.__setattr__(self, "frequencies", tuple(float(f) for f in self.frequencies))
        object.__setattr__(self, "tolerances", tuple(float(t) for t in self.tolerances))
        object.__setattr__(self, "methods", tuple(Method.parse(m) for m in self.methods))
        if not self.frequencies or any(f <= 0 for f in self.frequencies):
            raise ConfigError("benchmark frequencies must be positive")
        if not self.methods:
            raise ConfigError("benchmark needs at least one quadrature method")
        if int(self.repetitions) < 1:
            raise ConfigError("benchmark repetitions must be >= 1")
        for tol in self.tolerances:
            QuadratureSpec(rel_tol=tol, max_evals=self.max_evals)   # validates bounds

    def quadrature(self, method, tol):
        return QuadratureSpec(method=method, rel_tol=tol, max_evals=self.max_evals)


def _timed(scenario, quad):
    t0 = time.perf_counter()
    try:
        e = scattered_numeric(scenario, quad)
    except NonConvergenceError as exc:
        evals = exc.best.evals if exc.best is not None else quad.max_evals
        return time.perf_counter() - t0, evals, False, f"NonConvergenceError: {exc}"
    return time.perf_counter() - t0, int(e.info["evals"]), True, ""


def run_benchmark(spec, scenario):
    """One row per (frequency, tolerance, method), in that nesting order."""
    rows = []
    for f in spec.frequencies:
        s = scenario.with_frequency(f)
        for tol in spec.tolerances:
            for method in spec.methods:
                quad = spec.quadrature(method, tol)
                _timed(s, quad)                         # warm-up, discarded
                runs = [_timed(s, quad) for _ in range(int(spec.repetitions))]
                times = [r[0] for r in runs]
                _, evals, converged, error = runs[-1]
                rows.append({"frequency": f, "tolerance": tol, "method": method.value,
                             "median_ms": 1e3 * statistics.median(times), "evals": evals,
                             "converged": converged, "error": error})
    return rows
