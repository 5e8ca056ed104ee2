"""Numerical integration of complex (and complex-vector) valued functions.

Two rules are provided for finite intervals:

* **adaptive Simpson** -- panels are refined where the classic local error
  estimate ``|S(a,b) - S(a,m) - S(m,b)| / 15`` exceeds a share of the
  tolerance proportional to the panel width (so the allowance halves with
  every subdivision).  Refinement proceeds level by level so that all new
  abscissae of one sweep are evaluated in a single vectorised call.
* **trapezoidal** -- global panel doubling from ``initial_panels`` until two
  successive estimates agree to ``rel_tol``.

Semi-infinite integrals are truncated where a caller-supplied envelope
bounds the discarded tail below ``0.1 * rel_tol * |estimate|``.

Integrands must be vectorised: called with a 1-D array of abscissae they
return an array whose first axis matches it.  Extra trailing axes are
integrated component-wise and the Euclidean norm over them is used for
error control, so a vector field is integrated as one object.
"""

from dataclasses import dataclass, field
import enum
import math
import time

import numpy as np

from .errors import ConfigError, IntegrandError, NonConvergenceError, TruncationError

MIN_REL_TOL = 1e-12
MAX_REL_TOL = 1e-2
#: Subdivision depth at which an adaptive Simpson panel is accepted regardless.
MAX_DEPTH = 50
#: Panels the adaptive Simpson rule starts from.
SIMPSON_INITIAL_PANELS = 8
#: Largest number of abscissae passed to the integrand in one call.
EVAL_CHUNK = 1 << 18
#: Safety factor on the tail allowance of a truncated semi-infinite integral.
TAIL_FRACTION = 0.1
#: Hard upper limit on the truncation point of a semi-infinite integral.
TRUNCATION_CAP = 50.0


class Method(str, enum.Enum):
    """Finite-interval quadrature rule."""

    ADAPTIVE_SIMPSON = "simpson"
    TRAPEZOIDAL = "trapezoid"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("-", "_")
        aliases = {"simpson": cls.ADAPTIVE_SIMPSON, "adaptive_simpson": cls.ADAPTIVE_SIMPSON,
                   "adaptivesimpson": cls.ADAPTIVE_SIMPSON,
                   "trapezoid": cls.TRAPEZOIDAL, "trapezoidal": cls.TRAPEZOIDAL,
                   "trapz": cls.TRAPEZOIDAL}
        try:
            return aliases[key]
        except KeyError:
            raise ConfigError(f"unknown quadrature method {value!r}") from None


@dataclass(frozen=True)
class QuadratureSpec:
    """Accuracy and budget settings for one integration."""

    method: Method = Method.ADAPTIVE_SIMPSON
    rel_tol: float = 1e-6
    max_evals: int = 10_000_000
    initial_panels: int = 64

    def __post_init__(self):
        object.__setattr__(self, "method", Method.parse(self.method))
        if not (MIN_REL_TOL <= self.rel_tol <= MAX_REL_TOL):
            raise ConfigError(
                f"rel_tol must lie in [{MIN_REL_TOL:g}, {MAX_REL_TOL:g}], got {self.rel_tol!r}")
        if int(self.max_evals) < 100:
            raise ConfigError(f"max_evals must be >= 100, got {self.max_evals!r}")
        if int(self.initial_panels) < 1:
            raise ConfigError(f"initial_panels must be >= 1, got {self.initial_panels!r}")


@dataclass
class QuadratureResult:
    """Integral estimate with its bookkeeping.

    ``upper_limit`` is the effective upper integration limit (the
    truncation point for semi-infinite integrals).
    """

    value: complex
    err_estimate: float
    evals: int
    wall_time: float
    upper_limit: float = math.nan
    info: dict = field(default_factory=dict)


def _norm(v):
    """Euclidean norm over every axis but the first (or of a plain value)."""
    v = np.asarray(v)
    if v.ndim <= 1:
        return np.abs(v)
    return np.sqrt(np.sum(np.abs(v.reshape(v.shape[0], -1)) ** 2, axis=1))


def _total_norm(v):
    return float(np.sqrt(np.sum(np.abs(np.asarray(v)) ** 2)))


def _evaluate(f, x):
    """Call ``f`` on ``x`` in chunks; check finiteness; return complex array."""
    parts = []
    for start in range(0, x.size, EVAL_CHUNK):
        xs = x[start:start + EVAL_CHUNK]
        y = np.asarray(f(xs), dtype=complex)
        if y.shape[:1] != xs.shape:
            raise ValueError(
                f"integrand returned shape {y.shape} for {xs.size} abscissae; it must be vectorised")
        bad = ~np.isfinite(y.reshape(y.shape[0], -1)).all(axis=1)
        if bad.any():
            where = float(xs[np.argmax(bad)])
            raise IntegrandError(f"integrand is not finite at x = {where!r}", abscissa=where)
        parts.append(y)
    return parts[0] if len(parts) == 1 else np.concatenate(parts)


def _scalar(value):
    value = np.asarray(value)
    return complex(value) if value.ndim == 0 else value


# ------------------------------------------------------------ adaptive Simpson

_FRACTIONS = np.array([0.0, 0.25, 0.5, 0.75, 1.0])
_REFINE = np.array([0.125, 0.375, 0.625, 0.875])


def _simpson(f, a, b, rel_tol, max_evals, scale=0.0, n_initial=SIMPSON_INITIAL_PANELS):
    """Level-synchronous adaptive Simpson; returns a :class:`QuadratureResult`.

    The absolute allowance is ``rel_tol * max(|I|, scale)``; ``scale`` lets a
    caller integrating one piece of a larger integral supply its magnitude.
    """
    t0 = time.perf_counter()
    width = b - a
    nodes = np.linspace(a, b, 4 * n_initial + 1)
    fv = _evaluate(f, nodes)
    evals = nodes.size
    idx = 4 * np.arange(n_initial)[:, None] + np.arange(5)[None, :]
    left = nodes[0:-1:4].copy()
    right = np.append(nodes[4:-1:4], b)
    vals = fv[idx]                      # (panels, 5, *shape)
    depth = np.zeros(n_initial, dtype=int)
    extra = (1,) * (vals.ndim - 2)

    while True:
        h = (right - left).reshape((-1,) + extra)
        f0, f1, f2, f3, f4 = (vals[:, j] for j in range(5))
        whole = h / 6.0 * (f0 + 4.0 * f2 + f4)
        halves = h / 12.0 * (f0 + 4.0 * f1 + 2.0 * f2 + 4.0 * f3 + f4)
        diff = halves - whole
        err = _norm(diff) / 15.0
        contrib = halves + diff / 15.0
        total = contrib.sum(axis=0)
        floor = 1e-15 * float(np.sum(_norm(contrib)))
        allowance = rel_tol * max(_total_norm(total), scale, floor)
        tol = allowance * (right - left) / width
        split = (err > tol) & (depth < MAX_DEPTH)
        n_split = int(split.sum())
        result = QuadratureResult(value=_scalar(total), err_estimate=float(err.sum()),
                                  evals=evals, wall_time=time.perf_counter() - t0,
                                  upper_limit=float(b),
                                  info={"panels": int(left.size), "max_depth": int(depth.max())})
        if n_split == 0:
            if np.any((err > tol) & (depth >= MAX_DEPTH)):
                result.info["depth_capped"] = True
            return result
        if evals + 4 * n_split > max_evals:
            raise NonConvergenceError(
                f"adaptive Simpson exhausted {max_evals} evaluations "
                f"(estimate {result.value}, error {result.err_estimate:.3g})", best=result)

        sl, sr, sv = left[split], right[split], vals[split]
        hs = sr - sl
        xnew = (sl[:, None] + hs[:, None] * _REFINE[None, :]).ravel()
        g = _evaluate(f, xnew).reshape((n_split, 4) + vals.shape[2:])
        evals += xnew.size
        mid = sl + 0.5 * hs
        lv = np.stack([sv[:, 0], g[:, 0], sv[:, 1], g[:, 1], sv[:, 2]], axis=1)
        rv = np.stack([sv[:, 2], g[:, 2], sv[:, 3], g[:, 3], sv[:, 4]], axis=1)
        keep = ~split
        new_depth = depth[split] + 1
        left = np.concatenate([left[keep], sl, mid])
        right = np.concatenate([right[keep], mid, sr])
        vals = np.concatenate([vals[keep], lv, rv])
        depth = np.concatenate([depth[keep], new_depth, new_depth])
        order = np.argsort(left, kind="stable")
        left, right, vals, depth = left[order], right[order], vals[order], depth[order]


# ------------------------------------------------------------- trapezoidal


def _trapezoid(f, a, b, rel_tol, max_evals, initial_panels, scale=0.0):
    t0 = time.perf_counter()
    n = int(initial_panels)
    x = np.linspace(a, b, n + 1)
    fx = _evaluate(f, x)
    evals = x.size
    h = (b - a) / n
    total = h * (fx.sum(axis=0) - 0.5 * (fx[0] + fx[-1]))
    prev = None
    while True:
        if prev is not None:
            change = _total_norm(total - prev)
            if change < rel_tol * max(_total_norm(total), scale):
                return QuadratureResult(value=_scalar(total), err_estimate=change,
                                        evals=evals, wall_time=time.perf_counter() - t0,
                                        upper_limit=float(b), info={"panels": n})
        best = QuadratureResult(
            value=_scalar(total),
            err_estimate=math.inf if prev is None else _total_norm(total - prev),
            evals=evals, wall_time=time.perf_counter() - t0, upper_limit=float(b),
            info={"panels": n})
        if evals + n > max_evals:
            raise NonConvergenceError(
                f"trapezoidal rule exhausted {max_evals} evaluations at {n} panels", best=best)
        mids = a + h * (np.arange(n) + 0.5)
        msum = np.zeros_like(total)
        for start in range(0, n, EVAL_CHUNK):
            msum = msum + _evaluate(f, mids[start:start + EVAL_CHUNK]).sum(axis=0)
        evals += n
        prev = total
        total = 0.5 * total + 0.5 * h * msum
        n *= 2
        h *= 0.5


def _panel_hint(panels, a, b):
    if panels is None:
        return 0
    n = panels(a, b) if callable(panels) else panels
    return max(0, int(math.ceil(n)))


def _integrate(f, a, b, spec, scale=0.0, panels=None):
    hint = _panel_hint(panels, a, b)
    if spec.method is Method.ADAPTIVE_SIMPSON:
        return _simpson(f, a, b, spec.rel_tol, int(spec.max_evals), scale=scale,
                        n_initial=max(SIMPSON_INITIAL_PANELS, hint))
    return _trapezoid(f, a, b, spec.rel_tol, int(spec.max_evals),
                      max(int(spec.initial_panels), hint), scale=scale)


def integrate_finite(f, a, b, spec=None, panels=None):
    """Integrate ``f`` over ``[a, b]`` with the rule selected in ``spec``.

    ``panels`` optionally raises the number of starting panels (an int or a
    callable ``panels(a, b)``).  Oscillatory integrands need at least one
    panel per half period, otherwise the local error tests of coarse panels
    can agree by aliasing.

    Raises :class:`NonConvergenceError` (carrying the best estimate) when the
    evaluation budget is exhausted and :class:`IntegrandError` when ``f``
    returns a non-finite value.
    """
    spec = QuadratureSpec() if spec is None else spec
    a, b = float(a), float(b)
    if not a < b:
        raise ConfigError(f"integration limits must satisfy a < b, got [{a}, {b}]")
    return _integrate(f, a, b, spec, panels=panels)


# ----------------------------------------------------------- semi-infinite


def _envelope_grid(start, cap, points=4000):
    u = np.linspace(0.0, 1.0, points + 1)
    return start + (cap - start) * u ** 4


def tail_bounds(envelope, start=0.0, cap=TRUNCATION_CAP, points=4000):
    """Upper bounds on ``int_{t_j}^{inf} envelope`` on a grid ``t_j``.

    Beyond the envelope's sampled maximum the function is decreasing, so a
    left Riemann sum over-estimates the integral up to ``cap``.  The part
    beyond ``cap`` is bounded by continuing the last sampled step as a
    geometric series; it is infinite when the envelope has stopped
    decaying there.  Returns ``(t, bound, envelope(t))``; bounds before the
    peak are ``inf``.
    """
    t = _envelope_grid(start, cap, points)
    env = np.asarray(envelope(t), dtype=float)
    if env.shape != t.shape or np.any(np.isnan(env)) or np.any(env < 0):
        raise ValueError("envelope must be vectorised, real and non-negative")
    steps = env[:-1] * np.diff(t)
    ratio = env[-1] / env[-2] if env[-2] > 0 else 0.0
    if env[-1] == 0.0:
        beyond = 0.0
    elif ratio < 1.0:
        beyond = steps[-1] * ratio / (1.0 - ratio)
    else:
        beyond = math.inf
    tail = np.append(np.cumsum(steps[::-1])[::-1], 0.0) + beyond
    peak = int(np.argmax(env))
    tail[:peak] = np.inf
    return t, tail, env


def integrate_semi_infinite(f, envelope, spec=None, start=0.0, cap=TRUNCATION_CAP, panels=None):
    """Integrate ``f`` over ``[start, inf)`` using ``envelope >= |f|`` for truncation.

    The truncation point ``t_max`` is the first grid point where the tail
    bound drops below ``0.1 * rel_tol * |estimate|``; when the estimate
    shrinks after integrating, the range is extended and only the new
    piece is integrated.  ``t_max`` is stored in ``result.upper_limit``.
    ``panels`` is passed on to :func:`integrate_finite` for every piece.
    """
    spec = QuadratureSpec() if spec is None else spec
    t0 = time.perf_counter()
    t, tail, env = tail_bounds(envelope, start, cap)
    if not np.isfinite(env).all():
        raise TruncationError("envelope is not finite on the truncation grid")

    def cut(magnitude):
        ok = np.nonzero(tail <= TAIL_FRACTION * spec.rel_tol * magnitude)[0]
        ok = ok[t[ok] > start]
        if ok.size == 0:
            raise TruncationError(
                f"envelope tail does not fall below {TAIL_FRACTION}*rel_tol*|I| "
                f"before xi = {cap}")
        return float(t[ok[0]])

    # A first guess from the envelope's own integral (an upper bound on |I|).
    guess = float(np.sum(env[:-1] * np.diff(t)))
    if guess == 0.0:
        return QuadratureResult(value=0j, err_estimate=0.0, evals=0,
                                wall_time=time.perf_counter() - t0, upper_limit=start)
    upper = cut(guess)
    result = _integrate(f, start, upper, spec, panels=panels)
    total, evals, err = result.value, result.evals, result.err_estimate
    while True:
        magnitude = _total_norm(total)
        needed = cut(magnitude) if magnitude > 0 else cap
        if needed <= upper:
            break
        piece = _integrate(f, upper, needed, spec, scale=magnitude, panels=panels)
        total = total + piece.value
        evals += piece.evals
        err += piece.err_estimate
        upper = needed
        if evals > spec.max_evals:
            best = QuadratureResult(_scalar(total), err, evals, time.perf_counter() - t0, upper)
            raise NonConvergenceError("semi-infinite integration exhausted its budget", best=best)
    tail_bound = float(np.interp(upper, t, np.where(np.isfinite(tail), tail, 0.0)))
    return QuadratureResult(value=_scalar(total), err_estimate=err, evals=evals,
                            wall_time=time.perf_counter() - t0, upper_limit=upper,
                            info={"tail_bound": tail_bound})
