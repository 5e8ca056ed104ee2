"""Bessel functions J0/J1 of real argument and the complex error function.

All functions accept scalars or numpy arrays and return the same shape.

Bessel functions use three zones:

* ``z < 8`` -- the ascending power series;
* ``8 <= z < 25`` -- the integral representation
  ``J_n(z) = (1/2pi) * int cos(n*t - z*sin t) dt`` evaluated with the
  periodic trapezoidal rule, which converges geometrically once the number
  of nodes exceeds ``z``;
* ``z >= 25`` -- Hankel's asymptotic expansion with amplitude/phase
  polynomials ``P`` and ``Q``.

The complex error function is built on the Faddeeva function
``w(z) = exp(-z**2) * erfc(-i*z)``, evaluated with Weideman's rational
expansion in the upper half-plane and a Laplace continued fraction for
large ``|z|``.  The lower half-plane follows from
``w(z) = 2*exp(-z**2) - w(-z)``.
"""

import math

import numpy as np

from .errors import DomainError

_SERIES_LIMIT = 8.0
_ASYMPTOTIC_LIMIT = 25.0
_TRAPEZOID_NODES = 64
_HANKEL_TERMS = 16

#: Largest admissible real part of ``-z**2`` before ``exp`` overflows.
_EXP_LIMIT = 700.0


# ---------------------------------------------------------------- Bessel


def _bessel_series(z, order):
    half = 0.5 * z
    h2 = half * half
    term = np.ones_like(z) if order == 0 else half.copy()
    total = term.copy()
    for k in range(1, 60):
        term = term * (-h2) / (k * (k + order))
        total = total + term
    return total


def _bessel_trapezoid(z, order):
    n = _TRAPEZOID_NODES
    theta = 2.0 * math.pi * np.arange(n) / n
    sin_t = np.sin(theta)
    out = np.empty_like(z)
    chunk = 4096
    for start in range(0, z.size, chunk):
        zz = z[start:start + chunk, None]
        out[start:start + chunk] = np.cos(order * theta[None, :] - zz * sin_t[None, :]).mean(axis=1)
    return out


def _bessel_hankel(z, order):
    mu = 4.0 * order * order
    p = np.ones_like(z)
    q = np.zeros_like(z)
    term = np.ones_like(z)
    inv8z = 1.0 / (8.0 * z)
    for k in range(1, 2 * _HANKEL_TERMS):
        term = term * (mu - (2 * k - 1) ** 2) * inv8z / k
        if k % 2:
            q = q + (-1) ** ((k - 1) // 2) * term
        else:
            p = p + (-1) ** (k // 2) * term
    c, s = np.cos(z), np.sin(z)
    # cos/sin of z - (2n+1)pi/4 written without forming the shifted argument,
    # which would lose the last digits of the phase for very large z.
    if order == 0:
        cos_chi, sin_chi = (c + s), (s - c)
    else:
        cos_chi, sin_chi = (s - c), -(s + c)
    amp = np.sqrt(1.0 / (math.pi * z))
    return amp * (p * cos_chi - q * sin_chi)


def _bessel(z, order):
    z = np.asarray(z, dtype=float)
    if np.any(z < 0) or not np.all(np.isfinite(z)):
        raise DomainError("Bessel functions are evaluated for finite z >= 0 only")
    flat = z.ravel()
    out = np.empty_like(flat)
    low = flat < _SERIES_LIMIT
    high = flat >= _ASYMPTOTIC_LIMIT
    mid = ~(low | high)
    if low.any():
        out[low] = _bessel_series(flat[low], order)
    if mid.any():
        out[mid] = _bessel_trapezoid(flat[mid], order)
    if high.any():
        out[high] = _bessel_hankel(flat[high], order)
    out = out.reshape(z.shape)
    return out[()] if out.ndim == 0 else out


def bessel_j0(z):
    """Bessel function of the first kind of order zero, ``z >= 0``."""
    return _bessel(z, 0)


def bessel_j1(z):
    """Bessel function of the first kind of order one, ``z >= 0``."""
    return _bessel(z, 1)


# --------------------------------------------------------------- Faddeeva


def _weideman_coefficients(n):
    m = 2 * n
    k = np.arange(-m + 1, m)
    scale = math.sqrt(n / math.sqrt(2.0))
    t = scale * np.tan(k * math.pi / (2 * m))
    f = np.concatenate([[0.0], np.exp(-t * t) * (scale * scale + t * t)])
    a = np.real(np.fft.fft(np.fft.fftshift(f))) / (2 * m)
    return scale, np.flipud(a[1:n + 1])


_W_SCALE, _W_COEFFS = _weideman_coefficients(36)
_CF_RADIUS = 12.0
_CF_TERMS = 40
_INV_SQRT_PI = 1.0 / math.sqrt(math.pi)


def _w_rational(z):
    lz = _W_SCALE - 1j * z
    big_z = (_W_SCALE + 1j * z) / lz
    poly = np.polyval(_W_COEFFS, big_z)
    return 2.0 * poly / (lz * lz) + _INV_SQRT_PI / lz


def _w_continued_fraction(z):
    # w(z) = (i/sqrt(pi)) / (z - (1/2)/(z - 1/(z - (3/2)/(z - ...))))
    tail = z
    for k in range(_CF_TERMS, 0, -1):
        tail = z - (0.5 * k) / tail
    return 1j * _INV_SQRT_PI / tail


def _w_upper(z):
    out = np.empty_like(z)
    far = np.abs(z) >= _CF_RADIUS
    if far.any():
        out[far] = _w_continued_fraction(z[far])
    if (~far).any():
        out[~far] = _w_rational(z[~far])
    return out


def faddeeva(z):
    """Faddeeva function ``w(z) = exp(-z**2) * erfc(-i*z)``.

    Raises :class:`DomainError` in the lower half-plane when
    ``exp(-z**2)`` would overflow.
    """
    z = np.asarray(z, dtype=complex)
    flat = z.ravel()
    out = np.empty_like(flat)
    upper = flat.imag >= 0
    if upper.any():
        out[upper] = _w_upper(flat[upper])
    lower = ~upper
    if lower.any():
        zl = flat[lower]
        if np.any((zl.imag ** 2 - zl.real ** 2) > _EXP_LIMIT):
            raise DomainError("faddeeva: exp(-z**2) overflows for this argument")
        out[lower] = 2.0 * np.exp(-zl * zl) - _w_upper(-zl)
    out = out.reshape(z.shape)
    return out[()] if out.ndim == 0 else out


# ---------------------------------------------------------- error function

_ERF_SERIES_RADIUS = 2.0


def _erf_series(z):
    z2 = z * z
    term = z.copy()
    total = z.copy()
    for n in range(1, 80):
        term = term * (-z2) / n
        total = total + term / (2 * n + 1)
    return 2.0 * _INV_SQRT_PI * total


def _check_guard(z):
    if not np.all(np.isfinite(z)):
        raise DomainError("error function argument must be finite")
    excess = z.imag ** 2 - z.real ** 2
    if np.any(excess > _EXP_LIMIT):
        bad = z.ravel()[np.argmax(excess.ravel())]
        raise DomainError(
            f"error function argument {bad!r} is outside the guard region "
            f"(Im(z)**2 - Re(z)**2 must not exceed {_EXP_LIMIT:g})")


def _erfc_right(z):
    """erfc for Re(z) >= 0 via the Faddeeva function (no cancellation)."""
    return np.exp(-z * z) * _w_upper(1j * z)


def erfc_complex(z):
    """Complementary error function of complex argument."""
    z = np.asarray(z, dtype=complex)
    _check_guard(z)
    flat = z.ravel()
    out = np.empty_like(flat)
    right = flat.real >= 0
    if right.any():
        out[right] = _erfc_right(flat[right])
    if (~right).any():
        out[~right] = 2.0 - _erfc_right(-flat[~right])
    out = out.reshape(z.shape)
    return out[()] if out.ndim == 0 else out


def erf_complex(z):
    """Error function of complex argument.

    Uses the Maclaurin series for ``|z| < 2`` and ``1 - erfc`` (with the
    odd symmetry for ``Re z < 0``) elsewhere.  Arguments with
    ``Im(z)**2 - Re(z)**2 > 700`` raise :class:`DomainError`: the function
    itself overflows there.
    """
    z = np.asarray(z, dtype=complex)
    _check_guard(z)
    flat = z.ravel()
    out = np.empty_like(flat)
    near = np.abs(flat) < _ERF_SERIES_RADIUS
    if near.any():
        out[near] = _erf_series(flat[near])
    far = ~near
    if far.any():
        zf = flat[far]
        sign = np.where(zf.real >= 0, 1.0, -1.0)
        out[far] = sign * (1.0 - _erfc_right(sign * zf))
    out = out.reshape(z.shape)
    return out[()] if out.ndim == 0 else out
