"""Reference solvers for the field of a vertical dipole above lossy ground.

* :func:`los_closed_form` -- the exact free-space field of the dipole;
* :func:`los_numeric` / :func:`scattered_numeric` -- the direct and the
  ground-scattered fields written as a finite integral over ``[0, pi/2]``
  plus a rapidly decaying semi-infinite integral in the angular variable
  ``xi``, with Bessel-function kernels instead of Hankel functions;
* :func:`space_wave_fresnel` -- direct field plus the image-source field
  weighted by the plane-wave Fresnel coefficient;
* :func:`field_breakdown` -- total, space-wave and surface-wave split;
* :func:`naive_scattered` -- the original Hankel-function spectral integral
  over ``k_rho`` with small intervals around its singular points removed,
  kept only to show how badly that route behaves.

Field vectors are expressed in cylindrical components ``(E_rho, E_x)``
with ``x`` the height above ground; there is no azimuthal component.
"""

from dataclasses import dataclass, field
import math

import numpy as np
from scipy.special import hankel1, hankel2

from .core import C0, EPS0, EPS1, csqrt, derived_geometry
from .errors import ConfigError, DomainError, SingularPointError
from .quadrature import QuadratureSpec, integrate_finite, integrate_semi_infinite
from .specfun import bessel_j0, bessel_j1

#: Impedance of free space.  Written as 1/(c*eps0) rather than sqrt(mu0/eps0):
#: the quoted eps0 and mu0 are not exactly consistent with c, and the
#: wavenumber is defined as omega/c throughout.
ETA0 = 1.0 / (C0 * EPS0)

RADIAL_KERNELS = ("exact", "j0")


@dataclass(frozen=True)
class CylindricalFieldVector:
    """Complex field ``(E_rho, E_x)`` in V/m.

    ``info`` carries solver metadata (evaluation counts, validity flags)
    and is ignored by comparisons and arithmetic.
    """

    e_rho: complex
    e_x: complex
    info: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "e_rho", complex(self.e_rho))
        object.__setattr__(self, "e_x", complex(self.e_x))
        if not (np.isfinite(self.e_rho) and np.isfinite(self.e_x)):
            raise DomainError("field components must be finite")

    @classmethod
    def from_array(cls, values, info=None):
        return cls(values[0], values[1], dict(info or {}))

    def as_array(self):
        return np.array([self.e_rho, self.e_x])

    @property
    def magnitude(self):
        """Euclidean norm ``sqrt(|E_rho|**2 + |E_x|**2)``."""
        return math.hypot(abs(self.e_rho), abs(self.e_x))

    def __add__(self, other):
        return CylindricalFieldVector(self.e_rho + other.e_rho, self.e_x + other.e_x)

    def __sub__(self, other):
        return CylindricalFieldVector(self.e_rho - other.e_rho, self.e_x - other.e_x)

    def __mul__(self, scalar):
        return CylindricalFieldVector(scalar * self.e_rho, scalar * self.e_x)

    __rmul__ = __mul__

    def __neg__(self):
        return CylindricalFieldVector(-self.e_rho, -self.e_x)


def relative_difference(a, b):
    """``|a - b| / |b|`` for field vectors, using the Euclidean norm."""
    return (a - b).magnitude / b.magnitude


def magnitude_difference(a, b):
    """``| |a| - |b| | / |b|``: compares field strengths, ignoring phase."""
    return abs(a.magnitude - b.magnitude) / b.magnitude


@dataclass(frozen=True)
class FieldBreakdown:
    """The decomposition of the field at one observation point."""

    los: CylindricalFieldVector
    scattered: CylindricalFieldVector
    total: CylindricalFieldVector
    space_wave: CylindricalFieldVector
    surface_wave: CylindricalFieldVector


# ---------------------------------------------------------- reflection


def reflection_coeff(xi, scenario):
    """TM (vertical polarisation) reflection coefficient at incidence angle ``xi``.

    Accepts real or complex ``xi`` (scalar or array); complex values give
    the analytic continuation used to locate the pole.
    """
    k1, k2, e2 = scenario.k01, scenario.k02, scenario.eps2
    xi = np.asarray(xi)
    root = csqrt(k2 * k2 - (k1 * np.sin(xi)) ** 2)
    # cos(pi/2) is 6e-17 in floating point; grazing incidence must give R = -1 exactly
    cos_xi = np.where(np.abs(xi) == math.pi / 2, 0.0, np.cos(xi))
    num = e2 * k1 * cos_xi
    out = (num - EPS1 * root) / (num + EPS1 * root)
    return out[()] if out.ndim == 0 else out


def reflection_coeff_hyperbolic(xi, scenario):
    """Reflection coefficient on the imaginary leg ``pi/2 - i*xi`` of the path, ``xi >= 0``."""
    k1, k2, e2 = scenario.k01, scenario.k02, scenario.eps2
    xi = np.asarray(xi, dtype=float)
    root = csqrt(k2 * k2 - (k1 * np.cosh(xi)) ** 2)
    num = 1j * e2 * k1 * np.sinh(xi)
    out = (num - EPS1 * root) / (num + EPS1 * root)
    return out[()] if out.ndim == 0 else out


def max_hyperbolic_reflection(scenario, upper=50.0, points=4001):
    """Largest sampled ``|R'(xi)|`` on ``[0, upper]`` (used in the tail bound)."""
    xi = np.concatenate([np.linspace(0.0, 1.0, points), np.linspace(1.0, upper, points)])
    return float(np.max(np.abs(reflection_coeff_hyperbolic(xi, scenario))))


# ---------------------------------------------------------- closed form


def dipole_field(scenario, source_height, moment=None):
    """Free-space field of a vertical dipole at ``(rho=0, x=source_height)``.

    Includes the radiation, induction and quasi-static terms.
    """
    g = scenario.geometry
    dx = g.x - source_height
    r = math.hypot(g.rho, dx)
    if r == 0.0:
        raise SingularPointError("observer coincides with the dipole")
    omega, k = scenario.omega, scenario.k01
    p = scenario.moment if moment is None else moment
    cos_t, sin_t = dx / r, g.rho / r
    eps = EPS0 * EPS1
    pre = -1j * omega * p / (4.0 * math.pi) * np.exp(1j * k * r)
    omega_mu = k * k / (omega * eps)      # omega*mu0 with mu0 = 1/(c^2 eps0)
    radial = (-1j * omega_mu / (2 * r) + 3 * ETA0 / (2 * r * r)
              - 3.0 / (2j * omega * eps * r ** 3)) * (2.0 * sin_t * cos_t)
    vertical = (1j * omega_mu / r * sin_t * sin_t
                + (ETA0 / (r * r) - 1.0 / (1j * omega * eps * r ** 3)) * (3.0 * cos_t * cos_t - 1.0))
    return CylindricalFieldVector(pre * radial, pre * vertical)


def los_closed_form(scenario):
    """Direct field of the dipole at the observer, near and far zone included."""
    return dipole_field(scenario, scenario.geometry.x0)


# ---------------------------------------------------- spectral integrals


def _radial_kernel(z, radial):
    if radial == "exact":
        return 1j * bessel_j1(z)
    if radial == "j0":
        return bessel_j0(z)
    raise ConfigError(f"radial kernel must be one of {RADIAL_KERNELS}, got {radial!r}")


def _integrands(scenario, height, sign, reflected, radial):
    """The finite and semi-infinite angular integrands, vectorised, ``(n, 2)`` valued."""
    k = scenario.k01
    rho = scenario.geometry.rho
    kh = k * height

    def finite(xi):
        xi = np.asarray(xi, dtype=float)
        s, c = np.sin(xi), np.cos(xi)
        z = rho * k * s
        weight = s * s * np.exp(1j * kh * c)
        if reflected:
            weight = weight * reflection_coeff(xi, scenario)
        return np.stack([sign * c * _radial_kernel(z, radial) * weight,
                         -s * bessel_j0(z) * weight], axis=-1)

    def semi(xi):
        xi = np.asarray(xi, dtype=float)
        sh, ch = np.sinh(xi), np.cosh(xi)
        z = rho * k * ch
        weight = ch * ch * np.exp(-kh * sh)
        if reflected:
            weight = weight * reflection_coeff_hyperbolic(xi, scenario)
        return np.stack([1j * sign * sh * _radial_kernel(z, radial) * weight,
                         -ch * bessel_j0(z) * weight], axis=-1)

    return finite, semi


def _spectral_field(scenario, spec, height, sign, reflected, radial):
    """Finite + semi-infinite angular integrals for a source at vertical offset ``height``."""
    spec = QuadratureSpec() if spec is None else spec
    k = scenario.k01
    rho = scenario.geometry.rho
    kh = k * height
    finite, semi = _integrands(scenario, height, sign, reflected, radial)

    r_max = max(1.0, max_hyperbolic_reflection(scenario)) if reflected else 1.0

    def envelope(xi):
        sh, ch = np.sinh(xi), np.cosh(xi)
        with np.errstate(over="ignore", invalid="ignore"):
            env = r_max * np.sqrt(sh * sh + ch * ch) * ch * ch * np.exp(-kh * sh)
        return np.nan_to_num(env, nan=0.0, posinf=0.0)

    # one starting panel per half period of the combined oscillation
    def finite_panels(a, b):
        return (rho * k * abs(math.sin(b) - math.sin(a)) + kh * abs(math.cos(a) - math.cos(b))) / math.pi

    def semi_panels(a, b):
        return rho * k * abs(math.cosh(b) - math.cosh(a)) / math.pi

    first = integrate_finite(finite, 0.0, math.pi / 2, spec, panels=finite_panels)
    second = integrate_semi_infinite(semi, envelope, spec, panels=semi_panels)
    pre = -1j * scenario.moment * k ** 3 / (4.0 * math.pi * EPS0 * EPS1)
    value = pre * (np.asarray(first.value) - 1j * np.asarray(second.value))
    info = {
        "evals": first.evals + second.evals,
        "wall_time": first.wall_time + second.wall_time,
        "err_estimate": abs(pre) * math.hypot(first.err_estimate, second.err_estimate),
        "xi_max": second.upper_limit,
        "finite_evals": first.evals,
        "semi_infinite_evals": second.evals,
    }
    return CylindricalFieldVector.from_array(value, info)


def los_numeric(scenario, spec=None, radial="exact"):
    """Direct field from its angular spectral representation.

    ``radial='exact'`` uses ``i*J1`` in the ``E_rho`` kernel, which
    reproduces :func:`los_closed_form`; ``radial='j0'`` uses ``J0`` there,
    the form as it is usually printed, which is only asymptotically right.
    The observer must not be level with the source (``x != x0``).
    """
    g = scenario.geometry
    if g.x == g.x0:
        raise DomainError("los_numeric needs x != x0; use los_closed_form on that plane")
    sign = 1.0 if g.x > g.x0 else -1.0
    return _spectral_field(scenario, spec, abs(g.x - g.x0), sign, False, radial)


def image_los_numeric(scenario, spec=None, radial="exact"):
    """The direct-field integral evaluated for a source at the image point."""
    g = scenario.geometry
    return _spectral_field(scenario, spec, g.x + g.x0, 1.0, False, radial)


def scattered_numeric(scenario, spec=None, radial="exact"):
    """Ground-scattered field from its angular spectral representation."""
    g = scenario.geometry
    if not g.x + g.x0 > 0:
        raise DomainError("scattered_numeric needs x + x0 > 0")
    return _spectral_field(scenario, spec, g.x + g.x0, 1.0, True, radial)


def scattered_integrands(scenario, radial="exact"):
    """The two scattered-field integrands as vectorised callables.

    Returned as ``(finite, semi_infinite)``; each maps an array of ``xi`` to
    an ``(n, 2)`` array.  Useful for plotting and for quadrature studies.
    """
    g = scenario.geometry
    return _integrands(scenario, g.x + g.x0, 1.0, True, radial)


# ------------------------------------------------------- space wave etc.


def space_wave_fresnel(scenario):
    """Direct field plus the image-dipole field scaled by ``R(theta2)``."""
    dg = derived_geometry(scenario.geometry)
    los = los_closed_form(scenario)
    image = dipole_field(scenario, -scenario.geometry.x0)
    r = complex(reflection_coeff(dg.theta2, scenario))
    out = los + r * image
    return CylindricalFieldVector(out.e_rho, out.e_x, {"reflection": r})


def field_breakdown(scenario, spec=None):
    """Total, direct, scattered, space-wave and surface-wave fields at one point."""
    los = los_closed_form(scenario)
    scattered = scattered_numeric(scenario, spec)
    total = los + scattered
    space = space_wave_fresnel(scenario)
    return FieldBreakdown(los=los, scattered=scattered, total=total,
                          space_wave=space, surface_wave=total - space)


# ---------------------------------------------------------- naive path


def naive_scattered(scenario, spec=None, exclusion=1e-3, k_max_factor=None):
    """Scattered field from the original spectral integral over ``k_rho``.

    The Hankel-function integrand has singular points at ``k_rho = 0`` and
    ``k_rho = +-k01``; intervals of half-width ``exclusion * k01`` around
    them are skipped, and the infinite range is cut at ``k_max``.  This
    reproduces the inaccuracy of the direct approach and is not meant for
    production use.
    """
    if not exclusion > 0:
        raise ConfigError("naive integration needs a positive exclusion half-width")
    spec = QuadratureSpec() if spec is None else spec
    g = scenario.geometry
    k1, k2, e2 = scenario.k01, scenario.k02, scenario.eps2
    height = g.x + g.x0
    eps = exclusion * k1
    if k_max_factor is None:
        # evanescent decay exp(-sqrt(k^2 - k01^2) * height) below 1e-16
        k_max = math.hypot(k1, 37.0 / height)
    else:
        k_max = k_max_factor * k1

    def integrand(kr):
        kappa1 = csqrt(k1 * k1 - kr * kr)
        kappa2 = csqrt(k2 * k2 - kr * kr)
        coeff = (e2 * kappa1 - EPS1 * kappa2) / (kappa1 * (e2 * kappa1 + EPS1 * kappa2))
        arg = np.abs(kr) * g.rho
        # H0^(1)(z e^{i pi}) = -H0^(2)(z) continues the Hankel function to kr < 0.
        h = np.where(kr >= 0, hankel1(0, arg), -hankel2(0, arg))
        common = kr * np.abs(kr) * coeff * h * np.exp(1j * kappa1 * height)
        return np.stack([kappa1 * common, -np.abs(kr) * common], axis=-1)

    pieces = [(-k_max, -k1 - eps), (-k1 + eps, -eps), (eps, k1 - eps), (k1 + eps, k_max)]
    total = np.zeros(2, dtype=complex)
    evals = 0
    for a, b in pieces:
        if b > a:
            res = integrate_finite(integrand, a, b, spec)
            total = total + res.value
            evals += res.evals
    pre = -1j * scenario.moment / (8.0 * math.pi * EPS0 * EPS1)
    return CylindricalFieldVector.from_array(pre * total, {"evals": evals, "k_max": k_max,
                                                           "exclusion": exclusion})
