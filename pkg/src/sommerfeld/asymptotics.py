"""Asymptotic evaluation of the ground-scattered field.

For a well-conducting ground (``sigma >> omega*eps0``) the reflection
coefficient has a pole close to grazing incidence.  Deforming the spectral
integral around a steepest-descent path while keeping the pole explicit
gives a uniform expression in terms of the *etalon integral*

    X(k, alpha) = -sgn(Re alpha)/2 + erf(sqrt(-2ik) * sin(alpha/2)) / 2,

evaluated at ``k = k01*r2`` and ``alpha = -zeta_p`` where
``zeta_p = xi_p - theta2`` is the pole's offset from the specular angle.
Two limits of ``X`` give the classical results:

* large argument -- the geometric-optics (image) reflected field;
* small argument at grazing incidence -- a field confined near the
  interface decaying as ``exp(-delta*k01*(x + x0))``, here called the
  pseudo surface wave.
"""

from dataclasses import dataclass
import cmath
import math
import warnings

import numpy as np

from .core import EPS0, EPS1, csqrt, delta, derived_geometry, numerical_distance
from .errors import DomainError, RegimeError, SingularPointError, ValidityWarning
from .fields import CylindricalFieldVector, reflection_coeff
from .specfun import erf_complex, erfc_complex, faddeeva

#: sigma must exceed this multiple of omega*eps0 for the pole approximation.
DEFAULT_REGIME_FACTOR = 10.0
#: Default largest grazing angle (degrees) accepted by the pseudo surface wave.
DEFAULT_MAX_GRAZING_DEG = 5.0
#: Below this condition parameter the large-argument form is flagged.
LARGE_ARG_FLAG = 3.0

_SQRT_MINUS_I = cmath.exp(-0.25j * math.pi)     # sqrt(-i), principal branch


@dataclass(frozen=True)
class PoleData:
    """Pole ``xi_p`` of the reflection coefficient and its offset from ``theta2``."""

    xi_p: complex
    zeta_p: complex


def loss_ratio(scenario):
    """``sigma / (omega*eps0)``: how strongly conduction dominates displacement current."""
    return scenario.ground.sigma / (scenario.omega * EPS0)


def _check_conductor(scenario, factor):
    ratio = loss_ratio(scenario)
    if not ratio >= factor:
        raise RegimeError(
            f"pole approximation needs sigma/(omega*eps0) >= {factor:g}, got {ratio:.4g}",
            quantity="sigma/(omega*eps0)", value=ratio)
    return ratio


def pole_xi_p(scenario, regime_factor=DEFAULT_REGIME_FACTOR):
    """Small-loss-parameter approximation of the reflection-coefficient pole.

    ``xi_p = pi/2 + delta*{1 + q - i(1 - q)}`` with
    ``q = omega*eps0*(eps1 + eps_r) / (2*sigma)`` and ``eps_r`` the real
    relative permittivity of the ground.
    """
    _check_conductor(scenario, regime_factor)
    d = delta(scenario)
    q = scenario.omega * EPS0 * (EPS1 + scenario.ground.eps_r) / (2.0 * scenario.ground.sigma)
    xi_p = math.pi / 2 + d * complex(1.0 + q, -(1.0 - q))
    theta2 = derived_geometry(scenario.geometry).theta2
    return PoleData(xi_p=xi_p, zeta_p=xi_p - theta2)


def _denominator(xi, scenario):
    k1, k2, e2 = scenario.k01, scenario.k02, scenario.eps2
    root = complex(csqrt(k2 * k2 - (k1 * cmath.sin(xi)) ** 2))
    value = e2 * k1 * cmath.cos(xi) + EPS1 * root
    deriv = -e2 * k1 * cmath.sin(xi) - k1 * k1 * cmath.sin(xi) * cmath.cos(xi) / root
    return value, deriv


def pole_exact(scenario, start=None, tol=1e-14, max_iter=50):
    """Root of the reflection coefficient's denominator near grazing (Newton's method).

    The denominator is continued to complex angles with the decaying
    branch of the square root; the iteration starts from :func:`pole_xi_p`.
    """
    xi = complex(pole_xi_p(scenario, regime_factor=0.0).xi_p if start is None else start)
    for _ in range(max_iter):
        value, deriv = _denominator(xi, scenario)
        step = value / deriv
        xi -= step
        if abs(step) <= tol * abs(xi):
            return xi
    raise DomainError("Newton iteration for the reflection pole did not converge")


# ------------------------------------------------------------ etalon integral


def _sign_of_real(alpha):
    re = complex(alpha).real
    if re == 0.0:
        raise DomainError("etalon integral is ambiguous for Re(alpha) = 0")
    return 1.0 if re > 0 else -1.0


def _etalon_argument(k, alpha):
    return math.sqrt(2.0 * k) * _SQRT_MINUS_I * cmath.sin(0.5 * alpha)


def etalon_X(k, alpha):
    """Etalon integral ``-sgn(Re a)/2 + erf(sqrt(-2ik) sin(a/2))/2``.

    Evaluated as ``-(s/2)*erfc(s*z)`` with ``s = sgn(Re alpha)``, which is
    algebraically identical and free of cancellation when ``X`` is small.
    """
    if not k > 0:
        raise DomainError("etalon integral needs k > 0")
    s = _sign_of_real(alpha)
    z = _etalon_argument(k, alpha)
    return complex(-0.5 * s * erfc_complex(s * z))


def etalon_X_erf(k, alpha):
    """The etalon integral written literally with ``erf`` (for cross-checks)."""
    s = _sign_of_real(alpha)
    return complex(-0.5 * s + 0.5 * erf_complex(_etalon_argument(k, alpha)))


def etalon_X_phased(k, alpha):
    """``X(k, alpha) * exp(i*k*cos(alpha))`` without overflow.

    Uses ``erfc(u) = exp(-u**2) w(i*u)`` and ``exp(-z**2) = exp(i*k*(1 - cos alpha))``,
    so the product is ``-(s/2) * exp(i*k) * w(i*s*z)``.
    """
    s = _sign_of_real(alpha)
    z = _etalon_argument(k, alpha)
    return complex(-0.5 * s * cmath.exp(1j * k) * faddeeva(1j * s * z))


def large_arg_parameter(k, alpha):
    """``sqrt(2k)*|sin(alpha/2)|``; the large-argument form needs this >> 1."""
    return math.sqrt(2.0 * k) * abs(cmath.sin(0.5 * alpha))


def etalon_X_large_arg(k, alpha):
    """Leading term of the etalon integral for ``sqrt(2k)|sin(alpha/2)| >> 1``.

    Raises :class:`RegimeError` when the parameter is at most 1 and warns
    (:class:`ValidityWarning`) when it is below 3.
    """
    s_half = cmath.sin(0.5 * alpha)
    if s_half == 0:
        raise SingularPointError("large-argument etalon form is singular at sin(alpha/2) = 0")
    param = large_arg_parameter(k, alpha)
    if not param > 1.0:
        raise RegimeError(f"large-argument form needs sqrt(2k)|sin(alpha/2)| > 1, got {param:.4g}",
                          quantity="sqrt(2k)|sin(alpha/2)|", value=param)
    if param < LARGE_ARG_FLAG:
        warnings.warn(f"large-argument etalon form used at parameter {param:.3g} < {LARGE_ARG_FLAG}",
                      ValidityWarning, stacklevel=2)
    return complex(-cmath.sqrt(1j / (2 * math.pi)) * cmath.exp(1j * k * (1 - cmath.cos(alpha)))
                   / (2.0 * math.sqrt(k) * s_half))


def etalon_X_small_arg(k, alpha):
    """Small-argument form ``-sgn(alpha)/2 + sqrt(k/(2*pi*i))*alpha`` for ``k|alpha|**2/2 < 1``."""
    param = k * abs(alpha) ** 2 / 2.0
    if not param < 1.0:
        raise RegimeError(f"small-argument form needs k|alpha|^2/2 < 1, got {param:.4g}",
                          quantity="k|alpha|^2/2", value=param)
    s = _sign_of_real(alpha)
    return complex(-0.5 * s + math.sqrt(k / (2 * math.pi)) * _SQRT_MINUS_I * alpha)


# ------------------------------------------------------------------ fields


def _along_theta2(amplitude, theta2):
    """``amplitude * (-e_theta2)`` with ``e_theta2 = cos(theta2) e_rho - sin(theta2) e_x``."""
    return CylindricalFieldVector(-amplitude * math.cos(theta2), amplitude * math.sin(theta2))


def etalon_scattered(scenario, regime_factor=DEFAULT_REGIME_FACTOR):
    """Uniform asymptotic scattered field built on the etalon integral."""
    pole = pole_xi_p(scenario, regime_factor)
    dg = derived_geometry(scenario.geometry)
    k = scenario.k01
    rho = scenario.geometry.rho
    big_k = k * dg.r2
    alpha = -pole.zeta_p
    r_spec = complex(reflection_coeff(dg.theta2, scenario))
    phased = etalon_X_phased(big_k, alpha)
    amp = (scenario.moment * k ** 3 / (2 * EPS0 * EPS1)
           * _SQRT_MINUS_I * math.sqrt(2.0 / (math.pi * k * rho))
           * math.sin(dg.theta2) ** 1.5 * cmath.sin(0.5 * pole.zeta_p) * r_spec * phased)
    out = _along_theta2(amp, dg.theta2)
    info = {"xi_p": pole.xi_p, "zeta_p": pole.zeta_p, "k_r2": big_k,
            "large_arg_parameter": large_arg_parameter(big_k, alpha),
            "delta": delta(scenario), "reflection": r_spec}
    return CylindricalFieldVector(out.e_rho, out.e_x, info)


def spm_condition(scenario):
    """Return ``(sqrt(k01*r2)*sin(phi/2), sqrt(2*k01*r2)*sin(phi/2))``.

    The first form is the one whose values at the reference geometry are
    quoted alongside the geometric-optics field; the second is the form
    the derivation produces.  Both must be large for the field to hold.
    """
    dg = derived_geometry(scenario.geometry)
    base = math.sqrt(scenario.k01 * dg.r2) * math.sin(dg.phi / 2)
    return base, math.sqrt(2.0) * base


def spm_reflected(scenario):
    """Geometric-optics (image source) reflected field ``-e_theta2 * R * p k^2 sin(theta2) e^{ikr2} / (4 pi eps0 r2)``."""
    dg = derived_geometry(scenario.geometry)
    k = scenario.k01
    r_spec = complex(reflection_coeff(dg.theta2, scenario))
    amp = (r_spec * scenario.moment * k * k / (4 * math.pi * EPS0 * EPS1 * dg.r2)
           * math.sin(dg.theta2) * cmath.exp(1j * k * dg.r2))
    out = _along_theta2(amp, dg.theta2)
    text_form, derived_form = spm_condition(scenario)
    info = {"condition": text_form, "condition_sqrt2": derived_form, "reflection": r_spec}
    return CylindricalFieldVector(out.e_rho, out.e_x, info)


def pseudo_surface_wave(scenario, max_grazing_deg=DEFAULT_MAX_GRAZING_DEG, check_regime=True):
    """Near-interface field at grazing incidence, purely vertical.

    ``E_x = delta (p k^3 / 4 eps0) (pi k rho)^{-1/2} exp(-delta k (x + x0))
    exp(i(k rho + pi/2)) [1 + 2i sqrt(k rho/pi) delta (1 + k rho delta^2)]``.

    Valid for small numerical distance ``k rho delta^2 < 1`` and small
    grazing angle; with ``check_regime`` a :class:`RegimeError` names the
    violated quantity.
    """
    g = scenario.geometry
    k, rho = scenario.k01, g.rho
    d = delta(scenario)
    nd = numerical_distance(scenario)
    phi_deg = math.degrees(derived_geometry(g).phi)
    if check_regime:
        if not nd < 1.0:
            raise RegimeError(f"numerical distance {nd:.4g} is not < 1",
                              quantity="numerical_distance", value=nd)
        if not phi_deg < max_grazing_deg:
            raise RegimeError(f"grazing angle {phi_deg:.4g} deg is not < {max_grazing_deg:g} deg",
                              quantity="grazing_angle_deg", value=phi_deg)
    value = (d * scenario.moment * k ** 3 / (4 * EPS0 * EPS1) / math.sqrt(math.pi * k * rho)
             * math.exp(-d * k * (g.x + g.x0)) * cmath.exp(1j * (k * rho + math.pi / 2))
             * (1 + 2j * math.sqrt(k * rho / math.pi) * d * (1 + k * rho * d * d)))
    return CylindricalFieldVector(0.0, value, {"delta": d, "numerical_distance": nd,
                                               "grazing_angle_deg": phi_deg})
