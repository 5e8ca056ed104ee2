"""Physical constants, media, geometry and the dipole source.

Every quantity shared by the exact and the asymptotic solvers is defined
here.  The time convention is ``exp(-i*omega*t)`` throughout, so a lossy
ground has a complex relative permittivity with a *positive* imaginary
part and wavenumbers with ``Im(k) > 0`` decay into the ground.

The upper half-space is free space (relative permittivity 1).
"""

from dataclasses import dataclass, field, replace
import math

import numpy as np

from .errors import ConfigError, RegimeError

#: Speed of light in vacuum, m/s.
C0 = 299_792_458.0
#: Vacuum permittivity in F/m (the rounded value used throughout the model).
EPS0 = 8.854e-12
#: Vacuum permeability in H/m.
MU0 = 4.0e-7 * math.pi
#: Relative permittivity of the upper medium (air).
EPS1 = 1.0

#: Above this value of delta the asymptotic solutions are not trusted.
DELTA_REGIME_LIMIT = 0.1


@dataclass(frozen=True)
class Medium:
    """A homogeneous half-space.

    Parameters
    ----------
    eps_r : float
        Real relative permittivity (>= 1).
    sigma : float
        Conductivity in S/m (>= 0).
    mu : float
        Absolute permeability in H/m (> 0), ``MU0`` by default.
    """

    eps_r: float
    sigma: float
    mu: float = MU0

    def __post_init__(self):
        if not (np.isfinite(self.eps_r) and self.eps_r >= 1.0):
            raise ConfigError(f"eps_r must be >= 1, got {self.eps_r!r}")
        if not (np.isfinite(self.sigma) and self.sigma >= 0.0):
            raise ConfigError(f"sigma must be >= 0, got {self.sigma!r}")
        if not (np.isfinite(self.mu) and self.mu > 0.0):
            raise ConfigError(f"mu must be > 0, got {self.mu!r}")

    def complex_permittivity(self, omega):
        """Relative permittivity ``eps_r + i*sigma/(omega*EPS0)``."""
        return complex(self.eps_r, self.sigma / (omega * EPS0))


@dataclass(frozen=True)
class Geometry:
    """Dipole height ``x0``, observer height ``x`` and horizontal range ``rho`` (m)."""

    x0: float
    x: float
    rho: float

    def __post_init__(self):
        if not self.x0 > 0.0:
            raise ConfigError(f"dipole height x0 must be > 0, got {self.x0!r}")
        if not self.x >= 0.0:
            raise ConfigError(f"observer height x must be >= 0, got {self.x!r}")
        if not self.rho > 0.0:
            raise ConfigError(f"horizontal distance rho must be > 0, got {self.rho!r}")


@dataclass(frozen=True)
class Source:
    """Short vertical current element of strength ``current`` (A) and ``length`` (m).

    The dipole moment follows the current-moment convention
    ``I*dl = -i*omega*p``, i.e. ``p = i*I*dl/omega``.  It scales every
    field linearly and therefore cancels from all relative comparisons.
    """

    current: float = 1.0
    length: float = 0.1

    def __post_init__(self):
        if not self.current > 0.0:
            raise ConfigError(f"current must be > 0, got {self.current!r}")
        if not self.length > 0.0:
            raise ConfigError(f"length must be > 0, got {self.length!r}")

    def moment(self, omega):
        """Complex dipole moment p in C*m."""
        return 1j * self.current * self.length / omega


@dataclass(frozen=True)
class DerivedGeometry:
    """Distances and angles measured from the source and from its image."""

    r1: float
    r2: float
    theta1: float
    theta2: float
    phi: float


@dataclass(frozen=True)
class Scenario:
    """A single field evaluation: source, geometry, ground and frequency."""

    geometry: Geometry
    ground: Medium
    frequency: float
    source: Source = field(default_factory=Source)

    def __post_init__(self):
        if not (np.isfinite(self.frequency) and self.frequency > 0.0):
            raise ConfigError(f"frequency must be > 0, got {self.frequency!r}")

    @property
    def omega(self):
        return 2.0 * math.pi * self.frequency

    @property
    def k01(self):
        return self.omega / C0 * math.sqrt(EPS1)

    @property
    def eps2(self):
        """Complex relative permittivity of the ground."""
        return self.ground.complex_permittivity(self.omega)

    @property
    def k02(self):
        return wavenumbers(self)[1]

    @property
    def moment(self):
        return self.source.moment(self.omega)

    @property
    def wavelength(self):
        return 2.0 * math.pi / self.k01

    @property
    def hertzian_ok(self):
        """True when the element is electrically short (``k01*length < 0.1``)."""
        return self.k01 * self.source.length < 0.1

    def with_frequency(self, frequency):
        return replace(self, frequency=float(frequency))

    def with_distance(self, rho):
        return replace(self, geometry=replace(self.geometry, rho=float(rho)))

    def with_heights(self, x0=None, x=None):
        g = self.geometry
        return replace(self, geometry=replace(
            g, x0=g.x0 if x0 is None else float(x0), x=g.x if x is None else float(x)))

    def with_ground(self, **changes):
        return replace(self, ground=replace(self.ground, **changes))


def csqrt(z):
    """Principal complex square root, normalised so that ``Im >= 0``.

    On the negative real axis numpy already returns ``+i*sqrt(|z|)``; the
    explicit flip keeps the decaying branch for arguments whose imaginary
    part is a signed zero.
    """
    s = np.sqrt(np.asarray(z, dtype=complex))
    return np.where(s.imag < 0, -s, s)


def wavenumbers(scenario):
    """Return ``(k01, k02)``: the real air and complex ground wavenumbers in rad/m."""
    k01 = scenario.k01
    mu_r = scenario.ground.mu / MU0
    k02 = complex(k01 * csqrt(mu_r * scenario.eps2 / EPS1))
    return k01, k02


def derived_geometry(geometry):
    """Distances ``r1`` (source) and ``r2`` (image) with their polar angles.

    ``theta1`` and ``theta2`` are measured from the upward vertical through
    the source and through its image respectively; ``phi`` is the grazing
    angle ``pi/2 - theta2``.
    """
    g = geometry
    h1 = g.x - g.x0
    h2 = g.x + g.x0
    r1 = math.hypot(g.rho, h1)
    r2 = math.hypot(g.rho, h2)
    theta1 = math.atan2(g.rho, h1)
    theta2 = math.atan2(g.rho, h2)
    phi = math.atan2(h2, g.rho)
    return DerivedGeometry(r1=r1, r2=r2, theta1=theta1, theta2=theta2, phi=phi)


def _require_conductor(scenario):
    if scenario.ground.sigma <= 0.0:
        raise RegimeError("etalon regime requires sigma >> omega*eps0 (sigma is zero)",
                          quantity="sigma", value=scenario.ground.sigma)


def delta(scenario):
    """Small loss parameter ``sqrt(omega*eps0*eps1 / (2*sigma))``."""
    _require_conductor(scenario)
    return math.sqrt(scenario.omega * EPS0 * EPS1 / (2.0 * scenario.ground.sigma))


def delta_in_regime(scenario):
    """True when ``delta`` is small enough for the asymptotic solutions."""
    return delta(scenario) < DELTA_REGIME_LIMIT


def numerical_distance(scenario, rho=None):
    """``k01 * rho * delta**2``; ``rho`` defaults to the scenario's range."""
    r = scenario.geometry.rho if rho is None else float(rho)
    return scenario.k01 * r * delta(scenario) ** 2


# Parameters of the reference sea-water scenario used across the demos
# and tests: a 0.1 m element carrying 1 A, 60 m above sea water, observed
# at 15 m height.
SEA_WATER = Medium(eps_r=80.0, sigma=4.8)


def reference_scenario(frequency=30e6, rho=1000.0, x0=60.0, x=15.0, ground=SEA_WATER):
    """Sea-water scenario with the default heights and a 0.1 m, 1 A source."""
    return Scenario(geometry=Geometry(x0=x0, x=x, rho=rho), ground=ground,
                    frequency=frequency, source=Source(current=1.0, length=0.1))
