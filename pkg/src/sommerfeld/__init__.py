"""Field of a vertical Hertzian dipole above flat lossy ground.

The package offers two routes to the ground-scattered field:

* accurate numerical integration of an angular spectral representation
  whose kernels are ordinary Bessel functions (:mod:`sommerfeld.fields`);
* a uniform asymptotic solution built on the etalon integral and its
  geometric-optics and near-grazing limits (:mod:`sommerfeld.asymptotics`).

Supporting modules provide the special functions, the quadrature engine,
sweeps with CSV output and a quadrature benchmark.
"""

from .asymptotics import (
    PoleData, etalon_scattered, etalon_X, etalon_X_large_arg, etalon_X_small_arg,
    pole_exact, pole_xi_p, pseudo_surface_wave, spm_condition, spm_reflected,
)
from .bench import BenchmarkSpec, run_benchmark
from .core import (
    C0, EPS0, MU0, Geometry, Medium, Scenario, Source, delta, derived_geometry,
    numerical_distance, reference_scenario, wavenumbers,
)
from .errors import (
    ConfigError, DomainError, IntegrandError, NonConvergenceError, QuadratureError,
    RegimeError, SingularPointError, SommerfeldError, TruncationError, ValidityWarning,
)
from .fields import (
    CylindricalFieldVector, FieldBreakdown, field_breakdown, los_closed_form, los_numeric,
    magnitude_difference, naive_scattered, reflection_coeff, reflection_coeff_hyperbolic,
    relative_difference, scattered_integrands, scattered_numeric, space_wave_fresnel,
)
from .quadrature import (
    Method, QuadratureResult, QuadratureSpec, integrate_finite, integrate_semi_infinite,
)
from .specfun import bessel_j0, bessel_j1, erf_complex, erfc_complex, faddeeva
from .sweep import SweepSpec, emit_csv, read_csv, run_sweep

__version__ = "0.1.0"
