"""Quick start: the direct (line-of-sight) field and the total field over sea water.

We place a short vertical dipole 60 m above sea water and an observer at
15 m height, 1 km away, at 30 MHz.  The direct field has a closed form; the
same field written as a spectral integral must reproduce it, which is the
basic sanity check of the quadrature machinery.  The field scattered by the
ground is then added to get the total field.
"""

from sommerfeld import (QuadratureSpec, los_closed_form, los_numeric, reference_scenario,
                        relative_difference, scattered_numeric)

scenario = reference_scenario(frequency=30e6, rho=1000.0)
spec = QuadratureSpec("simpson", rel_tol=1e-6)

print(f"k01 = {scenario.k01:.6f} 1/m, dipole moment p = {scenario.moment:.3e} C*m")

los = los_closed_form(scenario)
los_int = los_numeric(scenario, spec)
print(f"direct field, closed form : E_rho = {los.e_rho:.4e}, E_x = {los.e_x:.4e} V/m")
print(f"direct field, integral    : E_rho = {los_int.e_rho:.4e}, E_x = {los_int.e_x:.4e} V/m")
print(f"relative difference       : {relative_difference(los_int, los):.2e} "
      f"({los_int.info['evals']} integrand evaluations)")

scattered = scattered_numeric(scenario, spec)
total = los + scattered
print(f"scattered field |E|       : {scattered.magnitude:.4e} V/m")
print(f"total field |E|           : {total.magnitude:.4e} V/m")
