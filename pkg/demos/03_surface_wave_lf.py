"""At low frequency and low heights the surface wave carries the field.

Splitting the exact scattered field into a geometric-optics (Fresnel
reflection) part and the remainder shows where the remainder -- the surface
wave -- takes over.  We also compare the exact scattered field with the
simple pseudo-surface-wave formula as distance grows past the point where
the numerical distance reaches one.
"""

from sommerfeld import (QuadratureSpec, field_breakdown, numerical_distance,
                        pseudo_surface_wave, reference_scenario, etalon_scattered,
                        relative_difference)

spec = QuadratureSpec(rel_tol=1e-4)
print("300 kHz, both antennas 2 m above sea water")
print(f"{'rho (km)':>9} {'|surface|/|total|':>18} {'|space|/|total|':>16}")
for rho in (1e3, 3e3, 10e3, 20e3):
    b = field_breakdown(reference_scenario(300e3, rho, x0=2.0, x=2.0), spec)
    print(f"{rho / 1e3:9.1f} {b.surface_wave.magnitude / b.total.magnitude:18.3f} "
          f"{b.space_wave.magnitude / b.total.magnitude:16.3f}")

print("\n30 MHz, 60 m / 15 m: pseudo surface wave vs uniform formula")
print(f"{'rho (m)':>9} {'num. distance':>14} {'rel. diff':>10}")
for rho in (500.0, 1000.0, 2000.0, 5000.0, 10e3, 30e3):
    s = reference_scenario(30e6, rho)
    p = pseudo_surface_wave(s, check_regime=False)
    print(f"{rho:9.0f} {numerical_distance(s):14.3f} "
          f"{relative_difference(p, etalon_scattered(s)):10.3f}")
