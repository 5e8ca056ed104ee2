"""How much work do the two quadrature rules need?

Integrand evaluation counts are the hardware-independent cost measure.
Adaptive Simpson refines only where the integrand is hard; the global
trapezoid rule doubles everywhere, which becomes expensive at tight
tolerances.
"""

from sommerfeld import BenchmarkSpec, reference_scenario, run_benchmark

spec = BenchmarkSpec(frequencies=(1e6, 30e6), tolerances=(1e-3, 1e-6), repetitions=1)
rows = run_benchmark(spec, reference_scenario(rho=1000.0))
print(f"{'f (MHz)':>8} {'tol':>7} {'method':>10} {'evals':>9} {'ms':>8}")
for r in rows:
    flag = "" if r["converged"] else "  (not converged)"
    print(f"{r['frequency'] / 1e6:8.0f} {r['tolerance']:7.0e} {r['method']:>10} "
          f"{r['evals']:9d} {r['median_ms']:8.1f}{flag}")
