"""Compare the exact integral with the two asymptotic approximations over frequency.

At a 15 degree grazing angle the geometric-optics (stationary phase)
reflection works well once sqrt(k r2) sin(phi/2) exceeds about one.  The
Faddeeva-based uniform formula is meant to also cover the lower-frequency
end.  The sweep writes a CSV with one row per frequency and method.
"""

import math
import sys

from sommerfeld import QuadratureSpec, SweepSpec, reference_scenario, run_sweep
from sommerfeld.sweep import SWEEP_COLUMNS, write_csv

d = 75.0 / math.tan(math.radians(15.0))          # 15 degree grazing angle for 60 m / 15 m
scenario = reference_scenario(rho=d)
spec = SweepSpec(axis="freq", start=1e6, stop=1e9, points=13, scale="log",
                 methods=("ni", "spm", "etalon"), quadrature=QuadratureSpec(rel_tol=1e-6))
rows = run_sweep(spec, scenario)

exact = {r["frequency_hz"]: r["abs_e"] for r in rows if r["method"] == "ni"}
print(f"{'f (MHz)':>9} {'sqrt(kr)sin':>12} {'|E| exact':>11} {'SPM err':>8} {'etalon err':>10}")
for f, ref in exact.items():
    by = {r["method"]: r for r in rows if r["frequency_hz"] == f}
    spm = abs(by["spm"]["abs_e"] - ref) / ref
    eta = abs(by["etalon"]["abs_e"] - ref) / ref
    print(f"{f / 1e6:9.2f} {by['ni']['spm_condition']:12.3f} {ref:11.4e} {spm:8.3%} {eta:10.3%}")

if "--csv" in sys.argv:
    write_csv(rows, sys.stdout, SWEEP_COLUMNS)
