"""The scalar function behind the uniform reflection formula.

X(k, alpha) is a complementary error function of a complex argument.  For a
large argument it reduces to the geometric-optics form, for a small one to a
linear law.  The table shows where each limit is trustworthy.
"""

import warnings

from sommerfeld import etalon_X, etalon_X_large_arg, etalon_X_small_arg
from sommerfeld.asymptotics import large_arg_parameter
from sommerfeld.errors import SommerfeldError, ValidityWarning

print(f"{'k':>8} {'alpha':>6} {'param':>8} {'|X|':>9} {'large err':>10} {'small err':>10}")
for k in (10.0, 1e3, 1e5):
    for alpha in (0.01, 0.1, 1.0):
        x = etalon_X(k, alpha)
        cols = []
        for approx in (etalon_X_large_arg, etalon_X_small_arg):
            try:
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore", ValidityWarning)
                    cols.append(f"{abs(approx(k, alpha) - x) / abs(x):10.2e}")
            except SommerfeldError:
                cols.append(f"{'n/a':>10}")
        print(f"{k:8.0e} {alpha:6.2f} {large_arg_parameter(k, alpha):8.3f} {abs(x):9.3e} "
              + " ".join(cols))
