"""Closed-form contact formulas and the 3-space bound table.

The maximum number of tangencies among n congruent disks has an exact
formula; in 3-space only upper and lower bounds are known.  This script
evaluates the planar formulas, reproduces the classic bound table for
n = 2..19, and shows the normalized defect ratios converging to their
limits.
"""

import math

from contactlab import (exact_formula, fcc_octahedral_lower, gap_ratios,
                        table1, table1_csv, upper_bound)

print("Exact planar maxima floor(3n - sqrt(12n-3)):")
for n in (2, 3, 7, 12, 19, 100):
    print(f"  n={n:4d}  c(n,2) = {exact_formula('C2', n).value_int}")

print("\nDigital and totally separable planar maxima agree:")
for n in (4, 9, 25, 100):
    cz = exact_formula("CZ2", n).value_int
    cs = exact_formula("CSEP2", n).value_int
    print(f"  n={n:4d}  digital = {cz}, separable = {cs}")

print("\n3-space bound table, n = 2..19 "
      "(lower bound only at octahedral sizes 6, 19):")
print(table1_csv(table1(2, 19)))

print("Octahedral lower bounds 2k(2k^2-3k+1):")
for k in range(2, 6):
    n, contacts = fcc_octahedral_lower(k)
    upper = upper_bound("C3_FCC", n).value_int
    print(f"  k={k}  n={n:4d}  lower={contacts:5d}  fcc upper={upper}")

print("\nPlanar defect (3n - c)/sqrt(n) approaches sqrt(12) = "
      f"{math.sqrt(12):.4f}:")
for n in (10, 100, 10_000, 1_000_000):
    c = exact_formula("C2", n).value_int
    print(f"  n={n:8d}  ratio = {gap_ratios(n, c, 'PLANAR'):.4f}")

print("\nSpatial defect at octahedral sizes stays inside (0.926, 7.862):")
for k in (2, 3, 5, 10):
    n, c = fcc_octahedral_lower(k)
    print(f"  n={n:5d}  ratio = {gap_ratios(n, c, 'SPATIAL'):.4f}")

print("\nHigher-dimensional caps for n = 100:")
for kind, d in (("CZD", 4), ("CSEPD", 4), ("UNIVERSAL_TRANSLATES", 4),
                ("KISSING_BASED", 3), ("KS_NONCONGRUENT", 3)):
    rep = upper_bound(kind, 100, d)
    print(f"  {kind:22s} d={d}  <= {rep.value_int}")
