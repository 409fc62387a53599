"""Polyominoes as digital sphere packings: perimeter minimization is
contact maximization.

Unit-diameter balls on the integer lattice correspond one-to-one to
polyominoes; shared cell facets are exactly ball tangencies.  Quasi-square
and quasi-cube growth minimizes surface volume, and every polyomino obeys
the box-polytope isoperimetric inequality svol^d / n^(d-1) >= (2d)^d.
"""

import numpy as np

from contactlab import (contact_graph, exact_formula, facet_contacts,
                        iso_quotient_check, quasi_cube, quasi_square,
                        surface_volume, to_digital_packing, upper_bound)
from contactlab.digital import Polyomino

print("quasi-square growth matches floor(2n - 2 sqrt(n)):")
for n in (2, 4, 9, 12, 100, 500):
    c = facet_contacts(quasi_square(n))
    print(f"  n={n:4d}  contacts={c:4d}  formula={exact_formula('CZ2', max(n,2)).value_int:4d}")

print("\nquasi-cube growth: exact at perfect cubes, bounded in between:")
for n in (8, 12, 27, 64, 100, 343):
    c = facet_contacts(quasi_cube(n))
    cap = upper_bound("CZD", n, 3).value_int
    print(f"  n={n:4d}  contacts={c:5d}  cap floor(3n - 3 n^(2/3)) = {cap}")

print("\nisoperimetric quotients (cube bound is (2d)^d):")
shapes = {
    "2x2x2 cube": Polyomino([(i, j, k) for i in range(2)
                             for j in range(2) for k in range(2)]),
    "3x3 square": quasi_square(9),
    "1x8 row": Polyomino([(0, i) for i in range(8)]),
    "L-tromino": Polyomino([(0, 0), (1, 0), (1, 1)]),
}
for name, poly in shapes.items():
    q, ok = iso_quotient_check(poly)
    bound = (2 * poly.dim) ** poly.dim
    tag = "equality" if q == bound else "strict"
    print(f"  {name:11s} d={poly.dim}  quotient={q:8.2f}  >= {bound}  ({tag})")

poly = quasi_cube(13)
packing = to_digital_packing(poly)
print(f"\n13-cell quasi-cube -> digital packing: "
      f"facets={facet_contacts(poly)}, "
      f"ball contacts={contact_graph(packing).contact_count}, "
      f"surface volume={surface_volume(poly)}")
