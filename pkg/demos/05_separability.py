"""Total separability: which packings can be sliced apart?

A packing is totally separable when every pair of balls has a hyperplane
between them that misses every ball's interior.  Digital packings always
qualify (grid midplanes); dense clusters fail because the plane forced
through a tangency cuts a third ball.  The verdict is tri-state since the
general search is heuristic.
"""

import numpy as np

from contactlab import (Packing, hex_spiral, is_digital, quasi_cube,
                        quasi_square, to_digital_packing,
                        total_separability, fcc_bipyramid)

for name, packing in [
    ("2x2 digital square", to_digital_packing(quasi_square(4))),
    ("13-cell digital quasi-cube", to_digital_packing(quasi_cube(13))),
    ("two far balls", Packing(dim=3, radius=1.0,
                              centers=[[0, 0, 0], [10, 0, 0]])),
    ("hexagonal spiral n=7", hex_spiral(7)),
    ("fcc octahedron", fcc_bipyramid(2)),
]:
    report = total_separability(packing)
    line = f"{name:28s} -> {report.status}"
    if report.status == "NotSeparable":
        (i, j), k, plane = report.violation
        line += (f"  (tangent pair {i},{j}: its only separating plane "
                 f"cuts ball {k})")
    print(line)

# regular tetrahedron: the forced plane of any edge passes through the
# two opposite centers, so it always cuts their balls
v = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], float)
v *= 2.0 / np.linalg.norm(v[0] - v[1])
tet = Packing(dim=3, radius=1.0, centers=v)
report = total_separability(tet)
print(f"{'regular tetrahedron':28s} -> {report.status}")

print("\nlattice detection (scale = ball diameter):")
for name, packing in [
    ("digital 3x3 square", to_digital_packing(quasi_square(9))),
    ("hex spiral (triangular)", hex_spiral(7)),
]:
    ok, scale, offset = is_digital(packing)
    print(f"  {name:26s} digital={ok}" +
          (f", spacing={scale}" if ok else ""))
