"""Monte Carlo volume of outer parallel domains.

Inflating every ball of a packing by an outer radius and measuring the
union volume turns contact maximization into volume minimization: more
tangencies mean more overlap among the inflated balls.  The estimator is
hit-or-miss sampling over the bounding box, reproducible by seed.
"""

import math

from contactlab import (Packing, fcc_bipyramid, hex_spiral,
                        parallel_volume_estimate, unit_ball_volume)

LAM = 0.5
SAMPLES = 400_000
ball = unit_ball_volume(3)

single = Packing(dim=3, radius=1.0, centers=[[0.0, 0.0, 0.0]])
est, err = parallel_volume_estimate(single, LAM, SAMPLES, seed=0)
print(f"single ball inflated to 1.5:  {est:8.3f} +- {err:.3f}  "
      f"(closed form {ball * 1.5 ** 3:.3f})")

pair = Packing(dim=3, radius=1.0, centers=[[0, 0, 0], [10, 0, 0]])
est, err = parallel_volume_estimate(pair, LAM, SAMPLES, seed=0)
print(f"two far balls:                {est:8.3f} +- {err:.3f}  "
      f"(closed form {2 * ball * 1.5 ** 3:.3f})")

tangent = Packing(dim=3, radius=1.0, centers=[[0, 0, 0], [2, 0, 0]])
h = 0.5
lens = 2 * math.pi * h * h * (3 * 1.5 - h) / 3
est, err = parallel_volume_estimate(tangent, LAM, SAMPLES, seed=0)
print(f"two tangent balls:            {est:8.3f} +- {err:.3f}  "
      f"(lens formula  {2 * ball * 1.5 ** 3 - lens:.3f})")

print("\nmore contacts -> smaller inflated volume (6 balls, lam = 0.5):")
line = Packing(dim=3, radius=1.0,
               centers=[[2.0 * i, 0, 0] for i in range(6)])
octa = fcc_bipyramid(2)
for name, p, contacts in [("chain (5 contacts)", line, 5),
                          ("octahedron (12 contacts)", octa, 12)]:
    est, err = parallel_volume_estimate(p, LAM, SAMPLES, seed=1)
    print(f"  {name:26s} volume = {est:8.3f} +- {err:.3f}")

print("\nplanar check: hexagonal spiral vs straight chain of 7 disks:")
spiral = hex_spiral(7)
chain = Packing(dim=2, radius=1.0, centers=[[2.0 * i, 0] for i in range(7)])
for name, p in [("hex spiral (12 contacts)", spiral),
                ("chain (6 contacts)", chain)]:
    est, err = parallel_volume_estimate(p, 0.3, SAMPLES, seed=2)
    print(f"  {name:26s} area = {est:8.3f} +- {err:.3f}")
