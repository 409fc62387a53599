"""Maximum-contact rigid clusters of unit spheres, found by enumeration.

The pipeline: list all nonisomorphic graphs with 3n - 6 edges and minimum
degree 3, drop ones that violate sphere geometry (kissing bound, no five
mutual tangencies, at most 5 common neighbors across a tangency), solve
the gauge-fixed distance system by damped least squares with multistart,
then classify rigidity by the rank of the rigidity matrix.
"""

import numpy as np

from contactlab import (SolverConfig, brute_force_small, classify_rigidity,
                        contact_graph, max_contact_search, solve_embedding,
                        twin_bipyramids)
from contactlab.cluster import PUTATIVE_MAX_CONTACTS, rigidity_matrix
from contactlab.graphs import CandidateGraph, enumerate_candidates

print("exhaustive for baby sizes (all graphs, not just 3n-6):")
for n in (2, 3, 4, 5):
    print(f"  c({n},3) = {brute_force_small(n)}")

print("\npipeline for n = 4, 5, 6:")
for n in (4, 5, 6):
    rep = max_contact_search(n, SolverConfig(seed=0))
    print(f"  n={n}: best={rep.best_contacts}  "
          f"candidates={rep.graphs_enumerated}  solved={rep.graphs_solved}  "
          f"realized={rep.graphs_realized}  ({rep.wall_time:.2f}s)")

print("\nputative maxima from empirical studies (targets, not theorems):")
print(" ", {n: PUTATIVE_MAX_CONTACTS[n] for n in range(6, 13)})

print("\nrigidity of the two realizable 12-contact clusters at n = 6:")
for g in enumerate_candidates(6):
    res = solve_embedding(g, SolverConfig(seed=0))
    if res.realized:
        classify_rigidity(res, g)
        degs = sorted(g.degrees())
        shape = "octahedron" if degs == [4] * 6 else "stacked tetrahedra"
        print(f"  {shape:18s} contacts={res.realized_contacts}  "
              f"minimally rigid={res.minimally_rigid}  "
              f"infinitesimally rigid={res.infinitesimally_rigid}")

print("\na minimally rigid but flexible 9-ball cluster:")
p = twin_bipyramids()
contacts = sorted(contact_graph(p).edges)
sv = np.linalg.svd(rigidity_matrix(p.centers, contacts), compute_uv=False)
rank = int((sv > 1e-7).sum())
print(f"  twin bipyramids: contacts={len(contacts)} (= 3n - 6), "
      f"rigidity rank={rank} < {3 * p.n - 6}")
print("  the rank deficit is the infinitesimal twist of the two pyramids "
      "about their shared ball")
