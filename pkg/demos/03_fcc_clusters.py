"""Face-centered-cubic clusters: the kissing shell and octahedral piles.

The fcc lattice realizes the best known lower bounds on 3-space contact
numbers.  Square bipyramids (octahedral piles of square layers) of
n = k(2k^2+1)/3 balls attain 2k(2k^2-3k+1) contacts.
"""

from contactlab import (contact_graph, fcc_bipyramid, fcc_cluster,
                        fcc_neighbors, fcc_octahedral_lower, upper_bound)

shell = [(0, 0, 0)] + fcc_neighbors()
g = contact_graph(fcc_cluster(shell))
print(f"hub + 12 nearest fcc neighbors: {g.contact_count} contacts "
      f"(12 at the hub + 24 around the rim)")
print(f"hub degree = {max(g.degrees())} (the 3-space kissing number)\n")

print("square bipyramids, k = 2..8:")
print("  k     n  contacts   formula   fcc upper  general upper")
for k in range(2, 9):
    p = fcc_bipyramid(k)
    c = contact_graph(p).contact_count
    n, formula = fcc_octahedral_lower(k)
    fcc_up = upper_bound("C3_FCC", n).value_int
    gen_up = upper_bound("C3_GENERAL", n).value_int
    print(f"  {k}  {n:5d}  {c:8d}  {formula:8d}  {fcc_up:9d}  {gen_up:12d}")

p = fcc_bipyramid(2)
print(f"\nk=2 bipyramid is the regular octahedron: n={p.n}, "
      f"contacts={contact_graph(p).contact_count} = 3n - 6")
print("lattice points (scaled by sqrt(2) to real coordinates):")
for row in p.lattice.points:
    print(f"  {tuple(int(x) for x in row)}")
