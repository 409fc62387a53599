"""Hexagonal disk spirals attain the planar maximum at every size.

Disks are added one at a time: a center, then concentric hexagonal rings
walked counter-clockwise.  After every single disk the contact count
equals floor(3n - sqrt(12n-3)) -- the spiral is optimal at each step,
not just at full rings.
"""

from contactlab import contact_graph, exact_formula, hex_spiral

print("n, spiral contacts, exact formula:")
for n in (2, 7, 19, 37, 61, 200):
    packing = hex_spiral(n)
    got = contact_graph(packing).contact_count
    want = exact_formula("C2", n).value_int
    marker = "ok" if got == want else "MISMATCH"
    print(f"  {n:4d}  {got:4d}  {want:4d}  {marker}")

print("\nEvery prefix is optimal (n = 2..200):",
      all(contact_graph(hex_spiral(n)).contact_count
          == exact_formula("C2", n).value_int for n in range(2, 201)))

p = hex_spiral(19)
print("\nThe 19-disk spiral (two full rings), lattice coordinates (p, q)")
print("with real position (p, q*sqrt(3)):")
for row in p.lattice.points:
    print(f"  ({row[0]:3d},{row[1]:3d})", end="")
print()
print(f"\ncontacts = {contact_graph(p).contact_count}, "
      f"all tangencies decided by integer arithmetic "
      f"(exact_lattice = {p.exact_lattice})")
