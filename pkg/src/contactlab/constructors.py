"""Deterministic builders of contact-maximizing packings: hexagonal disk
spirals in the plane and face-centered-cubic clusters in 3-space.

Lattice constructions store integer coordinates together with a
quadratic form so all tangency decisions downstream are exact.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

import numpy as np

from .geometry import LatticeData, MalformedInputError, Packing

__all__ = [
    "hex_spiral", "hex_spiral_coords", "fcc_bipyramid", "fcc_cluster",
    "fcc_neighbors", "twin_bipyramids",
]

# Axial step directions of the triangular lattice with basis
# e1 = (2, 0), e2 = (1, sqrt(3)); successive entries are 60 degrees apart
# counter-clockwise starting due east.
_HEX_DIRS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def hex_spiral_coords(n: int) -> Iterator[tuple[int, int]]:
    """Yield the first n triangular-lattice points of the hexagonal spiral
    in storage coordinates (p, q) with real position (p, q*sqrt(3)).

    Order: center, then ring 1 counter-clockwise from due east, then
    ring 2 and so on.  Rings beyond the first open one step past the east
    corner (so the opening disk touches two disks of the previous ring)
    and close at the east corner.  Prefixes of the stream form a chain:
    the first n points are always a subset of the first n + 1.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")

    def store(a: int, b: int) -> tuple[int, int]:
        return (2 * a + b, b)

    yield store(0, 0)
    count = 1
    r = 0
    while count < n:
        r += 1
        # walk the ring cycle from the east corner: r steps in each of the
        # directions 120, 180, 240, 300, 0, 60 degrees
        steps = []
        for k in (2, 3, 4, 5, 0, 1):
            steps.extend([_HEX_DIRS[k]] * r)
        a, b = r, 0
        if r == 1:
            ring = []
            for da, db in steps:
                ring.append((a, b))
                a, b = a + da, b + db
        else:
            # start one step past the corner; the corner is emitted last
            a, b = a + steps[0][0], b + steps[0][1]
            ring = []
            for da, db in steps[1:]:
                ring.append((a, b))
                a, b = a + da, b + db
            ring.append((a, b))
        for a, b in ring:
            yield store(a, b)
            count += 1
            if count == n:
                return


def hex_spiral(n: int) -> Packing:
    """Packing of n unit disks in spiral order on the triangular lattice.

    The contact count of every prefix equals floor(3n - sqrt(12n - 3)),
    the planar maximum.  Tangency is exact: squared distances are the
    integers (dp)^2 + 3 (dq)^2 with touching value 4.
    """
    pts = np.array(list(hex_spiral_coords(n)), dtype=np.int64)
    lattice = LatticeData(points=pts, form=(1, 3), touch_sq=4)
    return Packing(dim=2, radius=1.0, centers=lattice.real_centers(1.0),
                   exact_lattice=True, lattice=lattice,
                   construction={"name": "hex", "params": {"n": n}})


def _bipyramid_points(k: int) -> list[tuple[int, int, int]]:
    pts = []
    for t in range(-(k - 1), k):
        m = k - abs(t)
        ax = abs(t)
        for i in range(m):
            for j in range(m):
                pts.append((ax + i + j, i - j, t))
    return pts


def fcc_bipyramid(k: int) -> Packing:
    """Square bipyramid (octahedral) cluster of unit balls on the fcc
    lattice: square layers of sizes 1, 4, ..., (k-1)^2, k^2, (k-1)^2, ..., 1
    stacked with the fcc nesting offset.

    Ball count is k(2k^2+1)/3 and the geometric contact count is
    2k(2k^2 - 3k + 1), matching the octahedral lower bound.
    """
    if k < 2:
        raise ValueError(f"bipyramid cluster requires k >= 2, got {k}")
    pts = np.array(_bipyramid_points(k), dtype=np.int64)
    lattice = LatticeData(points=pts, form=(1, 1, 1), touch_sq=2)
    return Packing(dim=3, radius=1.0, centers=lattice.real_centers(1.0),
                   exact_lattice=True, lattice=lattice,
                   construction={"name": "fcc-bipyramid", "params": {"k": k}})


def fcc_cluster(points: Iterable[Sequence[int]]) -> Packing:
    """Packing of unit balls centered at the given fcc lattice points.

    Points are integer triples with even coordinate sum, scaled by sqrt(2)
    so nearest neighbors sit at distance exactly 2.  Duplicates and parity
    violations are malformed input.
    """
    pts = [tuple(int(x) for x in p) for p in points]
    if not pts:
        raise MalformedInputError("empty fcc point set")
    for p in pts:
        if len(p) != 3:
            raise MalformedInputError(f"fcc point {p} is not a triple")
        if sum(p) % 2 != 0:
            raise MalformedInputError(f"fcc parity violated at {p}: "
                                      "coordinate sum must be even")
    if len(set(pts)) != len(pts):
        raise MalformedInputError("duplicate fcc points")
    arr = np.array(pts, dtype=np.int64)
    lattice = LatticeData(points=arr, form=(1, 1, 1), touch_sq=2)
    return Packing(dim=3, radius=1.0, centers=lattice.real_centers(1.0),
                   exact_lattice=True, lattice=lattice,
                   construction={"name": "fcc-cluster",
                                 "params": {"n": len(pts)}})


def fcc_neighbors() -> list[tuple[int, int, int]]:
    """The 12 shortest nonzero fcc lattice vectors (the kissing shell)."""
    out = []
    for x in (-1, 0, 1):
        for y in (-1, 0, 1):
            for z in (-1, 0, 1):
                if (x, y, z) != (0, 0, 0) and x * x + y * y + z * z == 2:
                    out.append((x, y, z))
    return out


def twin_bipyramids() -> Packing:
    """Nine unit balls: two triangular bipyramids sharing one equatorial
    ball, rotated so the remaining apex and equator balls touch pairwise
    across the mirror plane.

    Realizes 3n - 6 = 21 contacts and is minimally rigid, yet its rigidity
    matrix is rank deficient: the two halves admit an infinitesimal twist
    about the shared ball.
    """
    s3 = math.sqrt(3.0)
    h = math.sqrt(8.0 / 3.0)
    a = np.array([-2.0, 0.0, 0.0])
    b = np.zeros(3)
    e = np.array([-1.0, -s3, 0.0])
    c = np.array([-1.0, -1.0 / s3, h])
    d = np.array([-1.0, -1.0 / s3, -h])
    mirror = np.diag([-1.0, 1.0, 1.0])
    centers = np.array([a, b, e, c, d, mirror @ a, mirror @ e,
                        mirror @ c, mirror @ d])
    return Packing(dim=3, radius=1.0, centers=centers,
                   construction={"name": "twin-bipyramids", "params": {}})
