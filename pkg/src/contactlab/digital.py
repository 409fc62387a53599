"""Polyominoes as exact surrogates for digital sphere packings.

A polyomino is a facet-connected set of integer lattice cells; shared
facets correspond one-to-one with tangencies of unit-diameter balls at
the cell centers, so contact counting, surface volume and isoperimetric
checks are pure integer arithmetic.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .geometry import LatticeData, MalformedInputError, Packing

__all__ = [
    "Polyomino", "facet_contacts", "surface_volume", "boundary_facets",
    "iso_quotient_check", "quasi_square", "quasi_cube", "to_digital_packing",
    "is_full_box",
]


@dataclass(frozen=True)
class Polyomino:
    """Non-empty, facet-connected set of integer cells in dim >= 2."""

    dim: int
    cells: tuple

    def __init__(self, cells, dim: int | None = None):
        cell_list = [tuple(int(x) for x in c) for c in cells]
        if not cell_list:
            raise MalformedInputError("polyomino must be non-empty")
        if dim is None:
            dim = len(cell_list[0])
        if dim < 2:
            raise MalformedInputError(f"dim must be >= 2, got {dim}")
        if any(len(c) != dim for c in cell_list):
            raise MalformedInputError("cells have inconsistent arity")
        cell_set = set(cell_list)
        if len(cell_set) != len(cell_list):
            raise MalformedInputError("duplicate cells")
        if not _connected(cell_set, dim):
            raise MalformedInputError("cells are not facet-connected")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "cells", tuple(sorted(cell_set)))

    @property
    def n(self) -> int:
        return len(self.cells)

    def to_json(self) -> dict:
        return {"dim": self.dim, "cells": [list(c) for c in self.cells]}

    @classmethod
    def from_json(cls, doc: dict) -> "Polyomino":
        return cls(doc["cells"], dim=int(doc["dim"]))


def _neighbors(cell, dim):
    for a in range(dim):
        for s in (-1, 1):
            yield cell[:a] + (cell[a] + s,) + cell[a + 1:]


def _connected(cell_set: set, dim: int) -> bool:
    start = next(iter(cell_set))
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nb in _neighbors(cur, dim):
            if nb in cell_set and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == len(cell_set)


def facet_contacts(poly: Polyomino) -> int:
    """Number of unordered facet-adjacent cell pairs; equals the contact
    number of the corresponding digital packing."""
    cell_set = set(poly.cells)
    count = 0
    for cell in poly.cells:
        for a in range(poly.dim):
            up = cell[:a] + (cell[a] + 1,) + cell[a + 1:]
            if up in cell_set:
                count += 1
    return count


def surface_volume(poly: Polyomino) -> int:
    """(dim-1)-dimensional surface volume 2*dim*n - 2*contacts of the cell
    union; equals the number of boundary facets."""
    return 2 * poly.dim * poly.n - 2 * facet_contacts(poly)


def boundary_facets(poly: Polyomino) -> int:
    """Count boundary facets directly (facets with no neighboring cell).

    Independent of surface_volume; the two must always agree.
    """
    cell_set = set(poly.cells)
    count = 0
    for cell in poly.cells:
        for nb in _neighbors(cell, poly.dim):
            if nb not in cell_set:
                count += 1
    return count


def iso_quotient_check(poly: Polyomino) -> tuple[float, bool]:
    """Isoperimetric quotient svol^dim / n^(dim-1) of the cell union and
    whether it meets the cube lower bound (2*dim)^dim.

    The comparison is done in exact integer arithmetic; the bound holds
    for every box-polytope with equality exactly at cubes.
    """
    sv = surface_volume(poly)
    d, n = poly.dim, poly.n
    satisfied = sv ** d >= (2 * d) ** d * n ** (d - 1)
    return sv ** d / n ** (d - 1), satisfied


def is_full_box(poly: Polyomino) -> bool:
    """True iff the cells are exactly a filled axis-aligned box."""
    arr = np.array(poly.cells, dtype=np.int64)
    sides = arr.max(axis=0) - arr.min(axis=0) + 1
    return int(np.prod(sides)) == poly.n


def _quasi_rect_order(limit: int, max_rows: int | None = None,
                      max_cols: int | None = None) -> list[tuple[int, int]]:
    """First `limit` cells of the greedy quasi-square filling of the
    non-negative quadrant (optionally clipped to a max_rows x max_cols box).

    Each step adds an empty cell adjacent to the shape that keeps the
    bounding box quasi-square (side lengths differing by at most 1) and
    maximizes the number of new contacts; ties go to the lowest
    (row, column).
    """
    cells: set[tuple[int, int]] = {(0, 0)}
    order = [(0, 0)]
    frontier: set[tuple[int, int]] = set()

    def in_bounds(r, c):
        if r < 0 or c < 0:
            return False
        if max_rows is not None and r >= max_rows:
            return False
        if max_cols is not None and c >= max_cols:
            return False
        return True

    def add_frontier(cell):
        r, c = cell
        for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            if in_bounds(*nb) and nb not in cells:
                frontier.add(nb)

    add_frontier((0, 0))
    rmax = cmax = 0
    while len(order) < limit:
        best = None
        for cand in frontier:
            r, c = cand
            nr, nc = max(rmax, r), max(cmax, c)
            if abs(nr - nc) > 1:
                continue
            gain = sum((r + dr, c + dc) in cells
                       for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)))
            key = (-gain, r, c)
            if best is None or key < best[0]:
                best = (key, cand)
        if best is None:
            raise RuntimeError("greedy fill ran out of candidates")
        cell = best[1]
        cells.add(cell)
        order.append(cell)
        frontier.discard(cell)
        add_frontier(cell)
        rmax = max(rmax, cell[0])
        cmax = max(cmax, cell[1])
    return order


def quasi_square(n: int) -> Polyomino:
    """Planar polyomino of n cells grown greedily inside a quasi-square
    bounding box; its contact count is floor(2n - 2*sqrt(n)), the digital
    planar maximum, for every n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return Polyomino(_quasi_rect_order(n), dim=2)


def _iroot3(x: int) -> int:
    r = int(round(x ** (1.0 / 3.0)))
    while r > 0 and r ** 3 > x:
        r -= 1
    while (r + 1) ** 3 <= x:
        r += 1
    return r


def quasi_cube(n: int) -> Polyomino:
    """Spatial polyomino of n cells: the largest quasi-cube (box with edge
    lengths differing by at most 1) of volume <= n, then a quasi-square
    layer on the face the next extension would fill, row-completed.

    At n = k^3 the contact count is exactly 3k^3 - 3k^2; for every n it
    stays within the digital upper bound floor(3n - 3 n^(2/3)).  Axis
    growth order is fixed (x before y before z, lowest corner first) and
    the cells for consecutive n are nested.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    t = _iroot3(n)
    for dims in ((t + 1, t + 1, t + 1), (t + 1, t + 1, t), (t + 1, t, t),
                 (t, t, t)):
        if dims[0] * dims[1] * dims[2] <= n:
            break
    dx, dy, dz = dims
    cells = [(i, j, k) for i in range(dx) for j in range(dy) for k in range(dz)]
    rest = n - dx * dy * dz
    if rest > 0:
        axis = dims.index(min(dims))
        face_axes = [a for a in range(3) if a != axis]
        face_dims = (dims[face_axes[0]], dims[face_axes[1]])
        layer = _quasi_rect_order(rest, max_rows=face_dims[0],
                                  max_cols=face_dims[1])
        for u, v in layer:
            cell = [0, 0, 0]
            cell[axis] = dims[axis]
            cell[face_axes[0]] = u
            cell[face_axes[1]] = v
            cells.append(tuple(cell))
    return Polyomino(cells, dim=3)


def to_digital_packing(poly: Polyomino) -> Packing:
    """Packing of unit-diameter balls centered at the polyomino's cells.

    The contact graph edge count equals facet_contacts(poly); tangency is
    decided exactly on the integer lattice.
    """
    pts = np.array(poly.cells, dtype=np.int64)
    lattice = LatticeData(points=pts, form=(1,) * poly.dim, touch_sq=1)
    return Packing(dim=poly.dim, radius=0.5,
                   centers=lattice.real_centers(0.5),
                   exact_lattice=True, lattice=lattice,
                   construction={"name": "digital", "params": {"n": poly.n}})
