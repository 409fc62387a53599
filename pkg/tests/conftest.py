import numpy as np
import pytest

from contactlab.digital import Polyomino
from contactlab.geometry import Packing


def random_connected_polyomino(rng, n, dim):
    """Grow a connected polyomino of n cells by seeded random accretion."""
    cells = {(0,) * dim}
    frontier = set()

    def neighbors(c):
        for a in range(dim):
            for s in (-1, 1):
                yield c[:a] + (c[a] + s,) + c[a + 1:]

    frontier.update(neighbors((0,) * dim))
    while len(cells) < n:
        cand = sorted(frontier)
        pick = cand[rng.integers(len(cand))]
        cells.add(pick)
        frontier.discard(pick)
        frontier.update(nb for nb in neighbors(pick) if nb not in cells)
    return Polyomino(cells, dim=dim)


def snake_polyomino(n, dim=2):
    """Winding single-cell-wide path, the adversarial high-perimeter shape."""
    cells = []
    r, c, direction = 0, 0, 1
    while len(cells) < n:
        cells.append((r, c) + (0,) * (dim - 2))
        if len(cells) == n:
            break
        nc = c + direction
        if 0 <= nc < 6:
            c = nc
        else:
            r += 1
            direction = -direction
    return Polyomino(cells, dim=dim)


def random_rotation(dim, rng):
    """Haar-ish random rotation matrix from a seeded generator."""
    a = rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(a)
    q *= np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def regular_tetrahedron(radius=1.0):
    """Four unit balls with pairwise tangent centers (edge length 2r)."""
    v = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]],
                 dtype=float)
    v *= 2.0 * radius / np.linalg.norm(v[0] - v[1])
    return Packing(dim=3, radius=radius, centers=v)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
