"""Total separability of ball packings.

A packing is totally separable when every pair of balls admits a
hyperplane that separates the two and misses the interior of every ball
in the packing.  For a tangent pair the candidate plane is forced: it
must pass through the point of tangency with its normal along the
center segment (any other plane through a separator of the pair would
cut one of the two balls).  Failure of that forced plane is therefore a
certificate of non-separability.  For non-tangent pairs the search is
heuristic, so the verdict is tri-state: Separable, NotSeparable, or an
honest Unknown.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .geometry import (DEFAULT_TOL, InvalidPackingError, Packing,
                       ToleranceConfig, validate_packing)

__all__ = ["Hyperplane", "SeparabilityReport", "total_separability",
           "is_digital", "sample_directions"]


@dataclass(frozen=True)
class Hyperplane:
    """Plane {x : <normal, x> = offset} with a unit normal."""

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        normal = np.asarray(self.normal, dtype=float)
        object.__setattr__(self, "normal", normal)
        if abs(np.linalg.norm(normal) - 1.0) > 1e-12:
            raise ValueError("hyperplane normal must be a unit vector")

    def signed_distance(self, points: np.ndarray) -> np.ndarray:
        return np.asarray(points, dtype=float) @ self.normal - self.offset

    def to_json(self) -> dict:
        return {"normal": [float(x) for x in self.normal],
                "offset": float(self.offset)}


@dataclass
class SeparabilityReport:
    status: str                                  # Separable | NotSeparable | Unknown
    witnesses: dict = field(default_factory=dict)
    violation: Optional[tuple] = None            # ((i, j), blocker, Hyperplane)
    unresolved: list = field(default_factory=list)

    def to_json(self) -> dict:
        doc = {"status": self.status}
        if self.status == "Separable":
            doc["witnesses"] = {f"{i},{j}": h.to_json()
                                for (i, j), h in sorted(self.witnesses.items())}
        if self.violation is not None:
            (i, j), k, plane = self.violation
            doc["violation"] = {"pair": [i, j], "blocking": k,
                                "plane": plane.to_json()}
        if self.unresolved:
            doc["unresolved"] = [list(p) for p in sorted(self.unresolved)]
        return doc


def _icosphere_vertices(frequency: int) -> np.ndarray:
    """Vertices of the icosahedron subdivided `frequency` times per edge,
    projected to the unit sphere."""
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    base = []
    for a in (-1.0, 1.0):
        for b in (-phi, phi):
            base.extend([(0.0, a, b), (a, b, 0.0), (b, 0.0, a)])
    verts = np.array(base)
    verts /= np.linalg.norm(verts, axis=1)[:, None]
    # faces from pairwise nearest triples
    d2 = ((verts[:, None, :] - verts[None, :, :]) ** 2).sum(-1)
    edge_thr = 1.2  # squared edge length of unit icosahedron is ~1.0557
    faces = []
    for i in range(12):
        for j in range(i + 1, 12):
            if d2[i, j] > edge_thr:
                continue
            for k in range(j + 1, 12):
                if d2[i, k] <= edge_thr and d2[j, k] <= edge_thr:
                    faces.append((i, j, k))
    pts = {}
    f = frequency
    for (i, j, k) in faces:
        for u in range(f + 1):
            for v in range(f + 1 - u):
                w = f - u - v
                p = (u * verts[i] + v * verts[j] + w * verts[k]) / f
                p = p / np.linalg.norm(p)
                key = tuple(np.round(p, 9))
                pts[key] = p
    out = np.array(sorted(pts.values(), key=lambda q: tuple(np.round(q, 9))))
    return out


def sample_directions(dim: int, count: int = 240) -> np.ndarray:
    """Deterministic set of `count` unit directions in `dim`-space.

    dim=2 uses evenly spaced half-circle angles, dim=3 an icosahedral
    subdivision, higher dimensions a fixed-seed Gaussian draw.
    """
    if dim == 2:
        angles = np.pi * np.arange(count) / count
        return np.stack([np.cos(angles), np.sin(angles)], axis=1)
    if dim == 3:
        freq = 1
        while 10 * freq * freq + 2 < count:
            freq += 1
        verts = _icosphere_vertices(freq)
        return verts[:count]
    rng = np.random.default_rng(0)
    v = rng.standard_normal((count, dim))
    return v / np.linalg.norm(v, axis=1)[:, None]


def _gap_cuts(values: np.ndarray, min_gap: float) -> list[float]:
    """Midpoints of gaps >= min_gap between consecutive sorted values."""
    order = np.sort(values)
    cuts = []
    for a, b in zip(order[:-1], order[1:]):
        if b - a >= min_gap:
            cuts.append(0.5 * (a + b))
    return cuts


def total_separability(p: Packing, tol: ToleranceConfig | None = None,
                       n_directions: int = 240) -> SeparabilityReport:
    """Decide total separability of a valid packing.

    Tangent pairs are decided exactly by their forced plane; a blocked
    forced plane yields NotSeparable with a checkable certificate.  For
    the remaining pairs, witnesses are searched among pair bisectors,
    axis-aligned lattice midplanes (exact packings) and cuts normal to a
    fixed deterministic direction sample; any plane that misses every
    ball interior witnesses all pairs it splits.  Pairs left without a
    witness produce the Unknown verdict.
    """
    tol = tol or DEFAULT_TOL
    violations = validate_packing(p, tol)
    if violations:
        raise InvalidPackingError(violations)
    eps_contact, _ = tol.resolve(p.radius)
    centers = p.centers
    n, r = p.n, p.radius

    if p.exact_lattice and p.lattice is not None:
        q = p.lattice.squared_distances()
        touch_mask = q == p.lattice.touch_sq
    else:
        diff = centers[:, None, :] - centers[None, :, :]
        dist = np.sqrt(np.einsum("ija,ija->ij", diff, diff))
        touch_mask = np.abs(dist - 2.0 * r) <= eps_contact

    witnessed = np.zeros((n, n), dtype=bool)
    np.fill_diagonal(witnessed, True)
    witnesses: dict = {}
    clean_planes: list[Hyperplane] = []
    margin = r - eps_contact

    def try_bisector(i: int, j: int) -> Optional[Hyperplane]:
        u = centers[j] - centers[i]
        nrm = np.linalg.norm(u)
        if nrm == 0:
            return None
        u = u / nrm
        offset = float(u @ (centers[i] + centers[j]) / 2.0)
        plane = Hyperplane(u, offset)
        if np.all(np.abs(plane.signed_distance(centers)) >= margin):
            return plane
        return None

    # tangent pairs first: the bisector is the only admissible plane
    for i in range(n):
        for j in range(i + 1, n):
            if not touch_mask[i, j]:
                continue
            u = centers[j] - centers[i]
            u = u / np.linalg.norm(u)
            offset = float(u @ (centers[i] + centers[j]) / 2.0)
            plane = Hyperplane(u, offset)
            sd = np.abs(plane.signed_distance(centers))
            sd[i] = sd[j] = r  # the pair itself sits exactly at distance r
            blockers = np.nonzero(sd < margin)[0]
            if blockers.size:
                return SeparabilityReport(
                    status="NotSeparable",
                    violation=((i, j), int(blockers[0]), plane))
            witnesses[(i, j)] = plane
            witnessed[i, j] = witnessed[j, i] = True
            clean_planes.append(plane)

    # bisectors of non-tangent pairs
    for i in range(n):
        for j in range(i + 1, n):
            if witnessed[i, j]:
                continue
            plane = try_bisector(i, j)
            if plane is not None:
                witnesses[(i, j)] = plane
                witnessed[i, j] = witnessed[j, i] = True
                clean_planes.append(plane)

    # axis-aligned midplanes between consecutive coordinate layers
    for axis in range(p.dim):
        u = np.zeros(p.dim)
        u[axis] = 1.0
        for cut in _gap_cuts(centers[:, axis], 2.0 * margin):
            clean_planes.append(Hyperplane(u.copy(), float(cut)))

    # cuts normal to sampled directions
    if not witnessed.all():
        for u in sample_directions(p.dim, n_directions):
            t = centers @ u
            for cut in _gap_cuts(t, 2.0 * margin):
                clean_planes.append(Hyperplane(u.copy(), float(cut)))

    # a clean plane witnesses every pair it splits
    for plane in clean_planes:
        if witnessed.all():
            break
        sd = plane.signed_distance(centers)
        neg, pos = sd < 0, sd > 0
        split = np.outer(neg, pos) | np.outer(pos, neg)
        new = split & ~witnessed
        for i, j in np.argwhere(new):
            if i < j:
                witnesses[(int(i), int(j))] = plane
        witnessed |= split

    if witnessed.all():
        return SeparabilityReport(status="Separable", witnesses=witnesses)
    unresolved = [(int(i), int(j)) for i, j in np.argwhere(~witnessed) if i < j]
    return SeparabilityReport(status="Unknown", witnesses=witnesses,
                              unresolved=unresolved)


def is_digital(p: Packing, tol: ToleranceConfig | None = None):
    """Detect whether all centers lie on a common translated and scaled
    integer lattice with spacing 2 * radius.

    Returns (True, scale, offset) with scale = 2 * radius and offset the
    first center, or (False, None, None).  Construction-exact digital
    packings short-circuit; otherwise integer coordinates are
    reconstructed within tolerance.
    """
    scale = 2.0 * p.radius
    if (p.exact_lattice and p.lattice is not None
            and all(w == 1 for w in p.lattice.form) and p.lattice.touch_sq == 1):
        return True, scale, p.centers[0].copy()
    u = (p.centers - p.centers[0]) / scale
    atol = 1e-9 * (1.0 + float(np.abs(u).max()))
    if np.allclose(u, np.round(u), atol=atol, rtol=0):
        return True, scale, p.centers[0].copy()
    return False, None, None
