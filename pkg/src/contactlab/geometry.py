"""Geometric core: packings of congruent balls, contact graphs, and
Monte Carlo volume of outer parallel domains.

A packing is a finite set of equal-radius balls with pairwise
non-overlapping interiors; its contact graph joins every tangent pair.
Packings built on a lattice carry an exact integer model of their
centers so tangency and overlap can be decided without floating point.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np


class MalformedInputError(ValueError):
    """Input does not satisfy structural requirements (shape, parity, type)."""


class InvalidPackingError(ValueError):
    """Packing violates the non-overlap condition; carries the offender list."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__(f"{len(self.violations)} overlapping pair(s): "
                         f"{self.violations[:5]}")


def unit_ball_volume(dim: int) -> float:
    """Volume of the unit ball in `dim` dimensions.

    Uses the recurrence w_0 = 1, w_1 = 2, w_d = w_{d-2} * 2*pi/d, which
    avoids evaluating the Gamma function at half integers.
    """
    if dim < 0:
        raise ValueError(f"dimension must be >= 0, got {dim}")
    if dim == 0:
        return 1.0
    if dim == 1:
        return 2.0
    return unit_ball_volume(dim - 2) * 2.0 * math.pi / dim


@dataclass(frozen=True)
class ToleranceConfig:
    """Tolerances for tangency and overlap decisions.

    A pair touches iff abs(dist - 2r) <= eps_contact and a packing is
    valid iff every pairwise distance is >= 2r - eps_overlap.  Unset
    values default to 1e-9 * radius at resolution time.  eps_overlap may
    not exceed eps_contact, otherwise a pair could be classified as
    overlapping yet not touching.
    """

    eps_contact: Optional[float] = None
    eps_overlap: Optional[float] = None

    def __post_init__(self):
        for name, value in (("eps_contact", self.eps_contact),
                            ("eps_overlap", self.eps_overlap)):
            if value is not None and not value > 0:
                raise ValueError(f"{name} must be positive, got {value}")
        if (self.eps_contact is not None and self.eps_overlap is not None
                and self.eps_overlap > self.eps_contact):
            raise ValueError("eps_overlap must not exceed eps_contact")

    def resolve(self, radius: float) -> tuple[float, float]:
        """Return concrete (eps_contact, eps_overlap) for a given radius."""
        default = 1e-9 * radius
        ec = self.eps_contact if self.eps_contact is not None else default
        eo = self.eps_overlap if self.eps_overlap is not None else default
        eo = min(eo, ec)
        return ec, eo


DEFAULT_TOL = ToleranceConfig()


@dataclass(frozen=True)
class LatticeData:
    """Exact integer model of lattice-derived centers.

    Center i equals points[i] * diag(sqrt(form)) * step with
    step = 2 * radius / sqrt(touch_sq), so the weighted squared lattice
    distance  q(i,j) = sum_a form[a] * (points[i,a] - points[j,a])**2
    is an integer and two balls touch iff q == touch_sq (overlap iff
    q < touch_sq).
    """

    points: np.ndarray            # (n, dim) int64
    form: tuple[int, ...]         # per-axis quadratic form weights
    touch_sq: int                 # weighted squared distance at tangency

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.int64)
        object.__setattr__(self, "points", pts)
        if pts.ndim != 2:
            raise MalformedInputError("lattice points must be a 2-D array")
        if len(self.form) != pts.shape[1]:
            raise MalformedInputError("form length must match dimension")
        if any(w <= 0 for w in self.form):
            raise MalformedInputError("form weights must be positive")
        if self.touch_sq <= 0:
            raise MalformedInputError("touch_sq must be positive")

    def squared_distances(self) -> np.ndarray:
        """Exact (n, n) matrix of weighted squared lattice distances."""
        diffs = self.points[:, None, :] - self.points[None, :, :]
        w = np.asarray(self.form, dtype=np.int64)
        return np.einsum("ija,ija,a->ij", diffs, diffs, w)

    def real_centers(self, radius: float) -> np.ndarray:
        step = 2.0 * radius / math.sqrt(self.touch_sq)
        scale = np.sqrt(np.asarray(self.form, dtype=float)) * step
        return self.points.astype(float) * scale


@dataclass
class Packing:
    """Finite packing of `n` balls of a common radius in `dim`-space."""

    dim: int
    radius: float
    centers: np.ndarray
    exact_lattice: bool = False
    lattice: Optional[LatticeData] = None
    construction: Optional[dict] = None

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < 2:
            raise MalformedInputError(f"dim must be an integer >= 2, got {self.dim}")
        self.dim = int(self.dim)
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise MalformedInputError(f"radius must be positive, got {self.radius}")
        try:
            centers = np.asarray(self.centers, dtype=float)
        except (TypeError, ValueError) as exc:
            raise MalformedInputError(f"centers are not numeric vectors: {exc}")
        if centers.ndim != 2 or centers.shape[0] == 0:
            raise MalformedInputError(
                "centers must be a non-empty list of equal-length vectors")
        if centers.shape[1] != self.dim:
            raise MalformedInputError(
                f"center vectors have length {centers.shape[1]}, expected {self.dim}")
        if not np.all(np.isfinite(centers)):
            raise MalformedInputError("centers contain non-finite values")
        self.centers = centers
        if self.exact_lattice and self.lattice is None:
            raise MalformedInputError("exact_lattice requires lattice data")
        if self.lattice is not None:
            if self.lattice.points.shape != centers.shape:
                raise MalformedInputError("lattice points do not match centers")
            recon = self.lattice.real_centers(self.radius)
            if not np.allclose(recon, centers, atol=1e-9 * self.radius, rtol=0):
                raise MalformedInputError("lattice data inconsistent with centers")

    @property
    def n(self) -> int:
        return self.centers.shape[0]

    def to_json(self) -> dict:
        doc = {
            "dim": self.dim,
            "radius": float(self.radius),
            "exact_lattice": bool(self.exact_lattice),
            "centers": [[float(x) for x in row] for row in self.centers],
        }
        if self.lattice is not None:
            doc["lattice"] = {
                "points": self.lattice.points.tolist(),
                "form": list(self.lattice.form),
                "touch_sq": int(self.lattice.touch_sq),
            }
        if self.construction is not None:
            doc["construction"] = self.construction
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "Packing":
        try:
            dim = doc["dim"]
            radius = doc["radius"]
            exact = bool(doc.get("exact_lattice", False))
            centers = doc["centers"]
        except (KeyError, TypeError) as exc:
            raise MalformedInputError(f"packing document missing field: {exc}")
        lattice = None
        if "lattice" in doc:
            lat = doc["lattice"]
            lattice = LatticeData(np.asarray(lat["points"], dtype=np.int64),
                                  tuple(int(w) for w in lat["form"]),
                                  int(lat["touch_sq"]))
        return cls(dim=dim, radius=radius, centers=centers,
                   exact_lattice=exact and lattice is not None,
                   lattice=lattice,
                   construction=doc.get("construction"))

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=1)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "Packing":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


@dataclass(frozen=True)
class ContactGraph:
    """Simple graph on packing indices; edges are tangent pairs (i < j)."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise MalformedInputError(f"loop edge {e}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise MalformedInputError(f"edge {e} out of range for n={self.n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def contact_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, doc: dict) -> "ContactGraph":
        return cls(n=int(doc["n"]),
                   edges=frozenset((int(i), int(j)) for i, j in doc["edges"]))


def _pair_distances(p: Packing) -> np.ndarray:
    d = p.centers[:, None, :] - p.centers[None, :, :]
    return np.sqrt(np.einsum("ija,ija->ij", d, d))


def validate_packing(p: Packing, tol: ToleranceConfig | None = None) -> list:
    """Check the non-overlap condition; return the (possibly empty) list of
    violations as (i, j, distance) triples.

    Lattice-exact packings are checked with integer arithmetic on weighted
    squared distances so the result carries no floating point slack.
    """
    tol = tol or DEFAULT_TOL
    _, eps_overlap = tol.resolve(p.radius)
    violations = []
    if p.exact_lattice and p.lattice is not None:
        q = p.lattice.squared_distances()
        step = 2.0 * p.radius / math.sqrt(p.lattice.touch_sq)
        bad = np.argwhere(q < p.lattice.touch_sq)
        for i, j in bad:
            if i < j:
                violations.append((int(i), int(j), math.sqrt(float(q[i, j])) * step))
        return violations
    dist = _pair_distances(p)
    lower = 2.0 * p.radius - eps_overlap
    bad = np.argwhere(dist < lower)
    for i, j in bad:
        if i < j:
            violations.append((int(i), int(j), float(dist[i, j])))
    return violations


def contact_graph(p: Packing, tol: ToleranceConfig | None = None) -> ContactGraph:
    """Extract the contact graph of a valid packing.

    Edge (i, j) is present iff abs(||c_i - c_j|| - 2r) <= eps_contact;
    lattice-exact packings instead use the integer test q == touch_sq.
    Raises InvalidPackingError when the packing has overlaps.
    """
    tol = tol or DEFAULT_TOL
    violations = validate_packing(p, tol)
    if violations:
        raise InvalidPackingError(violations)
    if p.exact_lattice and p.lattice is not None:
        q = p.lattice.squared_distances()
        touching = np.argwhere(q == p.lattice.touch_sq)
    else:
        eps_contact, _ = tol.resolve(p.radius)
        dist = _pair_distances(p)
        touching = np.argwhere(np.abs(dist - 2.0 * p.radius) <= eps_contact)
    edges = frozenset((int(i), int(j)) for i, j in touching if i < j)
    return ContactGraph(n=p.n, edges=edges)


class VolumeEstimate(NamedTuple):
    estimate: float
    stderr: float


def parallel_volume_estimate(p: Packing, lam: float, samples: int,
                             seed: int = 0,
                             chunk: int = 1 << 16) -> VolumeEstimate:
    """Hit-or-miss Monte Carlo volume of the union of the packing's balls
    inflated to radius (1 + lam) * radius.

    Samples are drawn uniformly from the axis-aligned bounding box of the
    inflated balls; the estimate is unbiased and reproducible for a fixed
    seed (the draw order is independent of `chunk`).
    Returns (estimate, standard error).
    """
    if lam <= 0:
        raise ValueError(f"outer radius lam must be positive, got {lam}")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    rr = (1.0 + lam) * p.radius
    lo = p.centers.min(axis=0) - rr
    hi = p.centers.max(axis=0) + rr
    box_volume = float(np.prod(hi - lo))
    rng = np.random.default_rng(seed)
    rr2 = rr * rr
    hits = 0
    remaining = int(samples)
    while remaining > 0:
        m = min(chunk, remaining)
        pts = rng.uniform(lo, hi, size=(m, p.dim))
        inside = np.zeros(m, dtype=bool)
        for c in p.centers:
            d2 = np.einsum("ia,ia->i", pts - c, pts - c)
            inside |= d2 <= rr2
        hits += int(inside.sum())
        remaining -= m
    phat = hits / samples
    estimate = box_volume * phat
    stderr = box_volume * math.sqrt(max(phat * (1.0 - phat), 0.0) / samples)
    return VolumeEstimate(estimate, stderr)
