"""Desk-scale rigid-cluster pipeline for unit spheres in 3-space:
enumerate candidate contact graphs, prune geometrically impossible ones,
solve the gauge-fixed distance system, classify rigidity, and report the
maximum contact count found.

Touching distance is normalized to 2 throughout (unit radius).
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

import numpy as np
from scipy.optimize import least_squares

from .geometry import Packing, contact_graph
from .graphs import CandidateGraph, all_graphs_up_to_iso, enumerate_candidates

logger = logging.getLogger(__name__)

__all__ = [
    "SolverConfig", "EmbeddingResult", "SearchReport", "PRUNE_RULES",
    "prune", "solve_embedding", "classify_rigidity", "rigidity_matrix",
    "max_contact_search", "brute_force_small", "cayley_menger_determinant",
    "PUTATIVE_MAX_CONTACTS",
]

# Largest contact counts reported by empirical cluster searches; exact for
# n <= 5, conjectural search targets beyond that.  Never asserted as truth.
PUTATIVE_MAX_CONTACTS = {
    2: 1, 3: 3, 4: 6, 5: 9, 6: 12, 7: 15, 8: 18, 9: 21, 10: 25, 11: 29,
    12: 33, 13: 36, 14: 40, 15: 44, 16: 48, 17: 52, 18: 56, 19: 60,
}


@dataclass(frozen=True)
class SolverConfig:
    restarts: int = 50
    seed: int = 0
    tol_eq: float = 1e-10
    tol_ineq: float = 1e-9
    workers: int = 1

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    def to_json(self) -> dict:
        return {"restarts": self.restarts, "seed": self.seed,
                "tol_eq": self.tol_eq, "tol_ineq": self.tol_ineq,
                "workers": self.workers}

    @classmethod
    def from_json(cls, doc: dict) -> "SolverConfig":
        return cls(**{k: doc[k] for k in
                      ("restarts", "seed", "tol_eq", "tol_ineq", "workers")
                      if k in doc})


DEFAULT_CONFIG = SolverConfig()


@dataclass
class EmbeddingResult:
    """Outcome of solving the distance system for one candidate graph."""

    coordinates: Optional[np.ndarray]      # (n, 3) gauge-fixed centers
    residual: float                        # max |D_ij - 2| over edges
    min_slack: float                       # min over non-edges of D_ij - 2
    realized_contacts: int
    realized: bool
    minimally_rigid: Optional[bool] = None
    infinitesimally_rigid: Optional[bool] = None

    def packing(self) -> Packing:
        if not self.realized:
            raise ValueError("no packing for an unrealized embedding")
        return Packing(dim=3, radius=1.0, centers=self.coordinates)


# ---------------------------------------------------------------------------
# pruning rules
#
# Each rule rejects only graphs that cannot be the contact graph of a unit
# sphere packing:
#   R1  a sphere touches at most 12 others (the 3-space kissing number).
#   R2  five spheres cannot be pairwise tangent: five points pairwise at
#       distance 2 do not embed in 3-space (their Cayley-Menger determinant
#       is nonzero), so K5 subgraphs are impossible.
#   R3  spheres tangent to both members of a tangent pair have centers on a
#       circle of radius sqrt(3) about the pair's midpoint; non-overlap
#       spaces them at least 2*asin(1/sqrt(3)) ~ 70.5 degrees apart, so a
#       tangent pair has at most 5 common neighbors.


def _rule_degree(g: CandidateGraph) -> bool:
    return max(g.degrees()) > 12


def _rule_k5(g: CandidateGraph) -> bool:
    masks = g.masks()
    deg = g.degrees()
    verts = [v for v in range(g.n) if deg[v] >= 4]
    for quint in combinations(verts, 5):
        if all(masks[a] >> b & 1 for a, b in combinations(quint, 2)):
            return True
    return False


def _rule_common_neighbors(g: CandidateGraph) -> bool:
    masks = g.masks()
    for i, j in g.edges:
        if bin(masks[i] & masks[j]).count("1") > 5:
            return True
    return False


PRUNE_RULES: list[tuple[str, Callable[[CandidateGraph], bool]]] = [
    ("R1", _rule_degree),
    ("R2", _rule_k5),
    ("R3", _rule_common_neighbors),
]


def prune(g: CandidateGraph,
          rules: list[tuple[str, Callable[[CandidateGraph], bool]]] | None = None
          ) -> Optional[str]:
    """Return the id of the first rule that rejects g, or None to keep it."""
    for rule_id, fires in (rules if rules is not None else PRUNE_RULES):
        if fires(g):
            return rule_id
    return None


def cayley_menger_determinant(sq_dists: np.ndarray) -> float:
    """Cayley-Menger determinant of a point configuration given by its
    matrix of squared distances; it vanishes whenever the points embed in
    a Euclidean space of dimension below (point count - 1)."""
    d2 = np.asarray(sq_dists, dtype=float)
    m = d2.shape[0]
    cm = np.ones((m + 1, m + 1))
    cm[0, 0] = 0.0
    cm[1:, 1:] = d2
    return float(np.linalg.det(cm))


# ---------------------------------------------------------------------------
# distance-system solver

def _free_coords(n: int) -> list[tuple[int, int]]:
    # gauge: ball 0 at the origin, ball 1 on the x-axis, ball 2 in the
    # xy-plane; 3n - 6 unknowns remain for n >= 3
    return [(i, a) for i in range(n) for a in range(3) if a < min(i, 3)]


def _unpack(x: np.ndarray, n: int, free: list[tuple[int, int]]) -> np.ndarray:
    coords = np.zeros((n, 3))
    for k, (i, a) in enumerate(free):
        coords[i, a] = x[k]
    return coords


def _residuals(coords: np.ndarray, edges, nonedges) -> np.ndarray:
    res = np.empty(len(edges) + len(nonedges))
    for k, (i, j) in enumerate(edges):
        d = coords[i] - coords[j]
        res[k] = d @ d - 4.0
    base = len(edges)
    for k, (i, j) in enumerate(nonedges):
        d = coords[i] - coords[j]
        res[base + k] = min(0.0, d @ d - 4.0)
    return res


def _jacobian(coords: np.ndarray, edges, nonedges,
              free: list[tuple[int, int]]) -> np.ndarray:
    n = coords.shape[0]
    col = {fa: k for k, fa in enumerate(free)}
    jac = np.zeros((len(edges) + len(nonedges), len(free)))

    def fill(row, i, j):
        d = coords[i] - coords[j]
        for a in range(3):
            if (i, a) in col:
                jac[row, col[(i, a)]] = 2.0 * d[a]
            if (j, a) in col:
                jac[row, col[(j, a)]] = -2.0 * d[a]

    for k, (i, j) in enumerate(edges):
        fill(k, i, j)
    base = len(edges)
    for k, (i, j) in enumerate(nonedges):
        d = coords[i] - coords[j]
        if d @ d < 4.0:
            fill(base + k, i, j)
    return jac


def _polish(coords: np.ndarray, edges, free) -> np.ndarray:
    # Gauss-Newton on the equality residuals alone, to machine precision
    for _ in range(20):
        res = np.array([(coords[i] - coords[j]) @ (coords[i] - coords[j]) - 4.0
                        for i, j in edges])
        if np.abs(res).max() < 1e-14:
            break
        jac = _jacobian(coords, edges, [], free)
        step, *_ = np.linalg.lstsq(jac, -res, rcond=None)
        x = np.array([coords[i, a] for i, a in free]) + step
        coords = _unpack(x, coords.shape[0], free)
    return coords


def _metrics(coords: np.ndarray, edges, nonedges) -> tuple[float, float]:
    residual = 0.0
    for i, j in edges:
        residual = max(residual, abs(np.linalg.norm(coords[i] - coords[j]) - 2.0))
    min_slack = np.inf
    for i, j in nonedges:
        min_slack = min(min_slack, np.linalg.norm(coords[i] - coords[j]) - 2.0)
    return residual, float(min_slack)


def solve_embedding(g: CandidateGraph,
                    cfg: SolverConfig | None = None) -> EmbeddingResult:
    """Try to realize g as the contact graph of a unit sphere packing.

    Damped least squares (Levenberg-Marquardt) on the squared-distance
    residuals over the gauge-fixed unknowns, with non-edge separation as
    hinge terms, multistarted from cfg.restarts seeded points.  A start is
    accepted when the max tangency violation is <= cfg.tol_eq and every
    non-edge slack is >= -cfg.tol_ineq.  Exhausting all restarts yields an
    unrealized result, which is inconclusive rather than an infeasibility
    certificate.
    """
    cfg = cfg or DEFAULT_CONFIG
    n = g.n
    edges = g.edges
    nonedges = [(i, j) for i in range(n) for j in range(i + 1, n)
                if not g.adjacency[i, j]]
    free = _free_coords(n)
    rng = np.random.default_rng(cfg.seed)
    span = 1.5 + 1.1 * n ** (1.0 / 3.0)
    best = EmbeddingResult(coordinates=None, residual=np.inf,
                           min_slack=-np.inf, realized_contacts=0,
                           realized=False)
    if not free:
        return best
    for _ in range(cfg.restarts):
        x0 = rng.uniform(-span, span, size=len(free))
        sol = least_squares(
            lambda x: _residuals(_unpack(x, n, free), edges, nonedges),
            x0,
            jac=lambda x: _jacobian(_unpack(x, n, free), edges, nonedges, free),
            method="lm", xtol=1e-14, ftol=1e-14, gtol=1e-14,
            max_nfev=400)
        coords = _polish(_unpack(sol.x, n, free), edges, free)
        residual, min_slack = _metrics(coords, edges, nonedges)
        if residual <= cfg.tol_eq and min_slack >= -cfg.tol_ineq:
            packing = Packing(dim=3, radius=1.0, centers=coords)
            realized = contact_graph(packing).contact_count
            return EmbeddingResult(coordinates=coords, residual=residual,
                                   min_slack=min_slack,
                                   realized_contacts=realized, realized=True)
        if residual < best.residual:
            best = EmbeddingResult(coordinates=coords, residual=residual,
                                   min_slack=min_slack, realized_contacts=0,
                                   realized=False)
    return best


def rigidity_matrix(coords: np.ndarray, contacts) -> np.ndarray:
    """Rigidity matrix of the bar framework on the active contacts: one row
    per contact with blocks (c_i - c_j) at i and (c_j - c_i) at j."""
    n = coords.shape[0]
    mat = np.zeros((len(contacts), 3 * n))
    for r, (i, j) in enumerate(contacts):
        d = coords[i] - coords[j]
        mat[r, 3 * i:3 * i + 3] = d
        mat[r, 3 * j:3 * j + 3] = -d
    return mat


def classify_rigidity(e: EmbeddingResult, g: CandidateGraph,
                      sv_tol: float = 1e-7) -> EmbeddingResult:
    """Set the rigidity flags of a realized embedding.

    minimally_rigid follows the counting definition on the realized
    contacts: n >= 4, every ball touching at least 3 others, and at least
    3n - 6 contacts in total.  infinitesimally_rigid holds iff the
    rigidity matrix of the active contacts has rank 3n - 6 (singular
    values above sv_tol).  Rank is reported as a computable sufficient
    proxy for nonlinear rigidity; a deficient rank means no certificate,
    not a proof of flexibility.
    """
    if not e.realized:
        raise ValueError("rigidity classification requires a realized embedding")
    n = g.n
    if n < 4:
        raise ValueError("rigidity definitions apply to n >= 4")
    packing = e.packing()
    cg = contact_graph(packing)
    contacts = sorted(cg.edges)
    degrees = cg.degrees()
    e.minimally_rigid = (len(contacts) >= 3 * n - 6
                         and min(degrees) >= 3)
    sv = np.linalg.svd(rigidity_matrix(e.coordinates, contacts),
                       compute_uv=False)
    rank = int((sv > sv_tol).sum())
    e.infinitesimally_rigid = rank == 3 * n - 6
    return e


@dataclass
class SearchReport:
    n: int
    graphs_enumerated: int = 0
    graphs_pruned_by_rule: dict = field(default_factory=dict)
    graphs_solved: int = 0
    graphs_realized: int = 0
    best_contacts: int = 0
    best_packing: Optional[Packing] = None
    wall_time: float = 0.0

    @property
    def graphs_pruned(self) -> int:
        return sum(self.graphs_pruned_by_rule.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "graphs_enumerated": self.graphs_enumerated,
            "graphs_pruned_by_rule": dict(sorted(
                self.graphs_pruned_by_rule.items())),
            "graphs_solved": self.graphs_solved,
            "graphs_realized": self.graphs_realized,
            "best_contacts": self.best_contacts,
            "best_packing": (None if self.best_packing is None
                             else self.best_packing.to_json()),
            "wall_time": self.wall_time,
        }


def max_contact_search(n: int,
                       budget: SolverConfig | None = None) -> SearchReport:
    """Run the full pipeline (enumerate, prune, solve, classify) for n
    spheres and report the maximum realized contact count.

    Deterministic for a fixed budget seed; the candidate stream is
    canonical and ties keep the earliest candidate.  Budget exhaustion on
    a candidate shows up in the counters, never as a failure.
    """
    cfg = budget or DEFAULT_CONFIG
    report = SearchReport(n=n)
    start = time.perf_counter()
    for g in enumerate_candidates(n):
        report.graphs_enumerated += 1
        rule = prune(g)
        tag = g.canonical().hex()
        if rule is not None:
            report.graphs_pruned_by_rule[rule] = \
                report.graphs_pruned_by_rule.get(rule, 0) + 1
            logger.debug("candidate %s verdict=pruned(%s)", tag, rule)
            continue
        report.graphs_solved += 1
        result = solve_embedding(g, cfg)
        logger.debug("candidate %s verdict=%s residual=%.3e", tag,
                     "realized" if result.realized else "unrealized",
                     result.residual)
        if not result.realized:
            continue
        report.graphs_realized += 1
        classify_rigidity(result, g)
        if result.realized_contacts > report.best_contacts:
            report.best_contacts = result.realized_contacts
            report.best_packing = result.packing()
    report.wall_time = time.perf_counter() - start
    return report


def brute_force_small(n: int, cfg: SolverConfig | None = None) -> int:
    """Maximum realizable contact count for n <= 5 spheres, by exhaustive
    realizability testing over all graphs on n vertices (not only the
    3n - 6 stream).  This is the oracle for the trivial cluster sizes."""
    if not 2 <= n <= 5:
        raise ValueError(f"brute force supports 2 <= n <= 5, got {n}")
    cfg = cfg or DEFAULT_CONFIG
    by_edges: dict[int, list[CandidateGraph]] = {}
    for g in all_graphs_up_to_iso(n):
        by_edges.setdefault(g.edge_count, []).append(g)
    for m in sorted(by_edges, reverse=True):
        for g in by_edges[m]:
            if m == 0:
                return 0
            if solve_embedding(g, cfg).realized:
                return m
    return 0
