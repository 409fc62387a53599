"""Canonical labeling and isomorph-free enumeration of candidate contact
graphs for the rigid-cluster pipeline.

Graphs are kept as adjacency bitmask rows.  The canonical form is the
lexicographically smallest upper-triangle bit string over all vertex
relabelings, found by backtracking restricted to the color classes of an
iterated degree/neighborhood refinement.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import numpy as np

logger = logging.getLogger(__name__)

__all__ = ["CandidateGraph", "canonical_form", "enumerate_candidates",
           "join_with_k2", "all_graphs_up_to_iso"]


@dataclass(frozen=True)
class CandidateGraph:
    """Simple loopless graph given by a symmetric 0/1 adjacency matrix."""

    n: int
    adjacency: np.ndarray

    def __post_init__(self):
        adj = np.asarray(self.adjacency, dtype=np.int8)
        object.__setattr__(self, "adjacency", adj)
        if adj.shape != (self.n, self.n):
            raise ValueError(f"adjacency must be {self.n}x{self.n}")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        if np.any(np.diag(adj)):
            raise ValueError("adjacency must have zero diagonal")
        if not np.isin(adj, (0, 1)).all():
            raise ValueError("adjacency entries must be 0/1")

    @classmethod
    def from_edges(cls, n: int, edges) -> "CandidateGraph":
        adj = np.zeros((n, n), dtype=np.int8)
        for i, j in edges:
            adj[i, j] = adj[j, i] = 1
        return cls(n, adj)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in np.argwhere(self.adjacency)
                if i < j]

    def degrees(self) -> list[int]:
        return [int(d) for d in self.adjacency.sum(axis=1)]

    def masks(self) -> tuple[int, ...]:
        return tuple(int(sum(1 << j for j in range(self.n)
                             if self.adjacency[i, j])) for i in range(self.n))

    def canonical(self) -> bytes:
        return canonical_form(self.n, self.masks())


def _refine_colors(n: int, masks: tuple[int, ...]) -> list[int]:
    """Iterated color refinement: a vertex color is the rank of its
    (color, sorted neighbor colors) signature; stable under isomorphism."""
    colors = [bin(m).count("1") for m in masks]
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in range(n) if masks[v] >> u & 1)
            sigs.append((colors[v], tuple(nb)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_form(n: int, masks: tuple[int, ...]) -> bytes:
    """Canonical certificate of a graph: the minimum, over relabelings that
    respect the refined color classes, of the row-wise adjacency bits."""
    colors = _refine_colors(n, masks)
    # canonical positions take the color classes in ascending color order
    slot_color = sorted(colors)
    perm: list[int] = []
    rows: list[int] = []
    used = [False] * n

    def bits_for(v: int) -> int:
        # adjacency of v against the already placed vertices
        b = 0
        for pos, u in enumerate(perm):
            if masks[v] >> u & 1:
                b |= 1 << pos
        return b

    def place(v: int, bits: int):
        used[v] = True
        perm.append(v)
        rows.append(bits)

    def unplace(v: int):
        used[v] = False
        perm.pop()
        rows.pop()

    def candidates(pos: int) -> list[tuple[int, int]]:
        return sorted((bits_for(v), v) for v in range(n)
                      if not used[v] and colors[v] == slot_color[pos])

    def greedy_tail(pos: int) -> list[int]:
        # minimal-bits completion of the current prefix, first tie taken
        tail = []
        placed = []
        for q in range(pos, n):
            bits, v = candidates(q)[0]
            place(v, bits)
            placed.append(v)
            tail.append(bits)
        for v in reversed(placed):
            unplace(v)
        return tail

    best = greedy_tail(0)

    def dfs(pos: int):
        # invariant: rows == best[:pos]
        nonlocal best
        if pos == n:
            return
        for bits, v in candidates(pos):
            if bits > best[pos]:
                break
            place(v, bits)
            if bits < best[pos]:
                best = rows + greedy_tail(pos + 1)
            dfs(pos + 1)
            unplace(v)

    dfs(0)
    return bytes(b for row in best for b in row.to_bytes(2, "big"))


def all_graphs_up_to_iso(n: int) -> Iterator[CandidateGraph]:
    """All simple graphs on n vertices, one representative per isomorphism
    class, in deterministic order (brute-force dedup; small n only)."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    for bits in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if bits >> k & 1]
        g = CandidateGraph.from_edges(n, edges)
        cf = g.canonical()
        if cf not in seen:
            seen.add(cf)
            yield g


def enumerate_candidates(n: int) -> Iterator[CandidateGraph]:
    """Stream of all nonisomorphic simple graphs on n vertices with exactly
    3n - 6 edges and minimum degree >= 3, one representative per class.

    Supported for 4 <= n <= 9; n >= 8 is long-running (the labeled search
    space grows combinatorially) and n = 9 may be impractical without a
    dedicated orderly-generation backend.
    """
    if not 4 <= n <= 9:
        raise ValueError(f"candidate enumeration supports 4 <= n <= 9, got {n}")
    if n >= 8:
        logger.warning("candidate enumeration for n=%d is long-running", n)
    m = 3 * n - 6
    pairs = list(combinations(range(n), 2))
    seen = set()
    count = 0
    for combo in combinations(range(len(pairs)), m):
        deg = [0] * n
        for k in combo:
            i, j = pairs[k]
            deg[i] += 1
            deg[j] += 1
        if min(deg) < 3:
            continue
        masks = [0] * n
        for k in combo:
            i, j = pairs[k]
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        cf = canonical_form(n, tuple(masks))
        if cf in seen:
            continue
        seen.add(cf)
        count += 1
        yield CandidateGraph.from_edges(n, [pairs[k] for k in combo])
    logger.info("enumerated %d candidate graphs for n=%d", count, n)


def join_with_k2(g: CandidateGraph) -> CandidateGraph:
    """Join of g with a single edge: two new vertices adjacent to each other
    and to every vertex of g.  Output has n + 2 vertices and
    m + 1 + 2n edges."""
    n = g.n
    adj = np.zeros((n + 2, n + 2), dtype=np.int8)
    adj[:n, :n] = g.adjacency
    adj[n, : n] = adj[: n, n] = 1
    adj[n + 1, : n] = adj[: n, n + 1] = 1
    adj[n, n + 1] = adj[n + 1, n] = 1
    return CandidateGraph(n + 2, adj)
