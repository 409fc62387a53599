import math
from itertools import combinations

import numpy as np
import pytest

from contactlab.bounds import upper_bound
from contactlab.cluster import (PUTATIVE_MAX_CONTACTS, SolverConfig,
                                brute_force_small, cayley_menger_determinant,
                                classify_rigidity, max_contact_search, prune,
                                rigidity_matrix, solve_embedding)
from contactlab.constructors import twin_bipyramids
from contactlab.geometry import contact_graph
from contactlab.graphs import CandidateGraph, enumerate_candidates


def complete_graph(n):
    return CandidateGraph.from_edges(n, list(combinations(range(n), 2)))


def octahedron_graph():
    return CandidateGraph.from_edges(6, [
        (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5),
        (2, 4), (2, 5), (3, 4), (3, 5)])


class TestPrune:
    def test_degree_rule(self):
        star = CandidateGraph.from_edges(
            14, [(0, i) for i in range(1, 14)])
        assert prune(star) == "R1"

    def test_k5_rule(self):
        # K5 plus two degree-3 vertices: a legitimate n=7 candidate shape
        edges = list(combinations(range(5), 2))
        edges += [(5, 6), (5, 0), (5, 1), (6, 2), (6, 3)]
        g = CandidateGraph.from_edges(7, edges)
        assert g.edge_count == 15
        assert prune(g) == "R2"

    def test_common_neighbor_rule(self):
        # hub edge (0,1) sharing 6 common neighbors
        edges = [(0, 1)]
        for v in range(2, 8):
            edges += [(0, v), (1, v)]
        edges += [(2, 3), (4, 5), (6, 7)]
        g = CandidateGraph.from_edges(8, edges)
        assert prune(g) == "R3"

    def test_candidates_kept(self):
        for n in (4, 5, 6):
            for g in enumerate_candidates(n):
                assert prune(g) is None

    def test_pentagonal_bipyramid_kept(self):
        # adjacent apexes share exactly 5 common neighbors: the boundary case
        edges = [(5, 6)]
        for v in range(5):
            edges += [(5, v), (6, v)]
        edges += [(i, (i + 1) % 5) for i in range(5)]
        g = CandidateGraph.from_edges(7, edges)
        assert prune(g) is None

    def test_pluggable_rules(self):
        g = complete_graph(4)
        assert prune(g, rules=[("X", lambda _: True)]) == "X"
        assert prune(g, rules=[]) is None


class TestCayleyMenger:
    def test_k5_configuration_is_infeasible(self):
        d2 = np.full((5, 5), 4.0)
        np.fill_diagonal(d2, 0.0)
        assert abs(cayley_menger_determinant(d2)) > 1.0

    def test_tetrahedron_distances_embed(self):
        # 4 points pairwise at distance 2 exist in 3-space: the determinant
        # equals 288 * squared volume, nonzero and of the feasible sign
        d2 = np.full((4, 4), 4.0)
        np.fill_diagonal(d2, 0.0)
        det = cayley_menger_determinant(d2)
        vol2 = det / 288.0
        assert vol2 > 0
        # volume of a regular tetrahedron with edge 2
        assert math.sqrt(vol2) == pytest.approx(8 / (6 * math.sqrt(2)))

    def test_five_coplanar_points_vanish(self, rng):
        pts = np.zeros((5, 3))
        pts[:, :2] = rng.uniform(-2, 2, (5, 2))
        d2 = ((pts[:, None, :] - pts[None, :, :]) ** 2).sum(-1)
        assert abs(cayley_menger_determinant(d2)) < 1e-8


class TestSolveEmbedding:
    def test_k4_is_regular_tetrahedron(self):
        res = solve_embedding(complete_graph(4))
        assert res.realized
        assert res.residual <= 1e-10
        assert res.realized_contacts == 6
        d = res.coordinates[:, None, :] - res.coordinates[None, :, :]
        dist = np.sqrt((d ** 2).sum(-1))[np.triu_indices(4, 1)]
        assert np.allclose(sorted(dist), 2.0, atol=1e-9)

    def test_k5_minus_edge_realizes_nine(self):
        g = CandidateGraph.from_edges(5, [e for e in combinations(range(5), 2)
                                          if e != (0, 1)])
        res = solve_embedding(g)
        assert res.realized
        assert res.realized_contacts == 9
        # the missing pair is the apex pair of the triangular bipyramid
        gap = np.linalg.norm(res.coordinates[0] - res.coordinates[1])
        assert gap == pytest.approx(2 * math.sqrt(8.0 / 3.0), abs=1e-6)

    def test_octahedron_realizes_twelve(self):
        res = solve_embedding(octahedron_graph())
        assert res.realized
        assert res.realized_contacts == 12

    def test_k5_is_unrealized(self):
        res = solve_embedding(complete_graph(5), SolverConfig(restarts=30))
        assert not res.realized

    def test_gauge_fixing(self):
        res = solve_embedding(complete_graph(4))
        c = res.coordinates
        assert np.allclose(c[0], 0.0, atol=1e-12)
        assert np.allclose(c[1, 1:], 0.0, atol=1e-12)
        assert abs(c[2, 2]) < 1e-12

    def test_distance_multiset_independent_of_seed(self):
        g = octahedron_graph()
        dists = []
        for seed in (0, 99):
            res = solve_embedding(g, SolverConfig(seed=seed))
            assert res.realized
            d = res.coordinates[:, None, :] - res.coordinates[None, :, :]
            dists.append(np.sort(np.sqrt((d ** 2).sum(-1))
                                 [np.triu_indices(6, 1)]))
        assert np.allclose(dists[0], dists[1], atol=1e-8)

    def test_realized_contacts_match_contact_graph(self):
        for g in enumerate_candidates(6):
            res = solve_embedding(g)
            if res.realized:
                recount = contact_graph(res.packing()).contact_count
                assert recount == res.realized_contacts


class TestClassifyRigidity:
    def test_tetrahedron(self):
        g = complete_graph(4)
        res = classify_rigidity(solve_embedding(g), g)
        assert res.minimally_rigid
        assert res.infinitesimally_rigid

    def test_octahedron(self):
        g = octahedron_graph()
        res = classify_rigidity(solve_embedding(g), g)
        assert res.minimally_rigid
        assert res.infinitesimally_rigid

    def test_twin_bipyramids_flexible(self):
        p = twin_bipyramids()
        contacts = sorted(contact_graph(p).edges)
        assert len(contacts) == 21
        sv = np.linalg.svd(rigidity_matrix(p.centers, contacts),
                           compute_uv=False)
        rank = int((sv > 1e-7).sum())
        assert rank < 21

    def test_rank_invariant_under_vertex_permutation(self, rng):
        p = twin_bipyramids()
        perm = rng.permutation(p.n)
        moved = p.centers[perm]
        from contactlab.geometry import Packing
        contacts = sorted(contact_graph(
            Packing(dim=3, radius=1.0, centers=moved)).edges)
        sv = np.linalg.svd(rigidity_matrix(moved, contacts), compute_uv=False)
        assert int((sv > 1e-7).sum()) == 20

    def test_unrealized_rejected(self):
        g = complete_graph(5)
        res = solve_embedding(g, SolverConfig(restarts=5))
        with pytest.raises(ValueError):
            classify_rigidity(res, g)

    def test_small_n_rejected(self):
        g = complete_graph(3)
        res = solve_embedding(g)
        assert res.realized
        with pytest.raises(ValueError):
            classify_rigidity(res, g)


class TestSearch:
    @pytest.mark.parametrize("n,best", [(4, 6), (5, 9)])
    def test_trivial_sizes(self, n, best):
        rep = max_contact_search(n)
        assert rep.best_contacts == best
        assert rep.graphs_enumerated == 1
        assert rep.best_packing is not None
        assert contact_graph(rep.best_packing).contact_count == best

    def test_n6(self):
        rep = max_contact_search(6)
        assert rep.best_contacts == 12
        assert rep.graphs_enumerated == 4
        assert rep.graphs_realized == 2
        assert rep.graphs_enumerated == rep.graphs_pruned + rep.graphs_solved

    def test_counters_consistent_and_json(self):
        rep = max_contact_search(5)
        doc = rep.to_json()
        assert doc["best_contacts"] == 9
        assert doc["graphs_enumerated"] == doc["graphs_solved"] + \
            sum(doc["graphs_pruned_by_rule"].values())
        assert doc["best_packing"]["dim"] == 3

    def test_deterministic_for_fixed_seed(self):
        a = max_contact_search(5, SolverConfig(seed=4))
        b = max_contact_search(5, SolverConfig(seed=4))
        assert np.allclose(a.best_packing.centers, b.best_packing.centers)

    def test_realized_below_general_upper_bound(self):
        for n in (4, 5, 6):
            rep = max_contact_search(n)
            assert rep.best_contacts < upper_bound("C3_GENERAL", n).value_real


class TestBruteForceSmall:
    @pytest.mark.parametrize("n,best", [(2, 1), (3, 3), (4, 6), (5, 9)])
    def test_values(self, n, best):
        assert brute_force_small(n) == best

    def test_domain(self):
        with pytest.raises(ValueError):
            brute_force_small(6)
        with pytest.raises(ValueError):
            brute_force_small(1)


class TestPutativeTargets:
    def test_targets_are_documented_not_asserted(self):
        # search targets from empirical studies; exact only for n <= 5
        assert PUTATIVE_MAX_CONTACTS[7] == 15
        assert PUTATIVE_MAX_CONTACTS[9] == 21
        assert PUTATIVE_MAX_CONTACTS[19] == 60


class TestSolverConfig:
    def test_json_round_trip(self):
        cfg = SolverConfig(restarts=10, seed=3, tol_eq=1e-9, tol_ineq=1e-8,
                           workers=2)
        assert SolverConfig.from_json(cfg.to_json()) == cfg

    def test_validation(self):
        with pytest.raises(ValueError):
            SolverConfig(restarts=0)
        with pytest.raises(ValueError):
            SolverConfig(workers=0)
