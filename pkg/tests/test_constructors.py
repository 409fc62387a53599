import math

import numpy as np
import pytest

from contactlab.bounds import exact_formula, fcc_octahedral_lower
from contactlab.constructors import (fcc_bipyramid, fcc_cluster,
                                     fcc_neighbors, hex_spiral,
                                     hex_spiral_coords, twin_bipyramids)
from contactlab.geometry import (MalformedInputError, contact_graph,
                                 validate_packing)


class TestHexSpiral:
    @pytest.mark.parametrize("n,contacts", [(2, 1), (7, 12), (19, 42)])
    def test_known_counts(self, n, contacts):
        assert contact_graph(hex_spiral(n)).contact_count == contacts

    def test_matches_planar_formula(self):
        for n in range(2, 80):
            got = contact_graph(hex_spiral(n)).contact_count
            assert got == exact_formula("C2", n).value_int, f"n={n}"

    def test_exact_lattice_validation(self):
        p = hex_spiral(30)
        assert p.exact_lattice
        assert validate_packing(p) == []
        # minimum squared lattice distance is exactly the touching value
        q = p.lattice.squared_distances()
        off = q[np.triu_indices(p.n, 1)]
        assert off.min() == p.lattice.touch_sq

    def test_spiral_is_a_chain(self):
        prev = []
        for n in range(1, 40):
            cur = list(hex_spiral_coords(n))
            assert cur[:-1] == prev
            prev = cur

    def test_centers_on_triangular_lattice(self):
        p = hex_spiral(10)
        ys = p.centers[:, 1] / math.sqrt(3.0)
        assert np.allclose(ys, np.round(ys), atol=1e-12)

    def test_domain(self):
        with pytest.raises(ValueError):
            hex_spiral(0)


class TestFccBipyramid:
    @pytest.mark.parametrize("k,n,contacts", [(2, 6, 12), (3, 19, 60), (4, 44, 168)])
    def test_counts_match_closed_forms(self, k, n, contacts):
        p = fcc_bipyramid(k)
        assert p.n == n
        assert contact_graph(p).contact_count == contacts

    def test_counts_for_k_up_to_six(self):
        for k in range(2, 7):
            p = fcc_bipyramid(k)
            want_n, want_c = fcc_octahedral_lower(k)
            assert p.n == want_n
            assert contact_graph(p).contact_count == want_c

    def test_min_distance_exactly_two(self):
        p = fcc_bipyramid(3)
        d = p.centers[:, None, :] - p.centers[None, :, :]
        dist = np.sqrt((d ** 2).sum(-1))
        assert dist[np.triu_indices(p.n, 1)].min() == pytest.approx(2.0, abs=1e-12)

    def test_parity_of_lattice_points(self):
        p = fcc_bipyramid(4)
        assert (p.lattice.points.sum(axis=1) % 2 == 0).all()

    def test_domain(self):
        with pytest.raises(ValueError):
            fcc_bipyramid(1)


class TestFccCluster:
    def test_nearest_pair_touches(self):
        p = fcc_cluster([(0, 0, 0), (1, 1, 0)])
        assert contact_graph(p).contact_count == 1

    def test_second_neighbor_does_not_touch(self):
        p = fcc_cluster([(0, 0, 0), (2, 0, 0)])
        assert contact_graph(p).contact_count == 0

    def test_kissing_shell(self):
        pts = [(0, 0, 0)] + fcc_neighbors()
        assert len(pts) == 13
        g = contact_graph(fcc_cluster(pts))
        # 12 hub contacts plus 24 rim contacts, counted by brute force
        brute = 0
        for a in range(13):
            for b in range(a + 1, 13):
                d = np.subtract(pts[a], pts[b])
                if d @ d == 2:
                    brute += 1
        assert g.contact_count == brute == 36
        assert sorted(g.degrees())[-1] == 12

    def test_parity_violation_is_malformed(self):
        with pytest.raises(MalformedInputError):
            fcc_cluster([(0, 0, 0), (1, 0, 0)])

    def test_duplicates_are_malformed(self):
        with pytest.raises(MalformedInputError):
            fcc_cluster([(0, 0, 0), (0, 0, 0)])

    def test_empty_is_malformed(self):
        with pytest.raises(MalformedInputError):
            fcc_cluster([])


class TestTwinBipyramids:
    def test_has_21_contacts_and_min_degree_3(self):
        p = twin_bipyramids()
        g = contact_graph(p)
        assert p.n == 9
        assert g.contact_count == 21
        assert min(g.degrees()) >= 3

    def test_no_accidental_overlap(self):
        assert validate_packing(twin_bipyramids()) == []
