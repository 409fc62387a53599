import numpy as np
import pytest

from contactlab.bounds import exact_formula, upper_bound
from contactlab.constructors import fcc_bipyramid, hex_spiral
from contactlab.digital import quasi_cube, quasi_square, to_digital_packing
from contactlab.geometry import InvalidPackingError, Packing, contact_graph
from contactlab.separability import (Hyperplane, is_digital,
                                     sample_directions, total_separability)

from conftest import random_connected_polyomino, random_rotation, \
    regular_tetrahedron


def check_witnesses(packing, report):
    """Every witness plane must miss every ball interior and split its pair."""
    eps = 1e-9 * packing.radius
    for (i, j), plane in report.witnesses.items():
        sd = plane.signed_distance(packing.centers)
        assert np.all(np.abs(sd) >= packing.radius - eps), (i, j)
        assert sd[i] * sd[j] < 0, (i, j)


class TestSeparable:
    def test_2x2_digital_square(self):
        p = to_digital_packing(quasi_square(4))
        rep = total_separability(p)
        assert rep.status == "Separable"
        check_witnesses(p, rep)

    def test_far_pair(self):
        p = Packing(dim=3, radius=1.0, centers=[[0, 0, 0], [10, 0, 0]])
        rep = total_separability(p)
        assert rep.status == "Separable"
        check_witnesses(p, rep)

    @pytest.mark.parametrize("n", [1, 2, 5, 9, 12])
    def test_digital_squares(self, n):
        p = to_digital_packing(quasi_square(n))
        assert total_separability(p).status == "Separable"

    @pytest.mark.parametrize("n", [1, 4, 8, 11, 27])
    def test_digital_cubes(self, n):
        p = to_digital_packing(quasi_cube(n))
        assert total_separability(p).status == "Separable"

    def test_random_digital_packings(self, rng):
        for dim in (2, 3):
            for _ in range(15):
                poly = random_connected_polyomino(rng, int(rng.integers(2, 20)), dim)
                p = to_digital_packing(poly)
                rep = total_separability(p)
                assert rep.status == "Separable"
                check_witnesses(p, rep)

    def test_separable_respects_planar_bound(self, rng):
        for _ in range(10):
            poly = random_connected_polyomino(rng, int(rng.integers(2, 40)), 2)
            p = to_digital_packing(poly)
            if total_separability(p).status == "Separable":
                contacts = contact_graph(p).contact_count
                assert contacts <= exact_formula("CSEP2", p.n).value_int

    def test_separable_respects_spatial_bound(self, rng):
        for _ in range(10):
            poly = random_connected_polyomino(rng, int(rng.integers(2, 30)), 3)
            p = to_digital_packing(poly)
            if total_separability(p).status == "Separable":
                contacts = contact_graph(p).contact_count
                assert contacts < upper_bound("CSEP3", p.n).value_real


class TestUnknown:
    def test_expanded_tetrahedron_is_honest(self):
        # no tangencies, so no forced plane; every bisector is blocked and
        # no sampled cut fits between the balls: the verdict stays Unknown
        v = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]],
                     float)
        v *= 2.04 / np.linalg.norm(v[0] - v[1])
        rep = total_separability(Packing(dim=3, radius=1.0, centers=v))
        assert rep.status == "Unknown"
        assert len(rep.unresolved) == 6
        assert rep.to_json()["unresolved"] == [list(p) for p in rep.unresolved]

    def test_translated_digital_without_exact_flag_separable(self):
        base = to_digital_packing(quasi_square(6))
        moved = Packing(dim=2, radius=0.5,
                        centers=base.centers + np.array([0.25, -1.75]))
        assert total_separability(moved).status == "Separable"


class TestNotSeparable:
    def test_regular_tetrahedron(self):
        p = regular_tetrahedron()
        rep = total_separability(p)
        assert rep.status == "NotSeparable"
        (i, j), k, plane = rep.violation
        # re-derive the forced plane for the certificate pair
        u = p.centers[j] - p.centers[i]
        u = u / np.linalg.norm(u)
        offset = float(u @ (p.centers[i] + p.centers[j]) / 2.0)
        assert np.allclose(np.abs(plane.normal), np.abs(u))
        assert plane.offset == pytest.approx(offset if plane.normal @ u > 0
                                             else -offset)
        # the blocking ball really does cut the plane's slab
        assert abs(plane.signed_distance(p.centers[[k]])[0]) < p.radius - 1e-9

    def test_fcc_bipyramid(self):
        assert total_separability(fcc_bipyramid(2)).status == "NotSeparable"

    def test_hex_spiral(self):
        assert total_separability(hex_spiral(7)).status == "NotSeparable"


class TestInvariance:
    def test_rotated_digital_square_stays_separable(self, rng):
        p = to_digital_packing(quasi_square(4))
        for _ in range(5):
            rot = random_rotation(2, rng)
            moved = Packing(dim=2, radius=0.5,
                            centers=p.centers @ rot.T + rng.uniform(-3, 3, 2))
            rep = total_separability(moved)
            assert rep.status == "Separable"
            check_witnesses(moved, rep)

    def test_rotated_tetrahedron_stays_not_separable(self, rng):
        p = regular_tetrahedron()
        for _ in range(5):
            rot = random_rotation(3, rng)
            moved = Packing(dim=3, radius=1.0,
                            centers=p.centers @ rot.T + rng.uniform(-3, 3, 3))
            assert total_separability(moved).status == "NotSeparable"


class TestErrors:
    def test_invalid_packing_rejected(self):
        p = Packing(dim=2, radius=1.0, centers=[[0, 0], [1, 0]])
        with pytest.raises(InvalidPackingError):
            total_separability(p)

    def test_bad_normal_rejected(self):
        with pytest.raises(ValueError):
            Hyperplane(np.array([1.0, 1.0]), 0.0)


class TestReportJson:
    def test_separable_report(self):
        p = to_digital_packing(quasi_square(4))
        doc = total_separability(p).to_json()
        assert doc["status"] == "Separable"
        assert len(doc["witnesses"]) == 6

    def test_not_separable_report(self):
        doc = total_separability(regular_tetrahedron()).to_json()
        assert doc["status"] == "NotSeparable"
        assert set(doc["violation"]) == {"pair", "blocking", "plane"}


class TestIsDigital:
    def test_constructed_digital(self):
        p = to_digital_packing(quasi_square(9))
        ok, scale, offset = is_digital(p)
        assert ok
        assert scale == pytest.approx(1.0)
        assert offset.shape == (2,)

    def test_hex_spiral_is_not(self):
        ok, scale, offset = is_digital(hex_spiral(7))
        assert not ok
        assert scale is None and offset is None

    def test_single_ball_is_vacuously_digital(self):
        p = Packing(dim=3, radius=0.7, centers=[[0.1, 0.2, 0.3]])
        assert is_digital(p)[0]

    def test_reconstruction_without_exact_flag(self):
        base = to_digital_packing(quasi_square(6))
        p = Packing(dim=2, radius=0.5,
                    centers=base.centers + np.array([0.25, -1.75]))
        assert is_digital(p)[0]


class TestDirections:
    def test_deterministic(self):
        a = sample_directions(3, 240)
        b = sample_directions(3, 240)
        assert np.array_equal(a, b)
        assert np.allclose(np.linalg.norm(a, axis=1), 1.0)

    def test_high_dim(self):
        a = sample_directions(5, 64)
        assert a.shape == (64, 5)
        assert np.allclose(np.linalg.norm(a, axis=1), 1.0)
