import random
from fractions import Fraction

from django.test import SimpleTestCase

from kkm.complexes import manifold_boundary
from kkm.covers import cover_from_labeling
from kkm.fixtures import (
    HEPTAGON_LABELS,
    HEXAGON,
    TRIANGLE,
    UNIT_SQUARE,
    boundary_covers,
    disk_boundary,
    disk_labeling,
    doubled_simplex,
    mobius_band,
    oriented_sphere,
    ring_disk,
    sperner_simplex,
    tucker_labels,
    winding_labels,
)
from kkm.exceptions import DimensionMismatchError
from kkm.geometry import PointConfig, cov_v
from kkm.labelings import Labeling
from kkm.theorems import (
    HYPOTHESIS_VIOLATED,
    NO_CLAIM,
    VERIFIED,
    bloch_sperner_verify,
    classical_kkm_verify,
    deg_lower_bound_verify,
    ep_pair,
    generalized_kkm_verify,
    generalized_sperner_verify,
    kkm_verify,
    polytope_sperner_verify,
    tucker_bacon_verify,
)
from kkm.utils import ASSERTED, SATISFIED, VIOLATED

INSIDE = (Fraction(3, 10), Fraction(3, 10))
OUTSIDE = (Fraction(7, 10), Fraction(7, 10))


def statuses(report):
    return {item.name: item.status for item in report.hypotheses}


class EPPairTests(SimpleTestCase):
    def test_disk(self):
        M = ring_disk(6, 1)
        item, boundary = ep_pair(M.complex, disk_boundary(M))
        self.assertEqual(item.status, SATISFIED)
        self.assertTrue(boundary.is_cycle)

    def test_mobius_band(self):
        K = mobius_band()
        A = manifold_boundary(K).as_complex()
        item, boundary = ep_pair(K, A)
        self.assertEqual(item.status, VIOLATED)
        self.assertIsNone(boundary)
        item, _ = ep_pair(K, A, asserted=True)
        self.assertEqual(item.status, ASSERTED)

    def test_index_must_match_the_boundary(self):
        M = ring_disk(6, 1)
        A = disk_boundary(M)
        for asserted in (False, True):
            item, boundary = ep_pair(M.complex, A, 2, asserted)
            self.assertEqual(item.status, VIOLATED)
            self.assertEqual(item.evidence["required"], 2)
            self.assertIsNone(boundary)
        item, _ = ep_pair(M.complex, A, 0)
        self.assertEqual(item.status, VIOLATED)
        item, _ = ep_pair(M.complex, A, 0, asserted=True)
        self.assertEqual(item.status, ASSERTED)


class KKMTests(SimpleTestCase):
    def setUp(self):
        self.M = ring_disk(9, 2)
        self.rng = random.Random(4)

    def covers(self, k):
        L = disk_labeling(self.M, 9, winding_labels(9, k), 2, self.rng)
        return boundary_covers(self.M, L)

    def test_verified(self):
        for k in (-2, -1, 1, 3):
            with self.subTest(k=k):
                S, F, A = self.covers(k)
                report = kkm_verify(S, F, A)
                self.assertEqual(report.verdict, VERIFIED)
                simplex = report.witness["simplex"]
                self.assertEqual(F.membership(simplex), {0, 1, 2})
                self.assertGreaterEqual(report.counts["common"], 1)

    def test_zero_degree_says_nothing(self):
        S, F, A = self.covers(0)
        report = kkm_verify(S, F, A)
        self.assertEqual(report.verdict, NO_CLAIM)
        self.assertEqual(statuses(report)["degree-nonzero"], VIOLATED)

    def test_extension_failure(self):
        _, F, A = self.covers(1)
        S, _, _ = self.covers(-1)
        report = kkm_verify(S, F, A)
        self.assertEqual(report.verdict, HYPOTHESIS_VIOLATED)
        self.assertEqual(statuses(report)["extension"], VIOLATED)
        self.assertIsNone(report.witness)

    def test_four_sets_on_a_disk(self):
        M = ring_disk(8, 1)
        S, F, A = boundary_covers(M, Labeling((0, 1, 2, 3) * 2 + (0,), 3))
        for ep_asserted in (False, True):
            report = kkm_verify(S, F, A, ep_asserted, degree_asserted=True)
            self.assertEqual(report.verdict, HYPOTHESIS_VIOLATED)
            self.assertEqual(statuses(report)["ep-pair"], VIOLATED)
            self.assertIsNone(report.witness)

    def test_report_dict(self):
        S, F, A = self.covers(1)
        data = kkm_verify(S, F, A).as_dict()
        self.assertEqual(
            sorted(data), ["counts", "hypotheses", "theorem", "verdict", "witness"]
        )
        self.assertEqual(data["theorem"], "kkm")
        self.assertEqual(
            [h["name"] for h in data["hypotheses"]],
            ["extension", "boundary-intersection-empty", "ep-pair", "degree-nonzero"],
        )


class GeneralizedTests(SimpleTestCase):
    def setUp(self):
        self.M = ring_disk(7, 2)
        self.L = disk_labeling(self.M, 7, HEPTAGON_LABELS, 3, random.Random(9))

    def test_kkm_inside(self):
        S, F, A = boundary_covers(self.M, self.L)
        report = generalized_kkm_verify(S, F, A, UNIT_SQUARE, INSIDE)
        self.assertEqual(report.verdict, VERIFIED)
        self.assertIn(report.witness["J"], cov_v(PointConfig(UNIT_SQUARE, INSIDE)))
        self.assertTrue(F.common_simplices(report.witness["J"]))

    def test_kkm_outside(self):
        S, F, A = boundary_covers(self.M, self.L)
        report = generalized_kkm_verify(S, F, A, UNIT_SQUARE, OUTSIDE)
        self.assertEqual(report.verdict, NO_CLAIM)

    def test_kkm_point_on_image(self):
        S, F, A = boundary_covers(self.M, self.L)
        report = generalized_kkm_verify(S, F, A, UNIT_SQUARE, (1, Fraction(1, 2)))
        self.assertEqual(report.verdict, HYPOTHESIS_VIOLATED)
        self.assertEqual(statuses(report)["p-in-complement"], VIOLATED)

    def test_sperner_inside(self):
        Q = disk_boundary(self.M)
        report = generalized_sperner_verify(
            self.M.complex, Q, self.L, UNIT_SQUARE, INSIDE
        )
        self.assertEqual(report.verdict, VERIFIED)
        J = report.witness["J"]
        self.assertTrue(set(J) <= self.L.label_set(report.witness["simplex"]))

    def test_sperner_outside(self):
        Q = disk_boundary(self.M)
        report = generalized_sperner_verify(
            self.M.complex, Q, self.L, UNIT_SQUARE, OUTSIDE
        )
        self.assertEqual(report.verdict, NO_CLAIM)

    def test_point_count(self):
        Q = disk_boundary(self.M)
        with self.assertRaises(DimensionMismatchError):
            generalized_sperner_verify(self.M.complex, Q, self.L, TRIANGLE, INSIDE)

    def test_points_in_space_need_a_surface_boundary(self):
        S, F, A = boundary_covers(self.M, self.L)
        tetrahedron = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
        p = (Fraction(1, 5), Fraction(1, 5), Fraction(1, 5))
        report = generalized_kkm_verify(S, F, A, tetrahedron, p)
        self.assertEqual(report.verdict, HYPOTHESIS_VIOLATED)
        self.assertEqual(statuses(report)["ep-pair"], VIOLATED)
        report = generalized_kkm_verify(
            S, F, A, tetrahedron, p, degree_asserted=True
        )
        self.assertEqual(statuses(report)["h-nonzero"], ASSERTED)
        self.assertEqual(report.verdict, HYPOTHESIS_VIOLATED)
        self.assertIsNone(report.witness)


class DegreeBoundTests(SimpleTestCase):
    def test_sperner_triangle(self):
        M, context = sperner_simplex(2, 2)
        rng = random.Random(12)
        for _ in range(10):
            report = deg_lower_bound_verify(M, context.random_labeling(rng))
            self.assertEqual(report.verdict, VERIFIED)
            self.assertEqual(report.counts["degree"], 1)
            self.assertEqual(report.counts["signed"], 1)
            self.assertGreaterEqual(report.counts["fully_labeled"], 1)

    def test_disk_degree(self):
        M = ring_disk(18, 2)
        L = disk_labeling(M, 18, winding_labels(18, 3), 2, random.Random(2))
        report = deg_lower_bound_verify(M, L)
        self.assertEqual(report.verdict, VERIFIED)
        self.assertEqual(report.counts["bound"], 3)
        self.assertGreaterEqual(report.counts["fully_labeled"], 3)

    def test_label_range(self):
        M, _ = sperner_simplex(2, 1)
        report = deg_lower_bound_verify(M, Labeling((0,) * 7, 3))
        self.assertEqual(report.verdict, HYPOTHESIS_VIOLATED)
        self.assertEqual(statuses(report)["labels-0-to-n"], VIOLATED)


class PolytopeTests(SimpleTestCase):
    def test_hexagon(self):
        M = ring_disk(12, 2)
        L = disk_labeling(M, 12, winding_labels(12, 1, q=6), 5, random.Random(8))
        report = polytope_sperner_verify(M, L, HEXAGON)
        self.assertEqual(report.verdict, VERIFIED)
        self.assertEqual(report.counts["degree"], 1)
        self.assertEqual(report.counts["bound"], 4)
        self.assertGreaterEqual(report.counts["fully_labeled"], 4)
        for entry in report.witness["pebbles"]:
            self.assertEqual(entry["signed"], 1)

    def test_boundary_leaves_the_facets(self):
        M = ring_disk(12, 2)
        labels = winding_labels(12, 1, q=6)
        labels[0] = 3
        L = disk_labeling(M, 12, labels, 5, random.Random(8))
        report = polytope_sperner_verify(M, L, HEXAGON)
        self.assertEqual(report.verdict, HYPOTHESIS_VIOLATED)
        self.assertEqual(statuses(report)["boundary-in-facets"], VIOLATED)

    def test_closed_complex(self):
        L = Labeling((0, 1, 2, 3), 5)
        report = polytope_sperner_verify(oriented_sphere(3), L, HEXAGON)
        self.assertEqual(report.verdict, HYPOTHESIS_VIOLATED)
        self.assertEqual(statuses(report)["has-boundary"], VIOLATED)


class BlochTests(SimpleTestCase):
    def test_disk(self):
        M = ring_disk(16, 1)
        L = disk_labeling(M, 16, winding_labels(16, 1, q=4), 3, random.Random(6))
        report = bloch_sperner_verify(M.complex, L, UNIT_SQUARE)
        self.assertEqual(report.verdict, VERIFIED)
        self.assertGreaterEqual(report.counts["fully_labeled"], 2)
        for entry in report.witness["pebbles"]:
            self.assertEqual(entry["count"] % 2, 1)

    def test_doubled_simplex(self):
        K, L, P = doubled_simplex()
        report = bloch_sperner_verify(K, L, P)
        self.assertEqual(report.verdict, NO_CLAIM)
        self.assertEqual(statuses(report)["dg2-odd"], VIOLATED)

    def test_not_convex(self):
        M = ring_disk(16, 1)
        L = disk_labeling(M, 16, winding_labels(16, 1, q=4), 3, random.Random(6))
        square = list(UNIT_SQUARE)
        square[2] = (Fraction(1, 4), Fraction(1, 4))
        report = bloch_sperner_verify(M.complex, L, square)
        self.assertEqual(report.verdict, HYPOTHESIS_VIOLATED)


class TuckerTests(SimpleTestCase):
    def test_verified(self):
        M = ring_disk(8, 2)
        L = disk_labeling(M, 8, tucker_labels(8), 3, random.Random(10))
        S, F, A = boundary_covers(M, L)
        report = tucker_bacon_verify(S, F, A)
        self.assertEqual(report.verdict, VERIFIED)
        k = report.witness["index"]
        self.assertTrue(F.common_simplices((2 * k - 2, 2 * k - 1)))

    def test_antipodal_boundary(self):
        M = ring_disk(8, 2)
        labels = tucker_labels(8)
        labels[1] = 1
        L = disk_labeling(M, 8, labels, 3, random.Random(10))
        S, F, A = boundary_covers(M, L)
        report = tucker_bacon_verify(S, F, A)
        self.assertEqual(report.verdict, HYPOTHESIS_VIOLATED)
        self.assertEqual(statuses(report)["antipodal-disjoint"], VIOLATED)

    def test_odd_size(self):
        M = ring_disk(9, 2)
        L = disk_labeling(M, 9, winding_labels(9, 1), 2, random.Random(1))
        S, F, A = boundary_covers(M, L)
        with self.assertRaises(ValueError):
            tucker_bacon_verify(S, F, A)


class ClassicalKKMTests(SimpleTestCase):
    def test_sperner_cover(self):
        M, context = sperner_simplex(2, 2)
        F = cover_from_labeling(M.complex, context.random_labeling(random.Random(0)))
        report = classical_kkm_verify(F, context)
        self.assertEqual(report.verdict, VERIFIED)
        self.assertEqual(F.membership(report.witness["simplex"]), {0, 1, 2})

    def test_not_a_kkm_cover(self):
        M, context = sperner_simplex(2, 1)
        F = cover_from_labeling(M.complex, Labeling((0,) * 7, 2))
        report = classical_kkm_verify(F, context)
        self.assertEqual(report.verdict, HYPOTHESIS_VIOLATED)
        self.assertEqual(statuses(report)["kkm-covering"], VIOLATED)
