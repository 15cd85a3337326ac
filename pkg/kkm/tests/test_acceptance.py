"""
Seeded end-to-end runs of every verifier family at the instance counts the
project promises. A single falsified instance fails the suite.
"""
import itertools
import random
from fractions import Fraction

from django.test import SimpleTestCase

from kkm.covers import (
    cover_degree,
    cover_from_labeling,
    h_class,
    image_polyhedron,
    p_in_complement,
)
from kkm.exceptions import OnImageError
from kkm.fixtures import (
    HEPTAGON_LABELS,
    UNIT_SQUARE,
    boundary_covers,
    cycle,
    disk_labeling,
    heptagon,
    ring_disk,
    sperner_sphere,
    winding_labels,
)
from kkm.fuzz import chamber_point, run_fuzz, run_instance
from kkm.geometry import PointConfig, cov_v, point_in_hull
from kkm.labelings import Labeling, construct_winding_labeling, degree_labeling
from kkm.theorems import FALSIFIED, NO_CLAIM, VERIFIED
from kkm.utils import SATISFIED

SEED = 20240611


def instances(family, count):
    for index in range(count):
        yield run_instance(family, SEED, index)


class SpernerAcceptanceTests(SimpleTestCase):
    def test_sphere_degrees(self):
        for m in (2, 3):
            for depth in (1, 2, 3):
                with self.subTest(m=m, depth=depth):
                    K, context = sperner_sphere(m, depth)
                    report = degree_labeling(K, context.canonical_labeling())
                    self.assertEqual(report.value, 1)
                    self.assertTrue(all(v == 1 for _, v in report.cross_checked))

    def test_sperner_lemma(self):
        for report in instances("sperner", 100):
            self.assertEqual(report.verdict, VERIFIED)
            self.assertEqual(report.counts["fully_labeled"] % 2, 1)
            self.assertEqual(report.counts["signed"], 1)

    def test_degree_lower_bound(self):
        for report in instances("degbound", 500):
            self.assertEqual(report.verdict, VERIFIED)
            counts = report.counts
            self.assertGreaterEqual(counts["fully_labeled"], abs(counts["degree"]))
            self.assertEqual(counts["signed"], counts["degree"])


class HeptagonAcceptanceTests(SimpleTestCase):
    def setUp(self):
        K, L = heptagon()
        self.K = K
        self.cover = cover_from_labeling(K.complex, L)
        self.rng = random.Random(SEED)

    def h(self, p):
        return h_class(self.cover, self.K, UNIT_SQUARE, p)

    def test_lower_chamber(self):
        for _ in range(20):
            self.assertEqual(self.h(chamber_point(self.rng)), 1)

    def test_other_chambers(self):
        for _ in range(20):
            x, y = chamber_point(self.rng)
            self.assertEqual(self.h((1 - x, 1 - y)), 0)
            self.assertEqual(self.h((-x, y)), 0)
            self.assertEqual(self.h((x + 1, y + 1)), 0)

    def test_points_on_the_image(self):
        for i in range(1, 50):
            t = Fraction(i, 50)
            for p in ((t, 0), (1, t), (0, t), (t, 1 - t)):
                with self.subTest(p=p):
                    with self.assertRaises(OnImageError):
                        self.h(p)

    def test_generalized_theorems_in_the_chamber(self):
        for family in ("gkkm", "gsperner"):
            for report in instances(family, 20):
                self.assertEqual(report.verdict, VERIFIED)


class PolytopeAcceptanceTests(SimpleTestCase):
    def test_hexagon(self):
        for report in instances("polytope", 100):
            self.assertEqual(report.verdict, VERIFIED)
            self.assertGreaterEqual(report.counts["pebbles"], 4)
            self.assertGreaterEqual(report.counts["fully_labeled"], 4)

    def test_bloch_corpus(self):
        verdicts = set()
        for report in instances("bloch", 50):
            claim = report.hypotheses[-1]
            self.assertEqual(claim.name, "dg2-odd")
            if claim.holds:
                self.assertEqual(report.verdict, VERIFIED)
                self.assertGreaterEqual(report.counts["fully_labeled"], 2)
            else:
                self.assertEqual(report.verdict, NO_CLAIM)
            verdicts.add(report.verdict)
        self.assertEqual(verdicts, {VERIFIED, NO_CLAIM})


def random_config(rng):
    d = rng.randint(1, 3)
    n = rng.randint(1, 7)
    V = [tuple(rng.randint(0, 3) for _ in range(d)) for _ in range(n)]
    p = tuple(Fraction(rng.randint(0, 12), 4) for _ in range(d))
    return V, p


def brute_force_cov(V, p):
    return [
        J
        for k in range(1, len(V) + 1)
        for J in itertools.combinations(range(len(V)), k)
        if point_in_hull([V[j] for j in J], p)
    ]


class CovAcceptanceTests(SimpleTestCase):
    def test_against_brute_force(self):
        rng = random.Random(SEED)
        for _ in range(200):
            V, p = random_config(rng)
            family = cov_v(PointConfig(V, p))
            expected = brute_force_cov(V, p)
            minimal = [
                J for J in expected if not any(set(K) < set(J) for K in expected)
            ]
            self.assertEqual(sorted(family), sorted(minimal), (V, p))
            self.assertEqual(family.up_closure(), expected)

    def test_complement_matches_the_image(self):
        rng = random.Random(SEED)
        cases = []
        K, L = heptagon()
        heptagon_cover = cover_from_labeling(K.complex, L)
        for x, y in itertools.product(range(-1, 6), repeat=2):
            p = (Fraction(x, 4), Fraction(y, 4))
            cases.append((heptagon_cover, UNIT_SQUARE, p))
        M = ring_disk(7, 2)
        S, F, _ = boundary_covers(M, disk_labeling(M, 7, HEPTAGON_LABELS, 3, rng))
        cases.extend((c, UNIT_SQUARE, (Fraction(3, 10),) * 2) for c in (S, F))
        for _ in range(100):
            n, m = rng.randint(3, 9), rng.randint(1, 4)
            labels = Labeling(tuple(rng.randint(0, m) for _ in range(n)), m)
            V = [(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(m + 1)]
            p = (Fraction(rng.randint(0, 12), 4), Fraction(rng.randint(0, 12), 4))
            cases.append((cover_from_labeling(cycle(n).complex, labels), V, p))
        for c, V, p in cases:
            on_image = image_polyhedron(c, V).contains(p)
            self.assertEqual(bool(p_in_complement(c, V, p)), not on_image, (V, p))


class CoverAcceptanceTests(SimpleTestCase):
    def test_cover_degree_matches_labeling_degree(self):
        fixtures = [construct_winding_labeling(k) for k in range(-5, 6)]
        fixtures.append((cycle(3), Labeling((0, 1, 2), 2)))
        for k in (-2, 1, 3):
            fixtures.append((cycle(12), Labeling(tuple(winding_labels(12, k)), 2)))
        for K, L in fixtures:
            with self.subTest(labels=L.labels):
                c = cover_from_labeling(K.complex, L)
                self.assertEqual(
                    cover_degree(c, K).value, degree_labeling(K, L).value
                )

    def test_kkm(self):
        for report in instances("kkm", 100):
            self.assertEqual(report.verdict, VERIFIED)

    def test_tucker(self):
        for report in instances("tucker", 100):
            self.assertEqual(report.verdict, VERIFIED)
            statuses = {item.name: item.status for item in report.hypotheses}
            self.assertEqual(statuses["h-nonzero"], SATISFIED)
            self.assertEqual(statuses["antipodal-disjoint"], SATISFIED)


class FuzzTests(SimpleTestCase):
    def test_workers_do_not_change_results(self):
        families = ["kkm", "tucker", "bloch"]
        serial = run_fuzz(families, count=5, seed=SEED, workers=1)
        threaded = run_fuzz(families, count=5, seed=SEED, workers=3)
        self.assertEqual(serial.as_dict(), threaded.as_dict())
        self.assertEqual(serial.falsified, [])
        self.assertNotIn(FALSIFIED, serial.verdicts["kkm"])

    def test_unknown_family(self):
        with self.assertRaises(ValueError):
            run_fuzz(["sperner", "nope"], count=1)
