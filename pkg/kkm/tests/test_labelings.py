import random

from django.test import SimpleTestCase

from kkm.complexes import build_complex, orient
from kkm.exceptions import (
    DimensionMismatchError,
    HypothesisError,
    UnsupportedClassError,
)
from kkm.fixtures import (
    UNIT_SQUARE,
    cycle,
    disk_labeling,
    doubled_simplex,
    heptagon,
    oriented_sphere,
    ring_disk,
    sphere,
    sperner_simplex,
    sperner_sphere,
    winding_labels,
)
from kkm.labelings import (
    Labeling,
    SpernerContext,
    boundary_degree,
    construct_winding_labeling,
    degree_labeling,
    dg2,
    f_LP_image,
    fully_labeled,
    hopf_hypotheses,
    max_label_check,
    signed_preimage_count,
    validate_sperner,
)


class LabelingTests(SimpleTestCase):
    def test_validation(self):
        with self.assertRaises(ValueError):
            Labeling((0, 3), 2)
        with self.assertRaises(ValueError):
            Labeling((0, True), 2)
        with self.assertRaises(ValueError):
            Labeling((0,), -1)

    def test_label_queries(self):
        L = Labeling((0, 1, 1, 2), 2)
        self.assertEqual(L.label_set((0, 1, 2)), {0, 1})
        self.assertEqual(L.vertices_labeled(1), [1, 2])

    def test_attach(self):
        with self.assertRaises(DimensionMismatchError):
            Labeling((0, 1), 2).attach(sphere(2))


class SpernerTests(SimpleTestCase):
    def test_canonical_labeling_is_valid(self):
        for depth in (1, 2, 3):
            _, context = sperner_simplex(2, depth)
            with self.subTest(depth=depth):
                self.assertTrue(validate_sperner(context, context.canonical_labeling()))

    def test_random_labelings_are_valid(self):
        _, context = sperner_simplex(2, 2)
        rng = random.Random(7)
        for _ in range(20):
            self.assertTrue(validate_sperner(context, context.random_labeling(rng)))

    def test_violations(self):
        _, context = sperner_simplex(2, 1)
        labels = list(context.canonical_labeling().labels)
        labels[0] = 1
        # vertex 3 is the barycenter of the edge (0, 1)
        labels[3] = 2
        verdict = validate_sperner(context, Labeling(labels, 2))
        self.assertFalse(verdict)
        rules = sorted((v["rule"], v["vertex"]) for v in verdict.violations)
        self.assertEqual(rules, [("carrier", 0), ("carrier", 3), ("corner", 0)])

    def test_context_needs_corners(self):
        with self.assertRaises(ValueError):
            SpernerContext(1, ((0,), (0, 1)))

    def test_max_label_check(self):
        K = sphere(2)
        self.assertTrue(max_label_check(K, Labeling((0, 1, 2), 2)))
        self.assertFalse(max_label_check(K, Labeling((0, 1, 1), 1)))

    def test_fully_labeled(self):
        M, context = sperner_simplex(2, 1)
        matches = fully_labeled(M.complex, context.canonical_labeling(), (0, 1, 2))
        self.assertEqual(len(matches), 1)
        self.assertEqual(matches.exact, matches.containing)


class DegreeTests(SimpleTestCase):
    def test_winding_labelings(self):
        for k in range(-3, 4):
            with self.subTest(k=k):
                K, L = construct_winding_labeling(k)
                report = degree_labeling(K, L)
                self.assertEqual(report.value, k)
                self.assertEqual(report.target_used, (1, 2))
                self.assertTrue(all(v == k for _, v in report.cross_checked))

    def test_every_target_agrees(self):
        K, L = construct_winding_labeling(2)
        for target in ((0, 1), (0, 2), (1, 2)):
            with self.subTest(target=target):
                self.assertEqual(degree_labeling(K, L, target).value, 2)

    def test_reversed_orientation(self):
        K, L = construct_winding_labeling(1)
        self.assertEqual(degree_labeling(K.negated(), L).value, -1)

    def test_sperner_spheres(self):
        for m in (2, 3):
            for depth in (1, 2, 3):
                with self.subTest(m=m, depth=depth):
                    K, context = sperner_sphere(m, depth)
                    L = context.canonical_labeling()
                    self.assertEqual(degree_labeling(K, L).value, 1)

    def test_unsubdivided_sphere(self):
        K = oriented_sphere(3)
        self.assertEqual(degree_labeling(K, Labeling((0, 1, 2, 3), 3)).value, 1)

    def test_three_dimensional(self):
        with self.assertRaises(UnsupportedClassError):
            degree_labeling(oriented_sphere(4), Labeling((0,) * 5, 4))

    def test_open_complex(self):
        M = ring_disk(6, 1)
        with self.assertRaises(HypothesisError) as ctx:
            degree_labeling(M, Labeling((0,) * 7, 3))
        self.assertEqual(ctx.exception.items[0].name, "closed")
        self.assertFalse(ctx.exception.items[0].holds)

    def test_wrong_label_range(self):
        with self.assertRaises(UnsupportedClassError):
            degree_labeling(cycle(4), Labeling((0, 1, 0, 1), 1))

    def test_bad_target(self):
        K, L = construct_winding_labeling(1)
        with self.assertRaises(ValueError):
            degree_labeling(K, L, (0, 3))

    def test_boundary_degree_counts_fully_labeled(self):
        M, context = sperner_simplex(2, 2)
        rng = random.Random(3)
        for _ in range(10):
            L = context.random_labeling(rng)
            degree = boundary_degree(M, L).value
            self.assertEqual(degree, 1)
            self.assertEqual(signed_preimage_count(M, L, (0, 1, 2)), degree)

    def test_boundary_degree_of_a_disk(self):
        M = ring_disk(12, 2)
        rng = random.Random(11)
        for k in (-2, -1, 0, 1, 2):
            with self.subTest(k=k):
                L = disk_labeling(M, 12, winding_labels(12, k), 2, rng)
                self.assertEqual(boundary_degree(M, L).value, k)

    def test_heptagon_has_no_degree(self):
        K, L = heptagon()
        with self.assertRaises(UnsupportedClassError):
            degree_labeling(K, L)

    def test_disconnected_complex(self):
        K = orient(build_complex([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
        L = Labeling((0, 1, 2, 0, 1, 2), 2)
        with self.assertRaises(HypothesisError) as ctx:
            degree_labeling(K, L)
        self.assertEqual(ctx.exception.items[-1].name, "connected")
        self.assertEqual(ctx.exception.items[-1].evidence, {"components": 2})
        report = degree_labeling(K, L, per_component=True)
        self.assertEqual(report.components, (1, 1))
        self.assertEqual(report.value, 2)


class PolytopeLabelingTests(SimpleTestCase):
    def test_image(self):
        L = Labeling((0, 2, 3), 3)
        self.assertEqual(f_LP_image((0, 2), L, UNIT_SQUARE), [(0, 0), (0, 1)])
        with self.assertRaises(ValueError):
            f_LP_image((0,), Labeling((3,), 3), UNIT_SQUARE[:3])

    def test_dg2_of_a_disk(self):
        M = ring_disk(16, 1)
        rng = random.Random(5)
        for k, parity in ((1, 1), (-1, 1), (2, 0), (0, 0)):
            with self.subTest(k=k):
                L = disk_labeling(M, 16, winding_labels(16, k, q=4), 3, rng)
                self.assertEqual(dg2(M.complex, L, UNIT_SQUARE), parity)

    def test_dg2_of_a_closed_complex(self):
        K, L, P = doubled_simplex()
        self.assertEqual(dg2(K, L, P), 0)

    def test_dg2_needs_boundary_in_facets(self):
        M = ring_disk(4, 1)
        L = Labeling((0, 2, 0, 2, 1), 3)
        with self.assertRaises(HypothesisError) as ctx:
            dg2(M.complex, L, UNIT_SQUARE)
        names = {item.name: item.holds for item in ctx.exception.items}
        self.assertEqual(names, {"convex-position": True, "boundary-in-facets": False})


class HopfTests(SimpleTestCase):
    def test_items(self):
        K = sphere(4)
        L = Labeling((0, 1, 2, 0, 1), 3)
        items = hopf_hypotheses(K, L)
        self.assertEqual(
            [item.name for item in items],
            [
                "closed-3-pseudomanifold",
                "no-four-label-simplex",
                "empty-total-intersection",
            ],
        )
        self.assertTrue(all(item.holds for item in items))

    def test_four_labels(self):
        items = hopf_hypotheses(sphere(4), Labeling((0, 1, 2, 3, 0), 3))
        self.assertEqual([item.holds for item in items], [True, False, False])

    def test_wrong_dimension(self):
        items = hopf_hypotheses(sphere(3), Labeling((0, 1, 2, 3), 3))
        self.assertFalse(items[0].holds)
