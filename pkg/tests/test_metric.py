import pickle
from unittest import TestCase

import numpy as np
from hypothesis import given, settings, strategies as st

from depart.errors import UnsupportedOperationError, ValidationError
from depart.metric import (EuclideanSpace, ExplicitSpace, LineSpace, MetricViolation, Point, SpaceKind, dist,
                           distance_matrix, interpolate, is_collinear, metric_closure, validate_metric)


class TestPoint(TestCase):
    def test_normalized_coordinates(self):
        self.assertEqual(Point(SpaceKind.EUCLIDEAN, [1, 2]).coords, (1.0, 2.0))
        self.assertEqual(Point(SpaceKind.LINE, 3).coords, 3.0)
        self.assertEqual(Point(SpaceKind.LINE, [3]).coords, 3.0)
        self.assertEqual(Point(SpaceKind.EXPLICIT, [2]).coords, 2)

        with self.assertRaises(ValidationError):
            Point(SpaceKind.EXPLICIT, 1.5)
        with self.assertRaises(ValueError):
            Point('sphere', 1)

    def test_non_finite_coordinates(self):
        for kind, coords in (
                (SpaceKind.LINE, float('nan')),
                (SpaceKind.LINE, [float('inf')]),
                (SpaceKind.EUCLIDEAN, (0, float('-inf'))),
                (SpaceKind.EXPLICIT, float('nan')),
        ):
            with self.assertRaises(ValidationError):
                Point(kind, coords)
        with self.assertRaises(ValidationError):
            ExplicitSpace([[0, float('nan')], [float('nan'), 0]])

    def test_immutable_and_hashable(self):
        p = Point(SpaceKind.EUCLIDEAN, (1, 2))
        with self.assertRaises(AttributeError):
            p.coords = (0, 0)
        self.assertEqual(len({p, Point(SpaceKind.EUCLIDEAN, (1.0, 2.0))}), 1)
        self.assertNotEqual(Point(SpaceKind.LINE, 1), Point(SpaceKind.EXPLICIT, 1))

    def test_pickle(self):
        p = Point(SpaceKind.EUCLIDEAN, (0.1, 0.2))
        self.assertEqual(pickle.loads(pickle.dumps(p)), p)

    def test_as_list(self):
        self.assertListEqual(Point(SpaceKind.EUCLIDEAN, (1, 2)).as_list(), [1.0, 2.0])
        self.assertListEqual(Point(SpaceKind.LINE, 2.5).as_list(), [2.5])
        self.assertListEqual(Point(SpaceKind.EXPLICIT, 4).as_list(), [4])

    def test_repr_str(self):
        self.assertEqual(str(Point(SpaceKind.EUCLIDEAN, (1, 2.5))), '(1, 2.5)')
        self.assertEqual(repr(Point(SpaceKind.LINE, 2)), '<Point 2>')
        self.assertEqual(str(Point(SpaceKind.EXPLICIT, 3)), '#3')


class TestDist(TestCase):
    def test_euclidean(self):
        space = EuclideanSpace(2)
        self.assertEqual(dist(space, space.point((0, 0)), space.point((3, 4))), 5)

    def test_line(self):
        space = LineSpace()
        self.assertEqual(dist(space, space.point(0), space.point(2)), 2)

    def test_explicit(self):
        space = ExplicitSpace([[0, 3, 7], [3, 0, 4], [7, 4, 0]])
        self.assertEqual(dist(space, space.point(0), space.point(2)), 7)

    def test_foreign_points(self):
        space = EuclideanSpace(2)
        with self.assertRaises(ValidationError):
            space.point((1, 2, 3))
        with self.assertRaises(ValidationError):
            dist(space, space.point((0, 0)), Point(SpaceKind.EUCLIDEAN, (1, 2, 3)))
        with self.assertRaises(ValidationError):
            ExplicitSpace([[0, 1], [1, 0]]).point(2)
        with self.assertRaises(TypeError):
            dist(space, (0, 0), (1, 1))

    def test_distance_matrix(self):
        space = LineSpace()
        points = space.points([0, 1, 3])
        np.testing.assert_array_equal(distance_matrix(space, points), [[0, 1, 3], [1, 0, 2], [3, 2, 0]])
        np.testing.assert_array_equal(distance_matrix(space, points, space.points([10])), [[10], [9], [7]])
        self.assertEqual(distance_matrix(space, []).shape, (0, 0))

        space = EuclideanSpace(2)
        d = distance_matrix(space, space.points([(0, 0), (3, 4)]))
        np.testing.assert_allclose(d, [[0, 5], [5, 0]])


class TestInterpolate(TestCase):
    def test_line(self):
        space = LineSpace()
        self.assertEqual(interpolate(space, space.point(0), space.point(4), 0.25), space.point(1))

    def test_euclidean(self):
        space = EuclideanSpace(2)
        p, q = space.point((0, 0)), space.point((2, 0))
        self.assertEqual(interpolate(space, p, q, 0.5), space.point((1, 0)))
        self.assertEqual(interpolate(space, p, q, 0), p)
        self.assertEqual(interpolate(space, p, q, 1), q)

    def test_degenerate_segment(self):
        space = EuclideanSpace(3)
        p = space.point((1, 2, 3))
        self.assertEqual(interpolate(space, p, p, 0.7), p)

    def test_distance_along_segment(self):
        space = EuclideanSpace(2)
        p, q = space.point((1, 1)), space.point((4, 5))
        r = interpolate(space, p, q, 0.3)
        self.assertAlmostEqual(dist(space, p, r), 0.3 * 5, delta=1e-9)

    def test_errors(self):
        space = LineSpace()
        with self.assertRaises(ValueError):
            interpolate(space, space.point(0), space.point(1), 1.5)

        explicit = ExplicitSpace([[0, 1], [1, 0]])
        self.assertFalse(explicit.is_geodesic)
        with self.assertRaises(UnsupportedOperationError):
            interpolate(explicit, explicit.point(0), explicit.point(1), 0.5)


class TestValidateMetric(TestCase):
    def test_ok(self):
        self.assertTrue(validate_metric(ExplicitSpace([[0, 1], [1, 0]])).ok)
        self.assertTrue(validate_metric(EuclideanSpace(2)).ok)
        self.assertTrue(validate_metric(LineSpace()).ok)

    def test_symmetry(self):
        report = validate_metric(ExplicitSpace([[0, 5], [1, 0]]))
        self.assertFalse(report.ok)
        self.assertEqual(report.of_kind(MetricViolation.SYMMETRY), [MetricViolation(MetricViolation.SYMMETRY, (0, 1))])

    def test_triangle(self):
        report = validate_metric(ExplicitSpace([[0, 1, 10], [1, 0, 1], [10, 1, 0]]))
        triangles = [v.indices for v in report.of_kind(MetricViolation.TRIANGLE)]
        self.assertIn((0, 1, 2), triangles)
        self.assertEqual(report.of_kind(MetricViolation.SYMMETRY), [])

    def test_diagonal_identity_negative(self):
        report = validate_metric(ExplicitSpace([[1, 0, 2], [0, 0, -1], [2, -1, 0]]))
        self.assertEqual([v.indices for v in report.of_kind(MetricViolation.DIAGONAL)], [(0, 0)])
        self.assertIn((0, 1), [v.indices for v in report.of_kind(MetricViolation.IDENTITY)])
        self.assertIn((1, 2), [v.indices for v in report.of_kind(MetricViolation.NEGATIVE)])

    def test_shape(self):
        with self.assertRaises(ValidationError):
            ExplicitSpace([[0, 1, 2], [1, 0, 3]])
        with self.assertRaises(ValidationError):
            ExplicitSpace([])

    def test_repr_str(self):
        self.assertEqual(str(validate_metric(LineSpace())), 'ok')
        self.assertEqual(repr(ExplicitSpace([[0, 1], [1, 0]])), '<ExplicitSpace size=2>')


class TestMetricClosure(TestCase):
    def test_shortest_paths(self):
        weights = [
            [0, 1, 0],
            [1, 0, 2],
            [0, 2, 0],
        ]
        space = metric_closure(weights)
        np.testing.assert_array_equal(space.matrix, [[0, 1, 3], [1, 0, 2], [3, 2, 0]])
        self.assertTrue(validate_metric(space).ok)

    def test_shortcut(self):
        space = metric_closure([[0, 1, 10], [1, 0, 1], [10, 1, 0]])
        self.assertEqual(space.matrix[0, 2], 2)

    def test_disconnected(self):
        with self.assertRaises(ValidationError):
            metric_closure([[0, 0], [0, 0]])

    @settings(max_examples=50, deadline=None)
    @given(st.integers(2, 7).flatmap(lambda n: st.lists(st.floats(1, 10), min_size=n * n, max_size=n * n)))
    def test_closure_is_a_metric(self, weights):
        size = int(round(len(weights) ** 0.5))
        matrix = np.array(weights).reshape(size, size)
        matrix = np.maximum(matrix, matrix.T)
        np.fill_diagonal(matrix, 0)
        self.assertTrue(validate_metric(metric_closure(matrix)).ok)

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.tuples(st.floats(-10, 10), st.floats(-10, 10)), min_size=1, max_size=8, unique=True))
    def test_euclidean_distances_are_a_metric(self, coords):
        space = EuclideanSpace(2)
        report = validate_metric(ExplicitSpace(space.distance_matrix(space.points(coords))))
        self.assertFalse(report.of_kind(MetricViolation.TRIANGLE))
        self.assertFalse(report.of_kind(MetricViolation.SYMMETRY))


class TestIsCollinear(TestCase):
    def test_line(self):
        space = LineSpace()
        self.assertTrue(is_collinear(space, space.points([0, 1, 5, 6])))
        self.assertFalse(is_collinear(space, space.points([0, 5, 1])))

    def test_plane(self):
        space = EuclideanSpace(2)
        self.assertTrue(is_collinear(space, space.points([(0, 0), (1, 1), (3, 3)])))
        self.assertFalse(is_collinear(space, space.points([(0, 0), (1, 0), (1, 1)])))
        self.assertTrue(is_collinear(space, space.points([(0, 0), (1, 0)])))
