from unittest import TestCase
from unittest.mock import patch

import numpy as np

from depart.errors import GenerationError
from depart.generators import gen_line_voronoi, gen_local_adversarial, gen_random, gen_random_online, gen_simplex
from depart.instance import InstanceFamily, InstanceFamilyParams
from depart.metric import EuclideanSpace, ExplicitSpace, LineSpace, is_collinear, validate_metric
from depart.partitions import LocalPartition


class TestAdversarialFamilies(TestCase):
    def test_line_voronoi(self):
        instance = gen_line_voronoi(3, 5)
        space = EuclideanSpace(2)
        self.assertEqual(instance.space, space)
        self.assertListEqual(instance.depot_config.depots, space.points([(0, 1), (0, 2), (0, 3)]))
        self.assertListEqual(instance.requests, space.points([(5, 1), (5, 2), (5, 3)]))
        self.assertEqual(instance.family, InstanceFamily.LINE_VORONOI)

        self.assertEqual(gen_line_voronoi(2, 1).n, 2)
        instance = gen_line_voronoi(9, 100)
        self.assertTrue(all(p.coords[0] == 100 for p in instance.requests))

    def test_simplex(self):
        instance = gen_simplex(3, 0.1)
        self.assertEqual(instance.space, EuclideanSpace(3))
        self.assertEqual(instance.depot_config.depot(2).coords, (0.0, 1.0, 0.0))
        self.assertEqual(instance.requests[2].coords, (0.0, 0.0, 0.1))
        self.assertEqual(gen_simplex(2, 0.5).space, EuclideanSpace(2))

        with self.assertRaises(ValueError):
            gen_simplex(3, 0)

    def test_local_adversarial(self):
        for f, last in ((10, 11), (1, 2), (100, 101)):
            instance = gen_local_adversarial(f)
            space = LineSpace()
            self.assertListEqual(instance.depot_config.depots, space.points([0, 1, last]))
            self.assertListEqual(instance.requests, space.points([1.25]))

        with self.assertRaises(ValueError):
            gen_local_adversarial(0.5)


class TestRandomFamilies(TestCase):
    def test_random_line(self):
        instance = gen_random(InstanceFamilyParams(InstanceFamily.RANDOM_LINE, m=5, n=6, seed=1))
        self.assertEqual(instance.m, 5)
        self.assertEqual(instance.n, 6)
        self.assertEqual(instance.space, EuclideanSpace(2))
        self.assertTrue(is_collinear(instance.space, instance.depot_config.depots))
        self.assertEqual(instance.name, 'random_line-m5-n6-seed1')

    def test_random_bounded_ratio(self):
        for f in (1, 2, 4):
            instance = gen_random(InstanceFamilyParams(InstanceFamily.RANDOM_BOUNDED_RATIO, m=4, n=3, f=f, seed=7))
            config = instance.depot_config
            self.assertLessEqual(config.max_distance(), f * config.min_distance() + 1e-9)

    def test_random_explicit(self):
        instance = gen_random(InstanceFamilyParams(InstanceFamily.RANDOM_EXPLICIT, m=3, n=4, seed=3))
        self.assertIsInstance(instance.space, ExplicitSpace)
        self.assertEqual(instance.space.size, 7)
        self.assertTrue(validate_metric(instance.space).ok)
        self.assertListEqual([p.coords for p in instance.depot_config.depots], [0, 1, 2])

    def test_random_local_interior(self):
        for m in (2, 3, 4):
            params = InstanceFamilyParams(InstanceFamily.RANDOM_LOCAL_INTERIOR, m=m, n=6, f=2, seed=m)
            instance = gen_random(params)
            scheme = LocalPartition(instance.depot_config)
            for p in instance.requests:
                self.assertLess(scheme.assign(p), m)

    def test_empty(self):
        for family in InstanceFamily.RANDOM:
            instance = gen_random(InstanceFamilyParams(family, m=3, n=0, f=2, seed=0))
            self.assertEqual(instance.n, 0)

    def test_deterministic(self):
        params = InstanceFamilyParams(InstanceFamily.RANDOM_BOUNDED_RATIO, m=3, n=5, f=2, seed=11)
        self.assertEqual(gen_random(params), gen_random(params))
        self.assertNotEqual(gen_random(params).requests, gen_random(params.replace(seed=12)).requests)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            gen_random(InstanceFamilyParams(InstanceFamily.SIMPLEX, m=3, n=2, seed=0))
        with self.assertRaises(ValueError):
            gen_random(InstanceFamilyParams(InstanceFamily.RANDOM_LINE, m=3, seed=0))
        with self.assertRaises(ValueError):
            gen_random(InstanceFamilyParams(InstanceFamily.RANDOM_BOUNDED_RATIO, m=3, n=2, seed=0))

    def test_rejection_budget(self):
        params = InstanceFamilyParams(InstanceFamily.RANDOM_LINE, m=5, n=2, seed=0)
        with patch('depart.generators.MIN_DEPOT_GAP', 100.0):
            with self.assertLogs('depart.generators', level='WARNING'):
                with self.assertRaises(GenerationError):
                    gen_random(params)


class TestRandomOnline(TestCase):
    def test_release_dates(self):
        params = InstanceFamilyParams(InstanceFamily.RANDOM_LINE, m=3, n=5, seed=4)
        instance = gen_random_online(params, max_release=5.0)
        release_dates = instance.release_dates
        self.assertListEqual(release_dates, sorted(release_dates))
        self.assertTrue(all(0 <= r <= 5 for r in release_dates))
        self.assertListEqual(instance.locations_list, gen_random(params).requests)
        self.assertListEqual(gen_random_online(params, max_release=5.0).release_dates, release_dates)

    def test_zero_release(self):
        params = InstanceFamilyParams(InstanceFamily.RANDOM_LINE, m=2, n=3, seed=0)
        self.assertTrue(np.all(np.array(gen_random_online(params, max_release=0).release_dates) == 0))

        with self.assertRaises(ValueError):
            gen_random_online(params, max_release=-1)
