import math
from unittest import TestCase

from depart.distributed_router import DistributedRouter
from depart.errors import CapacityError
from depart.generators import gen_line_voronoi, gen_local_adversarial, gen_random
from depart.instance import DepotConfig, InstanceFamily, InstanceFamilyParams, OfflineInstance
from depart.metric import LineSpace
from depart.partitions import LocalPartition, PartitionKind, VoronoiPartition, build_partition
from depart.tsp import Oracle, tour_length
from depart._services.base_service import Limits


class TestLimits(TestCase):
    def test_defaults(self):
        limits = Limits()
        self.assertEqual(limits.exact_cap, 16)
        self.assertEqual(limits.enumeration_budget, 10 ** 7)
        self.assertEqual(limits.two_opt_max_sweeps, 10 ** 4)
        self.assertEqual(limits.workers, 1)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            Limits(exact_cap=0)
        with self.assertRaises(TypeError):
            Limits(workers=1.5)
        with self.assertRaises(TypeError):
            DistributedRouter(limits='fast')

    def test_router_overrides(self):
        router = DistributedRouter(Limits(exact_cap=8), enumeration_budget=100)
        self.assertEqual(router.limits, Limits(exact_cap=8, enumeration_budget=100))
        self.assertEqual(DistributedRouter().limits, Limits())


class TestDisCost(TestCase):
    def setUp(self):
        self.router = DistributedRouter()

    def test_line_voronoi(self):
        instance = gen_line_voronoi(3, 5)
        report = self.router.dis_cost(VoronoiPartition(instance.depot_config), instance, Oracle.EXACT)
        self.assertAlmostEqual(report.total, 30, delta=1e-9)
        self.assertListEqual(report.per_server, [10.0, 10.0, 10.0])
        self.assertEqual(report.scheme, PartitionKind.VORONOI)
        self.assertEqual(report.oracle, Oracle.EXACT)
        self.assertEqual(report.assignment, (1, 2, 3))

    def test_empty(self):
        space = LineSpace()
        config = DepotConfig(space, space.points([0, 1]))
        report = self.router.dis_cost(VoronoiPartition(config), OfflineInstance(config, []))
        self.assertEqual(report.total, 0)
        self.assertListEqual(report.per_server, [0.0, 0.0])

    def test_local_adversarial(self):
        instance = gen_local_adversarial(10)
        report = self.router.dis_cost(LocalPartition(instance.depot_config), instance)
        self.assertAlmostEqual(report.total, 19.5, delta=1e-9)
        self.assertListEqual(report.per_server, [0.0, 0.0, 19.5])
        self.assertEqual(report.max_server_cost, 19.5)

    def test_total_is_sum_of_tours(self):
        instance = gen_random(InstanceFamilyParams(InstanceFamily.RANDOM_LINE, m=3, n=8, seed=2))
        report = self.router.dis_cost(VoronoiPartition(instance.depot_config), instance)
        self.assertAlmostEqual(report.total, sum(tour_length(instance.space, t) for t in report.tours), delta=1e-9)

    def test_capacity(self):
        space = LineSpace()
        config = DepotConfig(space, space.points([0, 100]))
        instance = OfflineInstance(config, space.points([1, 2, 3, 4, 5]))
        router = DistributedRouter(exact_cap=4)
        with self.assertRaises(CapacityError):
            router.dis_cost(VoronoiPartition(config), instance, Oracle.EXACT)
        report = router.dis_cost(VoronoiPartition(config), instance, Oracle.HEURISTIC)
        self.assertAlmostEqual(report.total, 10, delta=1e-9)


class TestOptOffline(TestCase):
    def setUp(self):
        self.router = DistributedRouter()

    def test_local_adversarial(self):
        result = self.router.opt_offline(gen_local_adversarial(10))
        self.assertAlmostEqual(result.total, 0.5, delta=1e-9)
        self.assertEqual(result.best_assignment, (2,))
        self.assertListEqual(result.per_server, [0.0, 0.5, 0.0])

    def test_empty(self):
        space = LineSpace()
        config = DepotConfig(space, space.points([0, 1]))
        result = self.router.opt_offline(OfflineInstance(config, []))
        self.assertEqual(result.total, 0)
        self.assertEqual(result.best_assignment, ())

    def test_line_voronoi(self):
        result = self.router.opt_offline(gen_line_voronoi(3, 100))
        self.assertAlmostEqual(result.total, 2 * math.sqrt(100 ** 2 + 1) + 2, delta=1e-9)
        self.assertEqual(result.best_assignment, (2, 2, 2))
        self.assertGreaterEqual(result.enumerated_count, 1)
        self.assertLessEqual(result.enumerated_count, 27)

    def test_lexicographic_tie(self):
        space = LineSpace()
        config = DepotConfig(space, space.points([0, 4]))
        result = self.router.opt_offline(OfflineInstance(config, [space.point(2)]))
        self.assertEqual(result.best_assignment, (1,))
        self.assertAlmostEqual(result.total, 4, delta=1e-9)

    def test_budget(self):
        router = DistributedRouter(enumeration_budget=10)
        with self.assertRaises(CapacityError) as context:
            router.opt_offline(gen_line_voronoi(3, 100))
        self.assertEqual(context.exception.limit, 'enumeration_budget')
        self.assertEqual(context.exception.value, 27)
        self.assertIn('lower bound', str(context.exception))

    def test_exact_cap(self):
        space = LineSpace()
        config = DepotConfig(space, space.points([0, 100]))
        with self.assertRaises(CapacityError) as context:
            DistributedRouter(exact_cap=3).opt_offline(OfflineInstance(config, space.points([1, 2, 3, 4])))
        self.assertEqual(context.exception.limit, 'exact_cap')

    def test_workers(self):
        instance = gen_random(InstanceFamilyParams(InstanceFamily.RANDOM_BOUNDED_RATIO, m=3, n=5, f=2, seed=9))
        sequential = self.router.opt_offline(instance)
        parallel = DistributedRouter(workers=3).opt_offline(instance)
        self.assertEqual(parallel.best_assignment, sequential.best_assignment)
        self.assertAlmostEqual(parallel.total, sequential.total, delta=1e-9)

    def test_bounds(self):
        for seed in range(10):
            instance = gen_random(InstanceFamilyParams(InstanceFamily.RANDOM_LINE, m=3, n=5, seed=seed))
            opt = self.router.opt_offline(instance)
            self.assertLessEqual(self.router.opt_lower_bound(instance), opt.total + 1e-9)
            self.assertAlmostEqual(opt.total, sum(tour_length(instance.space, t) for t in opt.tours), delta=1e-9)
            for kind in (PartitionKind.VORONOI, PartitionKind.LEVEL, PartitionKind.LOCAL):
                scheme = build_partition(kind, instance.depot_config)
                self.assertGreaterEqual(self.router.dis_cost(scheme, instance).total, opt.total - 1e-9)
            self.assertTrue(self.router.voronoi_server_bound(instance, opt.total))

    def test_removing_request_never_increases_opt(self):
        instance = gen_random(InstanceFamilyParams(InstanceFamily.RANDOM_EXPLICIT, m=3, n=5, seed=5))
        opt = self.router.opt_offline(instance).total
        for j in range(instance.n):
            self.assertLessEqual(self.router.opt_offline(instance.without_request(j)).total, opt + 1e-9)


class TestApproxRatio(TestCase):
    def setUp(self):
        self.router = DistributedRouter()

    def test_local_adversarial(self):
        instance = gen_local_adversarial(10)
        self.assertAlmostEqual(self.router.approx_ratio(LocalPartition(instance.depot_config), instance), 39,
                               delta=1e-9)

    def test_line_voronoi(self):
        instance = gen_line_voronoi(3, 100)
        ratio = self.router.approx_ratio(VoronoiPartition(instance.depot_config), instance)
        self.assertAlmostEqual(ratio, 600 / (2 * math.sqrt(100 ** 2 + 1) + 2), delta=1e-9)

    def test_requests_at_depots(self):
        space = LineSpace()
        config = DepotConfig(space, space.points([0, 5]))
        instance = OfflineInstance(config, space.points([0, 5, 5]))
        self.assertEqual(self.router.approx_ratio(VoronoiPartition(config), instance), 1)

    def test_opt_lower_bound(self):
        self.assertAlmostEqual(self.router.opt_lower_bound(gen_local_adversarial(10)), 0.5, delta=1e-9)
