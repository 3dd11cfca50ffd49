import json

from pyfakefs.fake_filesystem_unittest import TestCase

from depart.errors import InstanceParseError, ValidationError
from depart.generators import gen_local_adversarial, gen_random, gen_random_online
from depart.instance import InstanceFamily, InstanceFamilyParams
from depart.instance_file import load_instance, save_instance


class TestInstanceFile(TestCase):
    def setUp(self):
        self.setUpPyfakefs()
        self.fs.create_dir('/instances')

    def test_round_trip(self):
        instance = gen_local_adversarial(10)
        save_instance(instance, '/instances/local.json')
        self.assertEqual(load_instance('/instances/local.json'), instance)

    def test_bit_exact_coordinates(self):
        instance = gen_random(InstanceFamilyParams(InstanceFamily.RANDOM_BOUNDED_RATIO, m=3, n=5, f=2, seed=3))
        save_instance(instance, '/instances/random.json')
        restored = load_instance('/instances/random.json')
        self.assertListEqual([p.coords for p in restored.requests], [p.coords for p in instance.requests])
        self.assertEqual(restored.name, instance.name)

    def test_online_round_trip(self):
        instance = gen_random_online(InstanceFamilyParams(InstanceFamily.RANDOM_LINE, m=2, n=4, seed=8))
        save_instance(instance, '/instances/online.json')
        self.assertEqual(load_instance('/instances/online.json'), instance)

    def test_syntax_error(self):
        self.fs.create_file('/instances/broken.json', contents='{\n  "space": {"kind": "line"},\n  "depots": [[0]\n}')
        with self.assertRaises(InstanceParseError) as context:
            load_instance('/instances/broken.json')
        self.assertEqual(context.exception.path, '/instances/broken.json')
        self.assertEqual(context.exception.line, 4)
        self.assertIn('/instances/broken.json', str(context.exception))

    def test_unsorted_release_dates(self):
        self._write('/instances/unsorted.json', release_dates=[2, 1])
        with self.assertRaises(ValidationError) as context:
            load_instance('/instances/unsorted.json')
        self.assertEqual(context.exception.field, 'release_dates')
        self.assertEqual(context.exception.path, '/instances/unsorted.json')

    def test_duplicate_depots(self):
        self._write('/instances/duplicate.json', depots=[[0], [0]])
        with self.assertRaises(ValidationError) as context:
            load_instance('/instances/duplicate.json')
        self.assertEqual(context.exception.field, 'depots')

    def test_not_a_metric(self):
        self._write('/instances/asymmetric.json', space={'kind': 'explicit', 'matrix': [[0, 5], [1, 0]]},
                    depots=[[0], [1]], requests=[])
        with self.assertRaises(ValidationError) as context:
            load_instance('/instances/asymmetric.json')
        self.assertEqual(context.exception.field, 'space.matrix')
        self.assertEqual(context.exception.path, '/instances/asymmetric.json')
        self.assertIn('symmetry', str(context.exception))

    def test_missing_file(self):
        with self.assertRaises(FileNotFoundError):
            load_instance('/instances/missing.json')

    def _write(self, path, **changes):
        data = {'space': {'kind': 'line'}, 'depots': [[0], [10]], 'requests': [[1], [2]]}
        data.update(changes)
        self.fs.create_file(path, contents=json.dumps(data))
