import math
import unittest

from config import Config
import cumulant
from cumulant import CumulantSequence
from errors import InvalidArgumentError, ResourceLimitError
import series
from series import MultiPoly
import tree


def ints(seq):
    return [v.to_int() for v in seq.values]


class SequenceTests(unittest.TestCase):
    def test_parse_json_values(self):
        seq = CumulantSequence.parse('free', '[1, "x", "1/2", {"poly": "x2"}]')

        self.assertEqual(len(seq), 4)
        self.assertEqual(seq(2), series.X)
        self.assertEqual(seq(3), MultiPoly.parse('1/2'))
        self.assertEqual(seq.to_dict()['values'], ['1', 'x1', '1/2', 'x2'])

    def test_parse_rejects_bad_input(self):
        for text in ('[]', 'not json', '{"values": 3}'):
            with self.subTest(text=text):
                with self.assertRaises(InvalidArgumentError):
                    CumulantSequence.parse('moments', text)
        with self.assertRaises(InvalidArgumentError):
            CumulantSequence('boolean', [1])
        with self.assertRaises(InvalidArgumentError):
            CumulantSequence('free', [1])(2)


class ConversionTests(unittest.TestCase):
    def test_gaussian_moments(self):
        gaussian = CumulantSequence('classical', [0, 1, 0, 0, 0, 0])
        for method in cumulant.methods_for('classical', 'moments'):
            with self.subTest(method=method):
                self.assertEqual(ints(cumulant.convert(gaussian, 'moments', method)), [0, 1, 0, 3, 0, 15])

    def test_semicircle_moments(self):
        semicircle = CumulantSequence('free', [0, 1, 0, 0, 0, 0, 0, 0])
        for method in cumulant.methods_for('free', 'moments'):
            with self.subTest(method=method):
                self.assertEqual(ints(cumulant.convert(semicircle, 'moments', method)), [0, 1, 0, 2, 0, 5, 0, 14])

    def test_free_to_classical_routes_agree_symbolically(self):
        symbolic = CumulantSequence('free', [series.x(i) for i in range(1, 6)])
        results = cumulant.route_agreement(symbolic, 'classical')

        self.assertEqual(sorted(results), ['avoid231', 'josuat', 'nc_linext', 'recursion', 'vhc'])
        expected = results['recursion']
        for method, values in results.items():
            with self.subTest(method=method):
                self.assertEqual(values, expected)

    def test_linear_extension_route_matches_recursion(self):
        symbolic = CumulantSequence('free', [series.x(i) for i in range(1, 8)])

        self.assertEqual(
            cumulant.convert(symbolic, 'classical', 'nc_linext'),
            cumulant.convert(symbolic, 'classical', 'recursion'),
        )

    def test_linear_extension_route_counts_configurations(self):
        kappa = CumulantSequence('free', [-1] * 7)
        classical = cumulant.convert(kappa, 'classical', 'nc_linext')

        self.assertEqual([-v for v in ints(classical)], [1, 1, 1, 2, 6, 22, 99])

    def test_round_trips(self):
        moments = CumulantSequence('moments', [series.x(i) for i in range(1, 6)])
        for target in ('classical', 'free'):
            with self.subTest(target=target):
                there = cumulant.convert(moments, target)
                self.assertEqual(cumulant.convert(there, 'moments'), moments)

    def test_catalan_free_cumulants(self):
        kappa = CumulantSequence('free', [-series.catalan(n - 1) for n in range(1, 8)])

        self.assertEqual(ints(cumulant.convert(kappa, 'classical')), [-math.factorial(n - 1) for n in range(1, 8)])
        self.assertEqual(ints(cumulant.convert(kappa, 'moments')), [-1, 0, 0, 0, 0, 0, 0])

    def test_unit_free_cumulants_count_configurations(self):
        kappa = CumulantSequence('free', [-1] * 6)
        classical = cumulant.convert(kappa, 'classical', 'vhc')

        self.assertEqual([-v for v in ints(classical)], [1, 1, 1, 2, 6, 22])

    def test_same_kind_truncates(self):
        seq = CumulantSequence('moments', [1, 2, 3])

        self.assertEqual(cumulant.convert(seq, 'moments', length=2).values, [MultiPoly.const(1), MultiPoly.const(2)])

    def test_conversion_errors(self):
        seq = CumulantSequence('free', [1, 2, 3])
        with self.assertRaises(InvalidArgumentError):
            cumulant.convert(seq, 'classical', 'lehner')
        with self.assertRaises(InvalidArgumentError):
            cumulant.convert(seq, 'classical', length=4)
        with self.assertRaises(InvalidArgumentError):
            cumulant.convert(seq, 'boolean')
        with self.assertRaises(ResourceLimitError):
            cumulant.convert(CumulantSequence('moments', [1] * 11), 'classical', 'lattice')


class WeightCacheTests(unittest.TestCase):
    def setUp(self):
        self._limit = Config.PARTITION_N

    def tearDown(self):
        Config.PARTITION_N = self._limit

    def test_lowered_cap_applies_to_cached_weights(self):
        kappa = CumulantSequence('free', [-1] * 5)
        cumulant.convert(kappa, 'classical', 'nc_linext')
        Config.PARTITION_N = 4

        with self.assertRaises(ResourceLimitError):
            cumulant._type_weights(5, 'nc_linext')
        self.assertTrue(cumulant._type_weights(4, 'nc_linext'))


class TroupeCumulantTests(unittest.TestCase):
    def test_free_cumulants_are_negated_counts(self):
        kappa = cumulant.troupe_free_cumulants(tree.TroupeSpec.named('BPT'), (), 4)

        self.assertEqual(ints(kappa), [-1, -1, -2, -5])

    def test_correspondence_holds_for_named_troupes(self):
        for name, stats in [('BPT', ('des',)), ('FBPT', ()), ('MOT', ('des', 'peak')), ('SCH', ('black',))]:
            with self.subTest(troupe=name):
                report = cumulant.troupe_correspondence_check(tree.TroupeSpec.named(name), stats, 6)
                self.assertTrue(report['success'], report)
                self.assertEqual(report['checked'], 6)

    def test_correspondence_for_a_generated_troupe(self):
        spec = tree.TroupeSpec.from_counts([0, 1, 1, 0, 0, 0])
        report = cumulant.troupe_correspondence_check(spec, ('des',), 6, method='recursion')

        self.assertTrue(report['success'], report)

    def test_all_branches_are_not_a_troupe(self):
        report = cumulant.non_troupe_counterexample_check()

        self.assertTrue(report['mismatch'])
        self.assertEqual(report['decreasing_branch_count'], 4)


if __name__ == '__main__':
    unittest.main()
