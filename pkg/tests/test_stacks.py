import unittest

from config import Config
from errors import InvalidArgumentError, ResourceLimitError, UnsupportedError
import perm as perms
from series import MultiPoly
import stacks
import tree
from tree import TroupeSpec


class AvoiderTests(unittest.TestCase):
    def test_avoiders_are_sorted_and_complete(self):
        found = stacks.avoiders_231(5)

        self.assertEqual(len(found), 42)
        self.assertEqual(found, sorted(found))
        self.assertTrue(all(perms.avoids_231(p) for p in found))
        self.assertEqual(stacks.avoiders_231(0), [()])

    def test_west_numbers(self):
        self.assertEqual([stacks.west_count(n) for n in range(1, 6)], [1, 2, 6, 22, 91])


class TwoStackTests(unittest.TestCase):
    def test_bpt_diagonal_counts_two_stack_sortable(self):
        counts = stacks.two_stack_counts(TroupeSpec.named('BPT'), 7)

        self.assertEqual(counts[1:], [stacks.west_count(n) for n in range(1, 8)])

    def test_table_entries_follow_tail_length(self):
        table = stacks.two_stack(TroupeSpec.named('BPT'), (), 4)
        expected = sum(
            perms.fertility_brute(p) for p in stacks.avoiders_231(4) if perms.tail_length(p) >= 2
        )

        self.assertEqual(table[(2, 2)], MultiPoly.const(expected))
        self.assertEqual(table[(9, 9)], MultiPoly.const(0))
        self.assertEqual(table.to_dict()['N'], 4)

    def test_functional_equation(self):
        for name, stats in [('BPT', ()), ('BPT', ('des',)), ('FBPT', ()), ('MOT', ('des', 'peak'))]:
            with self.subTest(troupe=name, stats=stats):
                table = stacks.two_stack(TroupeSpec.named(name), stats, 6)
                report = stacks.functional_equation_check(table)
                self.assertTrue(report['success'], report['failures'])

    def test_serial_and_pooled_tables_agree(self):
        spec = TroupeSpec.named('MOT')
        serial = stacks.two_stack(spec, (), 5)
        saved = Config.WORKERS
        Config.WORKERS = 2
        try:
            pooled = stacks.two_stack(spec, (), 5)
        finally:
            Config.WORKERS = saved

        self.assertEqual(pooled.entries, serial.entries)

    def test_cap(self):
        with self.assertRaises(ResourceLimitError):
            stacks.two_stack(TroupeSpec.named('BPT'), (), 12)


class WitnessTests(unittest.TestCase):
    def test_quintics_vanish(self):
        for name in ('FBPT', 'MOT'):
            with self.subTest(troupe=name):
                table = stacks.two_stack(TroupeSpec.named(name), (), 8)
                report = stacks.algebraic_witness_check(name.lower(), table)
                self.assertTrue(report['success'], report['nonzero_orders'])

    def test_witness_needs_matching_table(self):
        table = stacks.two_stack(TroupeSpec.named('BPT'), (), 3)
        with self.assertRaises(InvalidArgumentError):
            stacks.algebraic_witness_check('sch', table)
        with self.assertRaises(UnsupportedError):
            stacks.algebraic_witness_check('fbpt', table)


class ThreeStackTests(unittest.TestCase):
    def test_bpt_counts_three_stack_sortable(self):
        bpt = TroupeSpec.named('BPT')

        self.assertEqual([stacks.three_stack(bpt, (), n) for n in range(1, 5)], [1, 2, 6, 24])
        self.assertEqual(stacks.three_stack_series(bpt, (), 3), [1, 2, 6])

    def test_recurrence_matches_brute_force(self):
        for name, stats in [('BPT', ()), ('BPT', ('des',)), ('FBPT', ('des',)), ('MOT', ()), ('SCH', ('black',))]:
            spec = TroupeSpec.named(name)
            for n in range(1, 6):
                with self.subTest(troupe=name, stats=stats, n=n):
                    self.assertEqual(stacks.three_stack(spec, stats, n), stacks.three_stack_brute(spec, stats, n))

    def test_class_counts_match_brute_force(self):
        self.assertEqual([stacks.three_stack_class('alternating', n) for n in (1, 3)], [1, 2])
        for cls, lengths in [('alternating', (1, 3, 5, 7)), ('edp', range(1, 8))]:
            for n in lengths:
                with self.subTest(cls=cls, n=n):
                    self.assertEqual(stacks.three_stack_class(cls, n), stacks.three_stack_class_brute(cls, n))

    def test_class_errors(self):
        with self.assertRaises(UnsupportedError):
            stacks.three_stack_class('alternating', 4)
        with self.assertRaises(InvalidArgumentError):
            stacks.three_stack_class_brute('odd', 3)

    def test_bad_lengths(self):
        with self.assertRaises(InvalidArgumentError):
            stacks.three_stack(TroupeSpec.named('BPT'), (), 0)
        with self.assertRaises(ResourceLimitError):
            stacks.three_stack(TroupeSpec.named('BPT'), (), 13)

    def test_statistics_are_normalized(self):
        spec = TroupeSpec.named('BPT')

        self.assertEqual(
            stacks.three_stack(spec, ('des',), 4),
            stacks.three_stack(spec, tree.normalize_stats(['des_plus_one']), 4),
        )


if __name__ == '__main__':
    unittest.main()
