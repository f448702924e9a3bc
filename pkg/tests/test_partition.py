import unittest

import networkx as nx

from errors import InvalidArgumentError, ResourceLimitError
import partition
from partition import SetPartition


class SetPartitionTests(unittest.TestCase):
    def test_literal_round_trip(self):
        p = SetPartition.parse('{1,4,5|2,3|6|7,8}', n=8)

        self.assertEqual(str(p), '{1,4,5|2,3|6|7,8}')
        self.assertEqual(p.block_type(), (3, 2, 2, 1))
        self.assertEqual(p.successor(4), 5)
        self.assertIsNone(p.successor(5))
        self.assertTrue(p.is_block_max(6))

    def test_canonical_form_ignores_block_order(self):
        self.assertEqual(SetPartition.parse('{3|2,1}'), SetPartition.parse('{1,2|3}'))

    def test_rejects_malformed_partitions(self):
        for text in ('1,2|3', '{1,2|2}', '{1||2}', '{a}'):
            with self.subTest(text=text):
                with self.assertRaises(InvalidArgumentError):
                    SetPartition.parse(text)
        with self.assertRaises(InvalidArgumentError):
            SetPartition.parse('{1,2}', n=3)

    def test_restricted_growth_string(self):
        p = SetPartition.from_rgs((0, 1, 0, 2))

        self.assertEqual(str(p), '{1,3|2|4}')
        self.assertEqual(p.rgs(), (0, 1, 0, 2))


class EnumerationTests(unittest.TestCase):
    def test_counts_by_kind(self):
        self.assertEqual([len(partition.enumerate_partitions(n, 'all')) for n in range(1, 7)], [1, 2, 5, 15, 52, 203])
        self.assertEqual([len(partition.enumerate_partitions(n, 'noncrossing')) for n in range(1, 7)], [1, 2, 5, 14, 42, 132])
        self.assertEqual([len(partition.enumerate_partitions(n, 'connected')) for n in range(1, 6)], [1, 1, 1, 2, 6])
        self.assertEqual(len(partition.enumerate_partitions(6, 'noncrossing-matching')), 5)
        self.assertEqual(partition.enumerate_partitions(5, 'noncrossing-matching'), [])

    def test_enumeration_is_in_rgs_order(self):
        found = partition.enumerate_partitions(5, 'noncrossing')
        words = [p.rgs() for p in found]

        self.assertEqual(words, sorted(words))
        self.assertTrue(all(partition.is_noncrossing(p) for p in found))

    def test_crossing_and_connectivity(self):
        crossing = SetPartition.parse('{1,3|2,4}')

        self.assertFalse(partition.is_noncrossing(crossing))
        self.assertTrue(partition.is_connected(crossing))
        self.assertEqual(partition.crossing_graph(crossing).number_of_edges(), 1)
        self.assertFalse(partition.is_connected(SetPartition.parse('{1,2|3,4}')))

    def test_caps_and_bad_kinds(self):
        with self.assertRaises(ResourceLimitError):
            partition.enumerate_partitions(11, 'all')
        with self.assertRaises(InvalidArgumentError):
            partition.enumerate_partitions(3, 'planar')
        with self.assertRaises(InvalidArgumentError):
            partition.enumerate_partitions(0)


class OrientationTests(unittest.TestCase):
    def test_unique_source_orientations_count_tutte_value(self):
        self.assertEqual(partition.tutte_point(nx.complete_graph(3), 0), 2)
        self.assertEqual(partition.tutte_point(nx.complete_graph(4), 2), 6)
        self.assertEqual(partition.tutte_point(nx.path_graph(4), 0), 1)

    def test_orientations_are_acyclic_with_one_source(self):
        graph = nx.cycle_graph(4)
        for orientation in partition.orientations_with_unique_source(graph, 1):
            self.assertTrue(orientation.is_acyclic())
            self.assertEqual(orientation.sources(), [1])

    def test_orientation_must_cover_every_edge(self):
        graph = nx.path_graph(3)
        with self.assertRaises(InvalidArgumentError):
            partition.Orientation(graph, {(0, 1): (0, 1)})
        with self.assertRaises(InvalidArgumentError):
            partition.tutte_point(graph, 7)


class KrewerasTests(unittest.TestCase):
    def test_known_complements(self):
        self.assertEqual(str(partition.kreweras(SetPartition.parse('{1|2|3}'))), '{1,2,3}')
        self.assertEqual(str(partition.kreweras(SetPartition.parse('{1,2,3}'))), '{1|2|3}')
        self.assertEqual(str(partition.kreweras(SetPartition.parse('{1,4|2,3}'))), '{1,3|2|4}')

    def test_block_counts_add_to_n_plus_one(self):
        for p in partition.enumerate_partitions(6, 'noncrossing'):
            complement = partition.kreweras(p)
            self.assertTrue(partition.is_noncrossing(complement))
            self.assertEqual(len(p) + len(complement), 7)

    def test_rejects_crossing_input(self):
        with self.assertRaises(InvalidArgumentError):
            partition.kreweras(SetPartition.parse('{1,3|2,4}'))


class LinearExtensionTests(unittest.TestCase):
    def test_small_arch_graphs(self):
        self.assertEqual(partition.linear_extension_count(SetPartition.parse('{1|2|3|4}')), 1)
        self.assertEqual(partition.linear_extension_count(SetPartition.parse('{1,2}')), 0)
        self.assertEqual(partition.linear_extensions(SetPartition.parse('{1,3|2}')), [(2, 1, 3)])

    def test_count_matches_listing(self):
        for p in partition.enumerate_partitions(5, 'noncrossing'):
            listed = partition.linear_extensions(p)
            self.assertEqual(len(listed), partition.linear_extension_count(p))
            self.assertTrue(all(partition.is_linear_extension(p, order) for order in listed))

    def test_is_linear_extension_rejects_non_permutations(self):
        self.assertFalse(partition.is_linear_extension(SetPartition.parse('{1|2}'), (1, 1)))
        self.assertFalse(partition.is_linear_extension(SetPartition.parse('{1|2}'), (2, 1)))

    def test_worked_complement_has_no_extensions(self):
        eta = SetPartition.parse('{1,4,5|2,3|6|7,8}')
        complement = partition.kreweras(eta)

        self.assertEqual(str(complement), '{1,3|2|4|5,6,8|7}')
        self.assertEqual(partition.linear_extension_count(complement), 0)
        self.assertEqual(partition.kreweras_extension_count(eta), 0)

    def test_matching_families(self):
        flat = SetPartition.parse('{1,6|2,3|4,5}')
        nested = SetPartition.parse('{1,6|2,5|3,4}')

        self.assertEqual(partition.kreweras_extension_count(flat), 3)
        self.assertEqual(partition.kreweras_extension_count(nested), 2)

    def test_last_element_must_join_the_first(self):
        self.assertEqual(partition.linear_extension_count(partition.kreweras(SetPartition.parse('{1|2,3}'))), 1)
        self.assertEqual(partition.kreweras_extension_count(SetPartition.parse('{1|2,3}')), 0)
        self.assertEqual(partition.kreweras_extension_count(SetPartition.parse('{1,2|3,4}')), 0)
        self.assertEqual(partition.kreweras_extension_count(SetPartition.parse('{1}')), 1)

    def test_counts_are_positive_without_singletons(self):
        for n in range(2, 8):
            for eta in partition.enumerate_partitions(n, 'noncrossing'):
                if eta.block_index(1) != eta.block_index(n):
                    continue
                with self.subTest(eta=str(eta)):
                    no_singletons = all(len(block) > 1 for block in eta.blocks)
                    self.assertEqual(partition.kreweras_extension_count(eta) > 0, no_singletons)

    def test_totals_count_hook_configurations(self):
        totals = [
            sum(partition.kreweras_extension_count(eta) for eta in partition.enumerate_partitions(n, 'noncrossing'))
            for n in range(1, 8)
        ]

        self.assertEqual(totals, [1, 1, 1, 2, 6, 22, 99])
        self.assertEqual(len(list(partition.hooked_pairs(6))), 22)


if __name__ == '__main__':
    unittest.main()
