import unittest

from hypothesis import given
import hypothesis.strategies as st

from errors import InvalidArgumentError, ResourceLimitError
import perm as perms
import tree


small_perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


class ParseTests(unittest.TestCase):
    def test_parse_and_format(self):
        self.assertEqual(perms.parse_perm('4,1,6,2'), (4, 1, 6, 2))
        self.assertEqual(perms.parse_perm(' '), ())
        self.assertEqual(perms.format_perm((4, 1, 6, 2)), '4,1,6,2')

    def test_parse_rejects_bad_literals(self):
        for text in ('1,1', 'a,2', '0,1', '1,,2'):
            with self.subTest(text=text):
                with self.assertRaises(InvalidArgumentError):
                    perms.parse_perm(text)


class StackSortTests(unittest.TestCase):
    def test_known_images(self):
        self.assertEqual(perms.stack_sort((4, 1, 6, 2)), (1, 4, 2, 6))
        self.assertEqual(perms.stack_sort((4, 1, 6, 3, 5, 2)), (1, 4, 3, 2, 5, 6))
        self.assertEqual(perms.stack_sort(()), ())

    def test_engines_agree(self):
        for p in perms.all_permutations(6):
            self.assertEqual(perms.stack_sort(p, 'stack'), perms.stack_sort(p, 'recursive'))
        with self.assertRaises(InvalidArgumentError):
            perms.stack_sort((1, 2), 'queue')

    @given(small_perms)
    def test_image_ends_with_maximum(self, p):
        image = perms.stack_sort(p)
        self.assertEqual(sorted(image), sorted(p))
        self.assertEqual(image[-1], max(p))

    @given(small_perms)
    def test_one_stack_sortable_means_231_avoiding(self, p):
        self.assertEqual(perms.is_t_stack_sortable(p, 1), perms.avoids_231(p))

    def test_t_stack_sortable_counts(self):
        s4 = perms.all_permutations(4)
        self.assertEqual(sum(1 for p in s4 if perms.is_t_stack_sortable(p, 1)), 14)
        self.assertEqual(sum(1 for p in s4 if perms.is_t_stack_sortable(p, 2)), 22)
        self.assertEqual(sum(1 for p in s4 if perms.is_t_stack_sortable(p, 3)), 24)
        with self.assertRaises(InvalidArgumentError):
            perms.is_t_stack_sortable((1,), 0)


class StatisticTests(unittest.TestCase):
    def test_descents_and_peaks(self):
        self.assertEqual(perms.descents((3, 1, 4, 2, 5)), [1, 3])
        self.assertEqual(perms.peaks((3, 1, 4, 2, 5)), [3])

    def test_tail_length_uses_relative_order(self):
        self.assertEqual(perms.tail_length((1, 2, 3)), 3)
        self.assertEqual(perms.tail_length((2, 1, 3)), 1)
        self.assertEqual(perms.tail_length((3, 1, 2)), 0)
        self.assertEqual(perms.tail_length((20, 10, 30)), 1)

    def test_classes(self):
        self.assertTrue(perms.is_alternating((1, 3, 2)))
        self.assertFalse(perms.is_alternating((1, 2, 3)))
        self.assertTrue(perms.is_edp((1, 3, 2, 4)))
        self.assertFalse(perms.is_edp((2, 1, 3)))
        self.assertFalse(perms.avoids_231((2, 3, 1)))
        self.assertEqual(sum(1 for p in perms.all_permutations(5) if perms.avoids_231(p)), 42)

    def test_classify(self):
        report = perms.classify((1, 3, 2, 4))

        self.assertEqual(report['descents'], [2])
        self.assertEqual(report['peaks'], [2])
        self.assertTrue(report['edp'])
        self.assertTrue(report['avoids_231'])
        self.assertFalse(report['increasing'])

    def test_right_bound_descents(self):
        self.assertEqual(perms.right_bound_descents((3, 1, 4, 2, 5, 6, 7)), [3])
        self.assertEqual(perms.right_bound_descents((1, 2, 3)), [])

    def test_inverse_and_standardize(self):
        self.assertEqual(perms.inverse((2, 3, 1)), (3, 1, 2))
        self.assertEqual(perms.standardize((20, 5, 30)), (2, 1, 3))
        with self.assertRaises(InvalidArgumentError):
            perms.inverse((1, 3))


class PreimageTests(unittest.TestCase):
    def test_brute_preimages(self):
        self.assertEqual(len(perms.brute_preimages((1, 2, 3))), 5)
        self.assertEqual(perms.brute_preimages((2, 1, 3)), [(2, 3, 1)])
        self.assertEqual(perms.brute_preimages((1, 3, 2)), [])
        self.assertEqual(perms.brute_preimages(()), [()])

    def test_fertility_over_a_ground_set(self):
        self.assertEqual(perms.fertility_brute((10, 30, 20, 40)), perms.fertility_brute((1, 3, 2, 4)))

    def test_brute_preimages_are_capped(self):
        with self.assertRaises(ResourceLimitError):
            perms.brute_preimages(tuple(range(1, 11)))

    def test_inorder_tree_reads_back(self):
        t = perms.inorder_tree((2, 3, 1))

        self.assertEqual(t[0], 3)
        self.assertEqual(tree.traverse(t, 'inorder'), (2, 3, 1))
        self.assertEqual(tree.traverse(t, 'postorder'), (2, 1, 3))


if __name__ == '__main__':
    unittest.main()
