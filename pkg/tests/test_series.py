from fractions import Fraction
import pickle
import unittest

from hypothesis import given
import hypothesis.strategies as st
from sympy.polys.rings import PolyElement

from errors import InvalidArgumentError, UnsupportedError
import series
from series import MultiPoly, TruncatedSeries, X


polys = st.dictionaries(
    keys=st.tuples(st.integers(0, 3), st.integers(0, 2)),
    values=st.integers(-5, 5),
    max_size=4,
).map(MultiPoly)


class MultiPolyTests(unittest.TestCase):
    def test_parse_reads_documented_grammar(self):
        poly = MultiPoly.parse('1 + 3*x1^2 - 1/2*x1*x2')

        self.assertEqual(poly.constant_term(), 1)
        self.assertEqual(poly.coefficient((2,)), 3)
        self.assertEqual(poly.coefficient((1, 1)), Fraction(-1, 2))
        self.assertEqual(str(poly), '1 + 3*x1^2 - 1/2*x1*x2')
        self.assertEqual(MultiPoly.parse(str(poly)), poly)

    def test_bare_x_means_first_variable(self):
        self.assertEqual(MultiPoly.parse('x^2 + x'), X * X + X)

    def test_parse_rejects_garbage(self):
        for text in ('', 'x1^', '3**x1', 'y2'):
            with self.subTest(text=text):
                with self.assertRaises(InvalidArgumentError):
                    MultiPoly.parse(text)

    def test_arithmetic_is_exact(self):
        self.assertEqual((1 + X) ** 3, MultiPoly.parse('1 + 3*x + 3*x^2 + x^3'))
        self.assertEqual((X / 3) * 3, X)
        self.assertTrue((X - X).is_zero())
        self.assertEqual((X * X + 2 * X).derivative(), 2 * X + 2)

    def test_evaluate_and_univariate(self):
        poly = MultiPoly.parse('5*x + x^2')

        self.assertEqual(poly.evaluate({1: 1}), 6)
        self.assertEqual(poly.univariate(), [0, 5, 1])
        with self.assertRaises(InvalidArgumentError):
            MultiPoly.parse('x1*x2').univariate(1)

    def test_to_int_refuses_fractions_and_variables(self):
        self.assertEqual(MultiPoly.const(7).to_int(), 7)
        with self.assertRaises(InvalidArgumentError):
            MultiPoly.const(Fraction(1, 2)).to_int()
        with self.assertRaises(InvalidArgumentError):
            X.to_int()

    def test_values_live_in_the_shared_ring(self):
        poly = MultiPoly.parse('1/2*x2 + x1^2')

        self.assertIsInstance(poly.poly, PolyElement)
        self.assertIs(poly.poly.ring, series.RING)
        self.assertEqual(poly.poly, series.RING.gens[3] / 2 + series.RING.gens[2] ** 2)
        self.assertEqual(poly.terms, {(0, 1): Fraction(1, 2), (2,): 1})

    def test_variable_limit(self):
        self.assertEqual(MultiPoly.var(series.MAX_VARIABLES).nvars, series.MAX_VARIABLES)
        with self.assertRaises(InvalidArgumentError):
            MultiPoly.var(series.MAX_VARIABLES + 1)
        with self.assertRaises(InvalidArgumentError):
            MultiPoly.parse(f'x{series.MAX_VARIABLES + 1}')

    def test_pickles_for_worker_processes(self):
        poly = MultiPoly.parse('3 - 1/2*x1*x3^2')
        s = TruncatedSeries([1, X, poly], 4)

        self.assertEqual(pickle.loads(pickle.dumps(poly)), poly)
        self.assertEqual(pickle.loads(pickle.dumps(s)), s)

    @given(polys, polys, polys)
    def test_multiplication_distributes(self, a, b, c):
        self.assertEqual((a + b) * c, a * c + b * c)

    @given(polys, polys)
    def test_subtraction_inverts_addition(self, a, b):
        self.assertEqual((a + b) - b, a)


class TruncatedSeriesTests(unittest.TestCase):
    def test_exp_inverts_log1p(self):
        z = TruncatedSeries.z(8)
        logged = z.log1p()

        self.assertEqual(logged[3], Fraction(1, 3))
        self.assertTrue(logged.exp().agrees_with(1 + z))

    def test_sqrt_squares_back(self):
        s = TruncatedSeries([0, X, 2, 0, 1], 6)
        root = s.sqrt1p()

        self.assertTrue((root * root).agrees_with(1 + s))

    def test_division_needs_invertible_constant(self):
        z = TruncatedSeries.z(4)
        geometric = TruncatedSeries.one(4) / (1 - z)

        self.assertEqual([c.to_int() for c in geometric], [1, 1, 1, 1, 1])
        with self.assertRaises(InvalidArgumentError):
            TruncatedSeries.one(4) / z
        with self.assertRaises(InvalidArgumentError):
            TruncatedSeries.one(4) / TruncatedSeries([X, 1], 4)

    def test_compositional_inverse(self):
        f = TruncatedSeries([0, 1, 1], 7)
        inverse = f.comp_inverse()

        self.assertTrue(f.compose(inverse).agrees_with(TruncatedSeries.z(7)))
        # z + z^2 inverts to the Catalan series with alternating signs
        self.assertEqual(
            [c.to_int() for c in inverse],
            [0] + [(-1) ** (n - 1) * series.catalan(n - 1) for n in range(1, 8)],
        )

    def test_functions_need_zero_constant_term(self):
        with self.assertRaises(InvalidArgumentError):
            TruncatedSeries([1, 1], 3).log1p()
        with self.assertRaises(InvalidArgumentError):
            series.series_func(TruncatedSeries.z(3), 'sin')

    def test_order_is_the_minimum_of_operands(self):
        product = TruncatedSeries.z(5) * TruncatedSeries.z(3)

        self.assertEqual(product.order, 3)
        with self.assertRaises(InvalidArgumentError):
            product[4]

    def test_polynomial_coefficients_survive_series_functions(self):
        s = TruncatedSeries([0, X, X * X], 6)

        self.assertTrue(s.log1p().exp().agrees_with(1 + s))
        self.assertEqual(s.exp()[2], X * X + X * X / 2)
        self.assertEqual(series.exp_series(4, scale=2)[3], Fraction(8, 6))

    def test_egf_conversion(self):
        factorials = TruncatedSeries([1, 1, 2, 6, 24], 4)

        self.assertEqual(factorials.to_egf(), TruncatedSeries([1] * 5, 4))
        self.assertEqual(series.ogf_egf(factorials.to_egf(), 'to_ogf'), factorials)

    def test_dict_document(self):
        s = TruncatedSeries([0, X, Fraction(1, 2)], 2)

        self.assertEqual(s.to_dict()['coeffs'][2], {'poly': '1/2'})
        self.assertEqual(TruncatedSeries.from_dict(s.to_dict()), s)
        with self.assertRaises(InvalidArgumentError):
            TruncatedSeries.from_dict({'order': 2})


class SequenceTests(unittest.TestCase):
    def test_named_sequences(self):
        self.assertEqual(series.sequence('catalan', 6), [1, 1, 2, 5, 14, 42, 132])
        self.assertEqual(series.sequence('motzkin', 6), [1, 1, 2, 4, 9, 21, 51])
        self.assertEqual(series.sequence('schroeder', 4), [1, 2, 6, 22, 90])
        self.assertEqual(series.sequence('euler', 7), [1, 1, 1, 2, 5, 16, 61, 272])
        self.assertEqual(series.sequence('aerated_catalan', 7), [0, 1, 0, 1, 0, 2, 0, 5])
        self.assertEqual(series.sequence('narayana', 4), [1, 6, 6, 1])
        with self.assertRaises(InvalidArgumentError):
            series.sequence('fibonacci', 4)

    def test_eulerian_and_narayana_polynomials(self):
        self.assertEqual(series.eulerian_row(3), (1, 4, 1))
        self.assertEqual(series.eulerian_poly(3, scale=2), MultiPoly.parse('1 + 8*x + 4*x^2'))
        self.assertEqual(series.narayana_poly(3), MultiPoly.parse('x + 3*x^2 + x^3'))

    def test_motzkin_polynomial_sums_to_motzkin_number(self):
        for m in range(7):
            with self.subTest(m=m):
                self.assertEqual(series.motzkin_poly(m).evaluate({1: 1}), series.motzkin(m))

    def test_r_transform_relation(self):
        catalan_kappa = [1] * 6
        moments = [1, 2, 5, 14, 42, 132]

        self.assertTrue(series.verify_r_transform_relation(catalan_kappa, moments, 6))
        self.assertFalse(series.verify_r_transform_relation(catalan_kappa, [1, 2, 5, 14, 41, 132], 6))
        with self.assertRaises(UnsupportedError):
            series.verify_r_transform_relation([0, 1, 0], [0, 1, 0], 3)


class RootTests(unittest.TestCase):
    def test_real_rootedness(self):
        self.assertTrue(series.is_real_rooted((1 + X) ** 3))
        self.assertTrue(series.is_real_rooted(MultiPoly.parse('x + 4*x^2 + x^3')))
        self.assertFalse(series.is_real_rooted(MultiPoly.parse('1 + x + x^2')))

    def test_sturm_counts_distinct_roots(self):
        self.assertEqual(series.count_real_roots((X - 1) * (X - 2) * (X - 2)), 2)
        self.assertEqual(series.count_real_roots(X * X + 1), 0)

    def test_repeated_and_complex_roots(self):
        self.assertEqual(series.count_real_roots([0, 0, 1]), 1)
        self.assertEqual(series.count_real_roots(MultiPoly.const(5)), 0)
        self.assertTrue(series.is_real_rooted(X ** 4))
        self.assertFalse(series.is_real_rooted(X * (X * X + 1)))

    def test_unimodality(self):
        self.assertTrue(series.is_unimodal([1, 3, 3, 2]))
        self.assertFalse(series.is_unimodal([1, 3, 1, 2]))


if __name__ == '__main__':
    unittest.main()
