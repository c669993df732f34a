# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

import unittest

from fractions import Fraction

import utils

from interval import Interval
from polycore import (BiDegree, BlockSplit, LinearChange, Polynomial,
                      PolynomialSyntaxError, SingularMatrixError, UnknownVariableError,
                      apply_linear_change, bidegree_of, bihomogenize, dehomogenize,
                      parse_polynomial)


def random_polynomial(rng, varnames, terms=4, degree=3):
    result = {}
    for _ in range(terms):
        exps = tuple(int(rng.integers(0, degree + 1)) for _ in varnames)
        result[exps] = utils.random_int(rng, 9)
    return Polynomial(varnames, result)


class ParseTest(unittest.TestCase):

    def test_parse_and_print(self):
        f = parse_polynomial('x^2 + y^2 - 1', ('x', 'y'))
        self.assertEqual(str(f), 'x^2 + y^2 - 1')
        self.assertEqual(f.total_degree(), 2)

    def test_rational_coefficients(self):
        f = parse_polynomial('-1/3*x*y + 2', ('x', 'y'))
        self.assertEqual(str(f), '-1/3*x*y + 2')
        self.assertEqual(f.evaluate([3, 1]), Fraction(1))

    def test_parentheses_and_powers(self):
        f = parse_polynomial('(x - 1)^2', ('x',))
        self.assertEqual(f, parse_polynomial('x^2 - 2*x + 1', ('x',)))

    def test_print_round_trip(self):
        rng = utils.spawn_rng(1, 'roundtrip')
        varnames = ('x', 'y', 'z')
        for _ in range(200):
            f = random_polynomial(rng, varnames)
            self.assertEqual(parse_polynomial(str(f), varnames), f)

    def test_unknown_variable(self):
        with self.assertRaises(UnknownVariableError):
            parse_polynomial('x + w', ('x', 'y'))

    def test_syntax_error_position(self):
        try:
            parse_polynomial('x + * y', ('x', 'y'))
        except PolynomialSyntaxError as e:
            self.assertEqual(e.position, 4)
        else:
            self.fail('expected a syntax error')

    def test_zero(self):
        f = parse_polynomial('x - x', ('x',))
        self.assertTrue(f.is_zero())
        self.assertEqual(str(f), '0')
        self.assertEqual(f.total_degree(), -1)


class ArithmeticTest(unittest.TestCase):

    def setUp(self):
        self.ring = ('x', 'y')
        self.x = Polynomial.variable(self.ring, 'x')
        self.y = Polynomial.variable(self.ring, 'y')

    def test_ring_laws(self):
        f = self.x + self.y
        g = self.x - self.y
        self.assertEqual(f * g, self.x ** 2 - self.y ** 2)
        self.assertEqual(f + g - 2 * self.x, Polynomial.zero(self.ring))
        self.assertEqual((f ** 3).total_degree(), 3)

    def test_ring_mismatch(self):
        z = Polynomial.variable(('z',), 'z')
        with self.assertRaises(ValueError):
            self.x + z

    def test_diff_and_gradient(self):
        f = self.x ** 2 * self.y + 3 * self.y
        self.assertEqual(f.diff('x'), 2 * self.x * self.y)
        self.assertEqual(f.gradient(['x', 'y']), [2 * self.x * self.y, self.x ** 2 + 3])

    def test_evaluate_interval(self):
        f = self.x ** 2 + self.y ** 2 - 1
        value = f.evaluate([Interval(Fraction(-1, 10), Fraction(1, 10)), Interval(1)])
        self.assertTrue(value.contains_zero())
        self.assertEqual(f.evaluate({'x': 1, 'y': 0}), 0)

    def test_substitute_and_to_ring(self):
        f = self.x * self.y + 1
        self.assertEqual(f.substitute({'y': 2}), 2 * self.x + 1)
        g = f.to_ring(('y', 'x', 'z'))
        self.assertEqual(g.varnames, ('y', 'x', 'z'))
        self.assertEqual(g.evaluate([2, 3, 5]), 7)
        with self.assertRaises(ValueError):
            f.to_ring(('x',))

    def test_univariate(self):
        t = Polynomial.from_univariate_coefficients('T', [Fraction(-2), 0, 1])
        self.assertEqual(str(t), 'T^2 - 2')
        self.assertEqual(t.univariate_coefficients(), [-2, 0, 1])


class BlockTest(unittest.TestCase):

    def setUp(self):
        self.split = BlockSplit(('x',), ('l',))

    def test_bidegree(self):
        ring = ('x', 'l')
        f = parse_polynomial('x^2*l + x*l', ring)
        self.assertEqual(bidegree_of(f, self.split), (BiDegree(2, 1), False))
        g = parse_polynomial('x^2*l - 3*x^2*l', ring)
        self.assertEqual(bidegree_of(g, self.split), (BiDegree(2, 1), True))

    def test_bihomogenize_round_trip(self):
        rng = utils.spawn_rng(2, 'bihomogenize')
        for _ in range(200):
            f = random_polynomial(rng, ('x', 'l'))
            g = bihomogenize(f, self.split)
            self.assertTrue(bidegree_of(g, self.split.homogenized())[1])
            self.assertEqual(dehomogenize(g, self.split), f)

    def test_bihomogenize_example(self):
        f = parse_polynomial('x*l - 1', ('x', 'l'))
        g = bihomogenize(f, self.split)
        self.assertEqual(g, parse_polynomial('x*l - X0*L0', ('x', 'l', 'X0', 'L0')))

    def test_homogenizing_variable_in_use(self):
        split = BlockSplit(('x', 'X0'), ('l',))
        f = parse_polynomial('X0 + x*l', ('x', 'X0', 'l'))
        with self.assertRaises(ValueError):
            bihomogenize(f, split)

    def test_overlapping_blocks(self):
        with self.assertRaises(ValueError):
            BlockSplit(('x', 'y'), ('y',))


class LinearChangeTest(unittest.TestCase):

    def test_singular(self):
        with self.assertRaises(SingularMatrixError):
            LinearChange([[1, 2], [2, 4]])

    def test_inverse(self):
        A = LinearChange([[2, 1], [1, 1]])
        inverse = A.inverse()
        self.assertEqual(inverse.apply(A.apply([Fraction(3), Fraction(5)])), [3, 5])

    def test_apply_to_polynomial(self):
        ring = ('x', 'y')
        f = parse_polynomial('x^2 + y', ring)
        A = LinearChange([[1, 1], [0, 1]])
        self.assertEqual(apply_linear_change(f, A, ring),
                         parse_polynomial('(x + y)^2 + y', ring))

    def test_apply_then_inverse(self):
        ring = ('x', 'y')
        f = parse_polynomial('x^3 - x*y + 7', ring)
        A = LinearChange([[3, -1], [2, 5]])
        g = apply_linear_change(f, A, ring)
        self.assertEqual(apply_linear_change(g, A.inverse(), ring), f)


if __name__ == '__main__':
    unittest.main()
