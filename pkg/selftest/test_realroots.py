# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

import unittest

from fractions import Fraction

import sympy

from interval import Interval
from polycore import parse_polynomial
from realroots import (SturmSequence, isolate_real_roots, refine_root, squarefree_part,
                       to_sympy_poly)

WIDTH = Fraction(1, 2 ** 10)


def univariate(text):
    return parse_polynomial(text, ('T',))


class IsolationTest(unittest.TestCase):

    def test_sqrt_two(self):
        f = univariate('T^2 - 2')
        self.assertEqual(SturmSequence(to_sympy_poly(f)).count(-2, 2), 2)
        roots = isolate_real_roots(f, WIDTH)
        self.assertEqual(len(roots), 2)
        negative, positive = roots
        self.assertTrue(negative.hi < 0 < positive.lo)
        for root in roots:
            self.assertLess(root.width, WIDTH)
            self.assertTrue((root ** 2).contains(2) or root.lo ** 2 < 2 < root.hi ** 2)

    def test_no_real_roots(self):
        self.assertEqual(isolate_real_roots(univariate('T^2 + 1'), WIDTH), [])

    def test_multiple_root(self):
        roots = isolate_real_roots(univariate('(T - 1)^3'), WIDTH)
        self.assertEqual(len(roots), 1)
        self.assertTrue(roots[0].contains(1))
        self.assertEqual(squarefree_part(univariate('(T - 1)^3')), univariate('T - 1'))

    def test_rational_roots(self):
        roots = isolate_real_roots(univariate('T^3 - T'), WIDTH)
        self.assertEqual(len(roots), 3)
        for root, value in zip(roots, (-1, 0, 1)):
            self.assertTrue(root.contains(value))

    def test_disjoint(self):
        f = univariate('(T^2 - 2)*(T^2 - 3)*(T - 1/3)')
        roots = isolate_real_roots(f, WIDTH)
        self.assertEqual(len(roots), 5)
        for left, right in zip(roots, roots[1:]):
            self.assertLess(left.hi, right.lo)

    def test_agrees_with_sympy_count(self):
        f = univariate('T^5 - 3*T^3 + T - 1/7')
        expected = len(sympy.Poly(to_sympy_poly(f)).real_roots())
        self.assertEqual(len(isolate_real_roots(f, WIDTH)), expected)

    def test_zero_polynomial(self):
        with self.assertRaises(ValueError):
            isolate_real_roots(univariate('0'), WIDTH)

    def test_refine(self):
        coefficients = [Fraction(-2), 0, 1]
        interval = Interval(1, 2)
        for _ in range(20):
            interval = refine_root(coefficients, interval)
        self.assertTrue(interval.lo ** 2 < 2 < interval.hi ** 2)
        self.assertEqual(interval.width, Fraction(1, 2 ** 20))


if __name__ == '__main__':
    unittest.main()
