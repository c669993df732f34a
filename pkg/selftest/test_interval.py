# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

import unittest

from fractions import Fraction

from interval import Interval, as_interval, box_width, horner


class IntervalTest(unittest.TestCase):

    def test_empty(self):
        with self.assertRaises(ValueError):
            Interval(2, 1)

    def test_arithmetic_encloses(self):
        a = Interval(-1, 2)
        b = Interval(Fraction(1, 2), 3)
        self.assertEqual(a + b, Interval(Fraction(-1, 2), 5))
        self.assertEqual(a - b, Interval(-4, Fraction(3, 2)))
        self.assertEqual(a * b, Interval(-3, 6))
        self.assertEqual(a / b, Interval(-2, 4))
        self.assertEqual(1 - a, Interval(-1, 2))

    def test_division_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            Interval(1) / Interval(-1, 1)

    def test_even_power(self):
        self.assertEqual(Interval(-2, 1) ** 2, Interval(0, 4))
        self.assertEqual(Interval(-2, -1) ** 2, Interval(1, 4))
        self.assertEqual(Interval(-2, 1) ** 3, Interval(-8, 1))

    def test_overlaps(self):
        a = Interval(0, 1)
        b = Interval(1, 2)
        self.assertTrue(a.overlaps(b))
        self.assertFalse(a.overlaps(Interval(3)))

    def test_horner(self):
        # x^2 - 2 on [1, 2]
        value = horner([Fraction(-2), 0, 1], Interval(1, 2))
        self.assertTrue(value.contains_zero())
        self.assertEqual(horner([Fraction(-2), 0, 1], Fraction(3)), 7)

    def test_box_width(self):
        self.assertEqual(box_width([Interval(0, 1), Interval(0, Fraction(1, 4))]), 1)
        self.assertEqual(as_interval(3), Interval(3))


if __name__ == '__main__':
    unittest.main()
